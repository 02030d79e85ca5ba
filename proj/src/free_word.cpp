#include "xlk/free_word.hpp"

namespace xlk {

FreeWord::FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_)
    if (l.exp != 1 && l.exp != -1) throw Error(ErrorKind::Domain, "letter exponent must be +1 or -1");
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exp = -l.exp;
  return FreeWord(std::move(out));
}

FreeWord FreeWord::reduced() const {
  std::vector<Letter> st;
  for (const auto& l : letters_) {
    if (!st.empty() && st.back().gen == l.gen && st.back().exp == -l.exp) st.pop_back();
    else st.push_back(l);
  }
  return FreeWord(std::move(st));
}

bool FreeWord::is_reduced() const {
  for (std::size_t k = 1; k < letters_.size(); ++k)
    if (letters_[k].gen == letters_[k - 1].gen && letters_[k].exp == -letters_[k - 1].exp) return false;
  return true;
}

int FreeWord::exponent_sum(int g) const {
  int s = 0;
  for (const auto& l : letters_)
    if (l.gen == g) s += l.exp;
  return s;
}

FreeWord FreeWord::substitute(const std::map<int, FreeWord>& images) const {
  std::vector<Letter> out;
  for (const auto& l : letters_) {
    auto it = images.find(l.gen);
    if (it == images.end()) {
      out.push_back(l);
      continue;
    }
    const FreeWord& img = l.exp > 0 ? it->second : it->second.inverse();
    out.insert(out.end(), img.letters_.begin(), img.letters_.end());
  }
  return FreeWord(std::move(out)).reduced();
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), o.letters_.begin(), o.letters_.end());
  return FreeWord(std::move(out));
}

std::string FreeWord::to_string(const std::map<int, std::string>& names) const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const auto& l : letters_) {
    if (!s.empty()) s += " ";
    auto it = names.find(l.gen);
    s += it != names.end() ? it->second : "g" + std::to_string(l.gen);
    if (l.exp < 0) s += "^-1";
  }
  return s;
}

}  // namespace xlk

#include "xlk/braid.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace xlk {

BraidWord::BraidWord(int n, std::vector<BraidLetter> letters) : n_(n), letters_(std::move(letters)) {
  if (n < 2) throw Error(ErrorKind::Domain, "braid needs at least 2 strands");
  for (const auto& l : letters_) {
    if (l.i < 1 || l.i > n - 1)
      throw Error(ErrorKind::Domain, "generator index " + std::to_string(l.i) + " out of range for B" + std::to_string(n));
    if (l.exp != 1 && l.exp != -1) throw Error(ErrorKind::Domain, "braid letter exponent must be +1 or -1");
  }
}

BraidWord BraidWord::parse(const std::string& text, int n) {
  std::istringstream is(text);
  std::string tok;
  std::vector<BraidLetter> out;
  while (is >> tok) {
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S'))
      throw Error(ErrorKind::Parse, "bad braid token '" + tok + "'");
    for (std::size_t k = 1; k < tok.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(tok[k]))) throw Error(ErrorKind::Parse, "bad braid token '" + tok + "'");
    out.push_back({std::stoi(tok.substr(1)), tok[0] == 's' ? 1 : -1});
  }
  return BraidWord(n, std::move(out));
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  if (n_ != o.n_) throw Error(ErrorKind::StrandMismatch, "composing braids on different strand counts");
  std::vector<BraidLetter> out = letters_;
  out.insert(out.end(), o.letters_.begin(), o.letters_.end());
  return BraidWord(n_, std::move(out));
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exp = -l.exp;
  return BraidWord(n_, std::move(out));
}

BraidWord BraidWord::pow(int k) const {
  BraidWord base = k < 0 ? inverse() : *this;
  BraidWord out(n_, {});
  for (int j = 0; j < std::abs(k); ++j) out = out * base;
  return out;
}

std::string BraidWord::to_string() const {
  std::string s;
  for (const auto& l : letters_) {
    if (!s.empty()) s += " ";
    s += (l.exp > 0 ? "s" : "S") + std::to_string(l.i);
  }
  return s;
}

Involution Involution::parse(const std::string& name, int n) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (s == "reflect") return {InvolutionKind::Reflect, n};
  if (s == "mirror") return {InvolutionKind::Mirror, n};
  throw Error(ErrorKind::Parse, "unknown involution '" + name + "' (expected reflect or mirror)");
}

Perm::Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 1); }

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<int> sorted = img_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k) + 1) throw Error(ErrorKind::Domain, "not a permutation");
}

Perm Perm::then(const Perm& o) const {
  if (o.size() != size()) throw Error(ErrorKind::StrandMismatch, "permutation sizes differ");
  std::vector<int> out(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) out[k] = o(img_[k]);
  return Perm(std::move(out));
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (int s = 1; s <= size(); ++s) {
    if (seen[s - 1]) continue;
    std::vector<int> cyc;
    for (int k = s; !seen[k - 1]; k = (*this)(k)) {
      seen[k - 1] = true;
      cyc.push_back(k);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

bool Perm::is_full_cycle() const { return cycles().size() == 1; }

std::string Perm::to_string() const {
  std::string s;
  for (const auto& c : cycles()) {
    if (c.size() == 1) continue;
    s += "(";
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? " " : "") + std::to_string(c[k]);
    s += ")";
  }
  return s.empty() ? "()" : s;
}

BraidWord star(const BraidWord& b, const Involution& tau) {
  if (tau.n != b.strands()) throw Error(ErrorKind::StrandMismatch, "involution and braid strand counts differ");
  std::vector<BraidLetter> out;
  out.reserve(b.length());
  for (const auto& l : b.letters()) {
    if (tau.kind == InvolutionKind::Reflect) out.push_back({b.strands() - l.i, -l.exp});
    else out.push_back({l.i, -l.exp});
  }
  return BraidWord(b.strands(), std::move(out));
}

Perm perm_image(const BraidWord& b, const std::optional<Involution>& tau) {
  int n = b.strands();
  std::vector<int> pos(n);
  std::iota(pos.begin(), pos.end(), 1);
  // pos[s] = current position of the strand that started at s+1
  for (const auto& l : b.letters())
    for (int& p : pos) {
      if (p == l.i) p = l.i + 1;
      else if (p == l.i + 1) p = l.i;
    }
  Perm out(pos);
  if (tau && tau->kind == InvolutionKind::Reflect) {
    std::vector<int> r(n);
    for (int k = 1; k <= n; ++k) r[k - 1] = n + 1 - k;
    out = out.then(Perm(r));
  }
  return out;
}

bool closure_is_knot(const BraidWord& b, const Involution& tau) {
  if (b.strands() % 2 == 0) return false;
  return perm_image(b, tau).is_full_cycle();
}

std::vector<FreeWord> free_generators(int n) {
  std::vector<FreeWord> g;
  for (int k = 1; k <= n; ++k) g.push_back(FreeWord::generator(k));
  return g;
}

std::map<int, std::string> generator_names(int n) {
  std::map<int, std::string> names{{kLoopGenerator, "a"}};
  for (int k = 1; k <= n; ++k) names[k] = "g" + std::to_string(k);
  return names;
}

namespace {

// letters of sigma_1^+ sigma_2^- sigma_3^+ ... sigma_{p-1}^-
int alternating_sign(int i) { return i % 2 ? 1 : -1; }

}  // namespace

TurksHead turks_head(int p, int q) {
  if (p < 3 || q < 3 || p % 2 == 0 || q % 2 == 0)
    throw Error(ErrorKind::Parity, "Turk's head parameters must be odd and at least 3");
  std::vector<BraidLetter> base, odd, even;
  for (int i = 1; i < p; ++i) {
    base.push_back({i, alternating_sign(i)});
    (i % 2 ? odd : even).push_back({i, alternating_sign(i)});
  }
  BraidWord x(p, base);
  BraidWord oe(p, odd);
  oe = oe * BraidWord(p, even);
  BraidWord half = oe.pow((q - 1) / 2) * BraidWord(p, odd);

  // Each generator occurs once in both x and O*E, so each word is fixed up to
  // commutation by which of i, i+1 comes first. Moving a leading letter to
  // the back is a conjugation; search those moves from x's ordering to O*E's.
  int m = p - 1;
  using State = std::vector<bool>;  // edge e: letter e precedes letter e+1
  State start(m - 1, true), target(m - 1);
  for (int e = 1; e < m; ++e) target[e - 1] = (e % 2 == 1);
  std::map<State, std::pair<State, int>> parent;
  std::queue<State> todo;
  parent[start] = {start, 0};
  todo.push(start);
  while (!todo.empty() && !parent.count(target)) {
    State s = todo.front();
    todo.pop();
    for (int v = 1; v <= m; ++v) {
      bool source = (v == 1 || !s[v - 2]) && (v == m || s[v - 1]);
      if (!source) continue;
      State t = s;
      if (v > 1) t[v - 2] = true;
      if (v < m) t[v - 1] = false;
      if (parent.emplace(t, std::make_pair(s, v)).second) todo.push(t);
    }
  }
  std::vector<BraidLetter> conj;
  for (State s = target; s != start; s = parent[s].first) {
    int v = parent[s].second;
    conj.push_back({v, alternating_sign(v)});
  }
  std::reverse(conj.begin(), conj.end());
  return {x.pow(q), half, BraidWord(p, conj)};
}

std::vector<FreeWord> loop_conjugation(const BraidWord& b, const Involution& tau) {
  int n = b.strands();
  auto gens = free_generators(n);
  auto hb = artin_act(b, gens);
  auto theta = involution_act(tau, gens);
  std::map<int, FreeWord> images;
  for (int k = 1; k <= n; ++k) images[k] = hb[k - 1];
  std::vector<FreeWord> out;
  for (const auto& t : theta) out.push_back(t.substitute(images));
  return out;
}

FreeWord strand_holonomy(const BraidWord& b, const Involution& tau, int i) {
  int n = b.strands();
  if (!closure_is_knot(b, tau)) throw Error(ErrorKind::NotAKnot, "closure of b*star(b) is not a knot");
  if (i < 1 || i > n) throw Error(ErrorKind::Domain, "strand index out of range");
  auto psi = loop_conjugation(b, tau);
  // psi_k = w g_s^-1 w^-1; record s and the step word e_k = w^-1 a
  std::vector<int> next(n + 1);
  std::vector<FreeWord> step(n + 1);
  for (int k = 1; k <= n; ++k) {
    const auto& ls = psi[k - 1].letters();
    std::size_t len = ls.size(), h = len / 2;
    bool ok = len % 2 == 1 && ls[h].exp == -1;
    for (std::size_t j = 0; ok && j < h; ++j)
      ok = ls[j].gen == ls[len - 1 - j].gen && ls[j].exp == -ls[len - 1 - j].exp;
    if (!ok) throw Error(ErrorKind::Convention, "loop conjugate of g" + std::to_string(k) + " is not a conjugate of an inverse generator");
    next[k] = ls[h].gen;
    FreeWord w(std::vector<Letter>(ls.begin(), ls.begin() + h));
    step[k] = w.inverse() * FreeWord::generator(kLoopGenerator);
  }
  FreeWord u;
  int k = i, count = 0;
  do {
    u = step[k] * u;
    k = next[k];
    ++count;
  } while (k != i && count <= n);
  if (count != n) throw Error(ErrorKind::Convention, "strand permutation is not an n-cycle");
  return u.reduced();
}

}  // namespace xlk

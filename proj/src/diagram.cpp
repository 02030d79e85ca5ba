#include "xlk/diagram.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>

#include "xlk/errors.hpp"
#include "xlk/gaussian.hpp"

namespace xlk {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) {
    while (p[a] != a) a = p[a] = p[p[a]];
    return a;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

PDCode::PDCode(std::vector<PDCrossing> crossings, std::string name, Json meta)
    : name_(std::move(name)), meta_(std::move(meta)), xs_(std::move(crossings)) {
  derive();
}

int PDCode::crossing_index(const std::string& label) const {
  for (std::size_t i = 0; i < xs_.size(); ++i)
    if (xs_[i].label == label) return static_cast<int>(i);
  throw Error(ErrorKind::Parse, "no crossing labelled " + label);
}

SlotRef PDCode::edge_head(int edge) const {
  auto it = occ_.find(edge);
  if (it == occ_.end()) throw Error(ErrorKind::Parse, "unknown edge " + std::to_string(edge));
  return it->second[1];
}

SlotRef PDCode::edge_tail(int edge) const {
  auto it = occ_.find(edge);
  if (it == occ_.end()) throw Error(ErrorKind::Parse, "unknown edge " + std::to_string(edge));
  return it->second[0];
}

int PDCode::arc_of_edge(int edge) const {
  auto it = edge_arc_.find(edge);
  if (it == edge_arc_.end()) throw Error(ErrorKind::Parse, "unknown edge " + std::to_string(edge));
  return it->second;
}

int PDCode::component_of_edge(int edge) const {
  auto it = edge_comp_.find(edge);
  if (it == edge_comp_.end()) throw Error(ErrorKind::Parse, "unknown edge " + std::to_string(edge));
  return it->second;
}

void PDCode::derive() {
  if (xs_.empty()) throw Error(ErrorKind::Parse, "diagram has no crossings");
  std::map<int, std::vector<SlotRef>> seen;
  std::set<std::string> labels;
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (!labels.insert(xs_[i].label).second)
      throw Error(ErrorKind::Parse, "duplicate crossing label " + xs_[i].label);
    for (int s = 0; s < 4; ++s) seen[xs_[i].e[s]].push_back({static_cast<int>(i), s});
  }
  edge_labels_.clear();
  for (auto& [e, refs] : seen) {
    if (refs.size() != 2)
      throw Error(ErrorKind::Parse, "edge " + std::to_string(e) + " must appear exactly twice");
    edge_labels_.push_back(e);
  }

  // Orientation: the under strand enters at slot 0; the over strand direction
  // follows from walking the component.
  std::map<int, std::array<SlotRef, 2>> occ;
  auto other = [&](int e, SlotRef r) {
    auto& v = seen[e];
    return v[0] == r ? v[1] : v[0];
  };
  components_.clear();
  edge_comp_.clear();
  std::set<int> done;
  for (int start : edge_labels_) {
    if (done.count(start)) continue;
    // find a traversal direction: prefer an occurrence at an under slot 0
    // (the edge then enters there) or at under slot 2 (it leaves there)
    SlotRef head{-1, -1};
    // walk both directions from start to find an under passage
    for (SlotRef r : seen[start]) {
      if (r.slot == 0) { head = r; break; }
      if (r.slot == 2) { head = other(start, r); break; }
    }
    if (head.crossing < 0) {
      // search the component for an under passage
      SlotRef cur = seen[start][0];
      int e = start;
      for (std::size_t guard = 0; guard < 4 * xs_.size() + 4; ++guard) {
        SlotRef nxt{cur.crossing, (cur.slot + 2) % 4};
        int e2 = xs_[nxt.crossing].e[nxt.slot];
        SlotRef far = other(e2, nxt);
        if (far.slot == 0 || far.slot == 2) {
          // direction fixed by this passage
          bool forward = far.slot == 0;
          head = forward ? seen[start][0] : other(start, seen[start][0]);
          break;
        }
        cur = far;
        e = e2;
        if (e == start) break;
      }
      if (head.crossing < 0) head = seen[start][0];  // never passes under
    }
    std::vector<int> comp;
    int e = start;
    SlotRef h = head;
    while (!done.count(e)) {
      done.insert(e);
      comp.push_back(e);
      occ[e] = {other(e, h), h};
      SlotRef out{h.crossing, (h.slot + 2) % 4};
      int e2 = xs_[out.crossing].e[out.slot];
      h = other(e2, out);
      e = e2;
    }
    if (e != start) throw Error(ErrorKind::Orientation, "inconsistent traversal");
    int cid = static_cast<int>(components_.size());
    for (int x : comp) edge_comp_[x] = cid;
    components_.push_back(comp);
  }
  occ_ = occ;

  // check under orientation and compute signs
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    auto& x = xs_[i];
    SlotRef s0{static_cast<int>(i), 0}, s1{static_cast<int>(i), 1}, s3{static_cast<int>(i), 3};
    if (!(occ_[x.e[0]][1] == s0))
      throw Error(ErrorKind::Orientation, "under strand must enter at slot 0 at " + x.label);
    int sign;
    if (occ_[x.e[3]][1] == s3)
      sign = +1;
    else if (occ_[x.e[1]][1] == s1)
      sign = -1;
    else
      throw Error(ErrorKind::Orientation, "over strand direction undefined at " + x.label);
    if (x.sign != 0 && x.sign != sign)
      throw Error(ErrorKind::Orientation, "sign field disagrees with orientation at " + x.label);
    x.sign = sign;
  }

  // arcs: edges joined through over slots
  std::map<int, int> idx;
  for (std::size_t k = 0; k < edge_labels_.size(); ++k) idx[edge_labels_[k]] = static_cast<int>(k);
  UnionFind uf(static_cast<int>(edge_labels_.size()));
  for (auto& x : xs_) uf.unite(idx[x.e[1]], idx[x.e[3]]);
  std::map<int, int> root_arc;
  arc_edges_.clear();
  edge_arc_.clear();
  for (int e : edge_labels_) {  // ascending labels give deterministic arc ids
    int r = uf.find(idx[e]);
    auto it = root_arc.find(r);
    if (it == root_arc.end()) {
      it = root_arc.emplace(r, static_cast<int>(arc_edges_.size())).first;
      arc_edges_.emplace_back();
    }
    arc_edges_[it->second].push_back(e);
    edge_arc_[e] = it->second;
  }
  wirt_.clear();
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    auto& x = xs_[i];
    wirt_.push_back({static_cast<int>(i), edge_arc_[x.e[1]], edge_arc_[x.e[0]], edge_arc_[x.e[2]], x.sign});
  }
}

PDCode PDCode::from_json(const Json& j) {
  if (!j.is_object() || j.value("format", "") != "xlk-pd")
    throw Error(ErrorKind::Parse, "expected format xlk-pd");
  if (j.value("version", 0) != 1) throw Error(ErrorKind::Parse, "unsupported pd version");
  if (!j.contains("crossings") || !j["crossings"].is_array())
    throw Error(ErrorKind::Parse, "missing crossings array");
  std::vector<PDCrossing> xs;
  int n = 0;
  for (auto& c : j["crossings"]) {
    PDCrossing x;
    x.label = c.contains("label") ? c["label"].get<std::string>() : "x" + std::to_string(n);
    auto e = c.at("edges");
    if (!e.is_array() || e.size() != 4) throw Error(ErrorKind::Parse, "crossing needs 4 edges");
    for (int s = 0; s < 4; ++s) x.e[s] = e[s].get<int>();
    x.sign = c.value("sign", 0);
    if (x.sign != 0 && x.sign != 1 && x.sign != -1) throw Error(ErrorKind::Parse, "sign must be +1 or -1");
    xs.push_back(x);
    ++n;
  }
  return PDCode(std::move(xs), j.value("name", ""), j.value("meta", Json::object()));
}

PDCode PDCode::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("bad json in ") + path + ": " + ex.what());
  }
  return from_json(j);
}

Json PDCode::to_json() const {
  Json j;
  j["format"] = "xlk-pd";
  j["version"] = 1;
  j["name"] = name_;
  Json xs = Json::array();
  for (auto& x : xs_) xs.push_back({{"label", x.label}, {"edges", x.e}, {"sign", x.sign}});
  j["crossings"] = xs;
  if (!meta_.empty()) j["meta"] = meta_;
  return j;
}

// ---- builder ----

int DiagramBuilder::add_crossing(const std::string& label, bool over13) {
  xs.push_back({label, over13});
  return static_cast<int>(xs.size()) - 1;
}

int DiagramBuilder::add_edge(const End& a, const End& b, int label) {
  if (label == 0) label = next_label;
  next_label = std::max(next_label, label + 1);
  edges.push_back({label, a, b});
  return static_cast<int>(edges.size()) - 1;
}

std::pair<int, int> DiagramBuilder::find_end(const End& e) const {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].a == e) return {static_cast<int>(i), 0};
    if (edges[i].b == e) return {static_cast<int>(i), 1};
  }
  throw Error(ErrorKind::Parse, "dangling end");
}

DiagramBuilder DiagramBuilder::from_pd(const PDCode& pd) {
  DiagramBuilder b;
  for (auto& x : pd.crossings()) b.add_crossing(x.label, true);
  for (int e : pd.edges()) {
    SlotRef t = pd.edge_tail(e), h = pd.edge_head(e);
    b.add_edge(b.slot(t.crossing, t.slot), b.slot(h.crossing, h.slot), e);
  }
  return b;
}

PDCode DiagramBuilder::to_pd(const std::string& name, const std::vector<std::pair<int, std::string>>& reference) const {
  for (auto& e : edges)
    if (e.a.x < 0 || e.b.x < 0) throw Error(ErrorKind::Parse, "diagram still has boundary points");
  // slot table: (crossing, slot) -> (edge index, side)
  std::map<std::pair<int, int>, std::pair<int, int>> at;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    at[{edges[i].a.x, edges[i].a.slot}] = {static_cast<int>(i), 0};
    at[{edges[i].b.x, edges[i].b.slot}] = {static_cast<int>(i), 1};
  }
  // dir[i] = side the edge leaves from
  std::vector<int> dir(edges.size(), -1);
  auto end_of = [&](int i, int side) { return side == 0 ? edges[i].a : edges[i].b; };
  auto walk = [&](int i, int from) {
    while (dir[i] < 0) {
      dir[i] = from;
      End h = end_of(i, 1 - from);
      auto [j, s] = at.at({h.x, (h.slot + 2) % 4});
      i = j;
      from = s;
    }
  };
  // referenced components first
  for (auto& [label, xl] : reference) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].label != label || dir[i] >= 0) continue;
      if (xs[edges[i].b.x].label == xl)
        walk(static_cast<int>(i), 0);
      else if (xs[edges[i].a.x].label == xl)
        walk(static_cast<int>(i), 1);
    }
  }
  // remaining: first under passage keeps its given slot orientation
  for (std::size_t x = 0; x < xs.size(); ++x) {
    int s0 = xs[x].over13 ? 0 : 1;
    auto [i, side] = at.at({static_cast<int>(x), s0});
    if (dir[i] >= 0) continue;
    walk(i, 1 - side);  // edge enters x at slot s0
  }
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (dir[i] < 0) walk(static_cast<int>(i), 0);

  std::vector<PDCrossing> out(xs.size());
  for (std::size_t x = 0; x < xs.size(); ++x) {
    out[x].label = xs[x].label;
    std::array<int, 4> raw{};
    std::array<bool, 4> incoming{};
    for (int s = 0; s < 4; ++s) {
      auto [i, side] = at.at({static_cast<int>(x), s});
      raw[s] = edges[i].label;
      incoming[s] = dir[i] != side;
    }
    int u = xs[x].over13 ? 0 : 1;
    if (!incoming[u]) u += 2;
    for (int s = 0; s < 4; ++s) out[x].e[s] = raw[(u + s) % 4];
  }
  return PDCode(std::move(out), name);
}

// ---- representations on diagrams ----

double entry_scale(const RepAssignment& rep) {
  double s = 1;
  for (auto& [arc, M] : rep) s = std::max(s, max_abs(M));
  return s * s;
}

double wirtinger_residual(const PDCode& pd, const RepAssignment& rep) {
  double worst = 0;
  for (auto& r : pd.wirtinger()) {
    auto o = rep.find(r.over), i = rep.find(r.in), u = rep.find(r.out);
    if (o == rep.end() || i == rep.end() || u == rep.end())
      throw Error(ErrorKind::Propagation, "assignment misses an arc at " + pd.crossings()[r.crossing].label);
    CMat pred = signed_power(o->second, r.sign) * i->second * signed_power(o->second, -r.sign);
    worst = std::max(worst, max_abs_diff(pred, u->second));
  }
  return worst;
}

Propagation propagate(const PDCode& pd, const RepAssignment& seeds) {
  Propagation res;
  res.rep = seeds;
  auto& col = res.rep;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& r : pd.wirtinger()) {
      auto o = col.find(r.over);
      if (o == col.end()) continue;
      bool hi = col.count(r.in), hu = col.count(r.out);
      if (hi && !hu) {
        col[r.out] = signed_power(o->second, r.sign) * col[r.in] * signed_power(o->second, -r.sign);
        changed = true;
      } else if (hu && !hi) {
        col[r.in] = signed_power(o->second, -r.sign) * col[r.out] * signed_power(o->second, r.sign);
        changed = true;
      }
    }
  }
  res.complete = static_cast<int>(col.size()) == pd.num_arcs();
  for (auto& r : pd.wirtinger()) {
    if (!col.count(r.over) || !col.count(r.in) || !col.count(r.out)) continue;
    CMat pred = signed_power(col[r.over], r.sign) * col[r.in] * signed_power(col[r.over], -r.sign);
    double d = max_abs_diff(pred, col[r.out]);
    if (res.worst_crossing < 0 || d > res.residual) {
      res.worst_crossing = r.crossing;
      res.residual = d;
    }
  }
  return res;
}

long knot_determinant(const PDCode& pd) {
  int n = pd.num_arcs();
  if (n <= 1) return 1;
  std::vector<std::vector<mpq_class>> m(pd.size(), std::vector<mpq_class>(n, 0));
  for (std::size_t k = 0; k < pd.wirtinger().size(); ++k) {
    auto& r = pd.wirtinger()[k];
    m[k][r.over] += 2;
    m[k][r.in] -= 1;
    m[k][r.out] -= 1;
  }
  // drop first row and column
  int d = n - 1;
  int rows = static_cast<int>(pd.size()) - 1;
  if (rows < d) return 0;
  std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a[i][j] = m[i + 1][j + 1];
  mpq_class det = 1;
  for (int c = 0; c < d; ++c) {
    int p = -1;
    for (int r = c; r < d; ++r)
      if (a[r][c] != 0) { p = r; break; }
    if (p < 0) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < d; ++r) {
      if (a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[c][c];
      for (int j = c; j < d; ++j) a[r][j] -= f * a[c][j];
    }
  }
  mpz_class v = abs(det.get_num());
  return v.get_si();
}

}  // namespace xlk

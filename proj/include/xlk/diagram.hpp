#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "xlk/mat2.hpp"

namespace xlk {

using Json = nlohmann::json;

// Edge labels in counterclockwise order. Slots 0 and 2 carry the under
// strand, slot 0 being the incoming end. sign = +1 when the over strand
// runs from slot 3 to slot 1.
struct PDCrossing {
  std::string label;
  std::array<int, 4> e{};
  int sign = 0;
};

struct WirtRecord {
  int crossing;
  int over, in, out;  // arc ids
  int sign;
};

struct SlotRef {
  int crossing;
  int slot;
  bool operator==(const SlotRef& o) const { return crossing == o.crossing && slot == o.slot; }
};

// Oriented planar diagram with derived arcs, components and Wirtinger data.
class PDCode {
 public:
  PDCode() = default;
  // Crossings must already be oriented; signs are recomputed and, when
  // nonzero on input, checked.
  explicit PDCode(std::vector<PDCrossing> crossings, std::string name = "", Json meta = Json::object());

  static PDCode from_json(const Json& j);
  static PDCode load(const std::string& path);
  Json to_json() const;

  const std::string& name() const { return name_; }
  const Json& meta() const { return meta_; }
  void set_meta(Json m) { meta_ = std::move(m); }
  const std::vector<PDCrossing>& crossings() const { return xs_; }
  std::size_t size() const { return xs_.size(); }
  int crossing_index(const std::string& label) const;

  const std::vector<int>& edges() const { return edge_labels_; }
  SlotRef edge_head(int edge) const;  // where the edge enters a crossing
  SlotRef edge_tail(int edge) const;  // where it leaves one

  int num_arcs() const { return static_cast<int>(arc_edges_.size()); }
  int arc_of_edge(int edge) const;
  const std::vector<int>& arc_edges(int arc) const { return arc_edges_[arc]; }
  int num_components() const { return static_cast<int>(components_.size()); }
  // edges of each component in traversal order
  const std::vector<std::vector<int>>& components() const { return components_; }
  int component_of_edge(int edge) const;
  int component_of_arc(int arc) const { return component_of_edge(arc_edges_[arc].front()); }

  const std::vector<WirtRecord>& wirtinger() const { return wirt_; }

 private:
  void derive();

  std::string name_;
  Json meta_ = Json::object();
  std::vector<PDCrossing> xs_;
  std::vector<int> edge_labels_;
  std::map<int, std::array<SlotRef, 2>> occ_;  // [tail, head]
  std::map<int, int> edge_arc_;
  std::map<int, int> edge_comp_;
  std::vector<std::vector<int>> arc_edges_;
  std::vector<std::vector<int>> components_;
  std::vector<WirtRecord> wirt_;
};

// Unoriented diagram used while building tangles and doing surgery.
// A crossing has slots 0..3 counterclockwise; over13 says slots 1, 3 are over.
struct DiagramBuilder {
  struct End {
    int x = -1;  // crossing index, or -1 for a boundary point
    int slot = 0;
    std::string boundary;
    bool operator==(const End& o) const { return x == o.x && (x < 0 ? boundary == o.boundary : slot == o.slot); }
  };
  struct Edge {
    int label;
    End a, b;
  };
  struct Cross {
    std::string label;
    bool over13 = true;
  };
  std::vector<Cross> xs;
  std::vector<Edge> edges;
  int next_label = 1;

  int add_crossing(const std::string& label, bool over13);
  int add_edge(const End& a, const End& b, int label = 0);
  // edge holding the given end; returns index and which side
  std::pair<int, int> find_end(const End& e) const;
  End boundary(const std::string& name) const { return End{-1, 0, name}; }
  End slot(int x, int s) const { return End{x, s, ""}; }

  static DiagramBuilder from_pd(const PDCode& pd);
  // Orient and convert. reference = (edge label, crossing label it should
  // enter) fixes a component's direction; other components keep the input
  // direction of their first under passage.
  PDCode to_pd(const std::string& name = "", const std::vector<std::pair<int, std::string>>& reference = {}) const;
};

using RepAssignment = std::map<int, CMat>;  // arc id -> matrix

inline CMat signed_power(const CMat& m, int s) { return s > 0 ? m : m.inverse(); }

// max(1, largest entry)^2: rounding in a conjugation grows like this
double entry_scale(const RepAssignment& rep);

double wirtinger_residual(const PDCode& pd, const RepAssignment& rep);

struct Propagation {
  RepAssignment rep;
  bool complete = false;
  double residual = 0;
  int worst_crossing = -1;
};

// Breadth-first Wirtinger propagation from seeded arcs.
Propagation propagate(const PDCode& pd, const RepAssignment& seeds);

// |det| of the Fox coloring matrix with one row and column removed.
long knot_determinant(const PDCode& pd);

}  // namespace xlk

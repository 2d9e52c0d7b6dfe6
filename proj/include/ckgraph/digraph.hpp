#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ckgraph {

inline constexpr int kUnreachable = -1;

struct Diameter {
  enum class Kind { finite, infinite, nonexistent };

  Kind kind = Kind::nonexistent;
  long long value = 0;  // meaningful only when kind == finite

  static Diameter finite(long long n) { return {Kind::finite, n}; }
  static Diameter infinite() { return {Kind::infinite, 0}; }
  static Diameter nonexistent() { return {Kind::nonexistent, 0}; }

  std::string str() const;  // "FINITE(7)" | "INFINITE" | "NONEXISTENT"

  bool operator==(const Diameter&) const = default;
};

struct DegreeProfile {
  std::size_t min_out = 0;
  std::size_t max_out = 0;
  std::size_t min_in = 0;
  std::size_t max_in = 0;
  bool is_out_regular = false;
  bool is_regular = false;
};

using Arc = std::pair<std::string, std::string>;

// Chooses a replacement tail v' for a dropped arc (v, w) when building a
// partial line digraph; called with the vertex names of v and w.
using ChooseFn = std::function<std::string(const std::string& v, const std::string& w)>;

// An immutable labeled digraph. Vertices are identified by name and indexed
// in label order (numeric sequence order for names that parse as labels, byte
// order otherwise); adjacency is kept in both directions. Loops are allowed,
// multiple arcs are not.
class Digraph {
 public:
  Digraph() = default;

  // Deduplicates vertices and arcs; throws std::invalid_argument when an arc
  // endpoint is not a listed vertex.
  static Digraph build(std::vector<std::string> vertices, std::vector<Arc> arcs);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t arc_count() const { return arc_count_; }
  bool empty() const { return names_.empty(); }

  const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
  const std::vector<std::string>& names() const { return names_; }

  // Index of a vertex by name; throws std::out_of_range when absent.
  int index(std::string_view vertex_name) const;
  std::optional<int> find(std::string_view vertex_name) const;

  const std::vector<int>& out_neighbors(int v) const { return out_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& in_neighbors(int v) const { return in_[static_cast<std::size_t>(v)]; }
  bool has_arc(int u, int v) const;

  // All arcs as name pairs, sorted by (tail, head) vertex index.
  std::vector<Arc> arcs() const;

  // Equality of vertex name sets and arc sets.
  bool operator==(const Digraph& other) const {
    return names_ == other.names_ && out_ == other.out_;
  }

  // Internal constructor from a sorted, deduplicated name list plus arc index
  // pairs. Used by the functors; build() is the checked public entry.
  static Digraph from_sorted(std::vector<std::string> sorted_names,
                             std::vector<std::pair<int, int>> arc_ids);

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::size_t arc_count_ = 0;
};

// Label order used for vertex indexing: parseable names by symbol sequence,
// then byte order.
bool name_less(const std::string& a, const std::string& b);

DegreeProfile degree_profile(const Digraph& g);

// Exact directed shortest path lengths from source; kUnreachable marks
// vertices with no directed path. Throws std::out_of_range for an unknown
// source name.
std::vector<int> bfs_distances(const Digraph& g, int source);
std::vector<int> bfs_distances(const Digraph& g, std::string_view source);

// NONEXISTENT for the empty digraph, INFINITE when some ordered pair is
// unreachable, otherwise FINITE(max eccentricity). Runs BFS from every
// vertex, in parallel for large graphs; the result is schedule-independent.
Diameter diameter(const Digraph& g);

// Partition into maximal mutually reachable classes. Each class is sorted by
// vertex index and classes are ordered by their smallest member.
std::vector<std::vector<int>> strongly_connected_components(const Digraph& g);

// True when g is a single directed cycle (every vertex has in- and
// out-degree 1 and the digraph is strongly connected).
bool is_directed_cycle(const Digraph& g);

// Vertices of the result are the arcs of g; uv is adjacent to vw for every
// w in Gamma+(v). An arc between equal-length labels that overlap in all but
// one symbol is named by the merged sequence, any other arc as "u|v".
Digraph line_digraph(const Digraph& g);

// t-fold application of line_digraph; t = 0 returns g unchanged.
Digraph iterated_line_digraph(const Digraph& g, int t);

// Partial line digraph on the kept arcs. keep must be a subset of g's arcs
// whose heads cover every vertex (std::invalid_argument otherwise). A vertex
// uv is adjacent to v'w for each w in Gamma+(v), where v' = v when vw is
// kept and otherwise choose(v, w), which must return an in-neighbor of w
// with v'w kept (std::logic_error otherwise). The default choose rule picks
// the smallest such v' in label order.
Digraph partial_line_digraph(const Digraph& g, const std::vector<Arc>& keep);
Digraph partial_line_digraph(const Digraph& g, const std::vector<Arc>& keep,
                             const ChooseFn& choose);

}  // namespace ckgraph

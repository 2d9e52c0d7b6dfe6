#include "ckgraph/digraph.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "ckgraph/label.hpp"

namespace ckgraph {

std::string Diameter::str() const {
  switch (kind) {
    case Kind::finite:
      return "FINITE(" + std::to_string(value) + ")";
    case Kind::infinite:
      return "INFINITE";
    case Kind::nonexistent:
      return "NONEXISTENT";
  }
  return "NONEXISTENT";
}

bool name_less(const std::string& a, const std::string& b) {
  const auto la = Label::try_parse(a);
  const auto lb = Label::try_parse(b);
  if (la.has_value() != lb.has_value()) return la.has_value();
  if (la && lb && la->symbols() != lb->symbols()) return la->symbols() < lb->symbols();
  return a < b;
}

Digraph Digraph::build(std::vector<std::string> vertices, std::vector<Arc> arcs) {
  // Decorate-sort with parsed keys so each name is parsed once.
  struct Keyed {
    std::optional<Label> key;
    std::string name;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(vertices.size());
  for (auto& v : vertices) keyed.push_back({Label::try_parse(v), std::move(v)});
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& x, const Keyed& y) {
    if (x.key.has_value() != y.key.has_value()) return x.key.has_value();
    if (x.key && y.key && x.key->symbols() != y.key->symbols())
      return x.key->symbols() < y.key->symbols();
    return x.name < y.name;
  });
  std::vector<std::string> names;
  names.reserve(keyed.size());
  for (auto& k : keyed)
    if (names.empty() || names.back() != k.name) names.push_back(std::move(k.name));

  std::unordered_map<std::string_view, int> index;
  index.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], static_cast<int>(i));

  std::vector<std::pair<int, int>> arc_ids;
  arc_ids.reserve(arcs.size());
  for (const auto& [tail, head] : arcs) {
    auto it = index.find(tail);
    auto jt = index.find(head);
    if (it == index.end() || jt == index.end())
      throw std::invalid_argument("arc endpoint \"" + (it == index.end() ? tail : head) +
                                  "\" is not a vertex");
    arc_ids.emplace_back(it->second, jt->second);
  }
  return from_sorted(std::move(names), std::move(arc_ids));
}

Digraph Digraph::from_sorted(std::vector<std::string> sorted_names,
                             std::vector<std::pair<int, int>> arc_ids) {
  Digraph g;
  g.names_ = std::move(sorted_names);
  const std::size_t n = g.names_.size();
  std::sort(arc_ids.begin(), arc_ids.end());
  arc_ids.erase(std::unique(arc_ids.begin(), arc_ids.end()), arc_ids.end());
  g.out_.assign(n, {});
  g.in_.assign(n, {});
  std::vector<std::size_t> out_deg(n, 0), in_deg(n, 0);
  for (const auto& [u, v] : arc_ids) {
    ++out_deg[static_cast<std::size_t>(u)];
    ++in_deg[static_cast<std::size_t>(v)];
  }
  for (std::size_t v = 0; v < n; ++v) {
    g.out_[v].reserve(out_deg[v]);
    g.in_[v].reserve(in_deg[v]);
  }
  for (const auto& [u, v] : arc_ids) {
    g.out_[static_cast<std::size_t>(u)].push_back(v);
    g.in_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& lst : g.in_) std::sort(lst.begin(), lst.end());
  g.arc_count_ = arc_ids.size();
  return g;
}

int Digraph::index(std::string_view vertex_name) const {
  auto found = find(vertex_name);
  if (!found) throw std::out_of_range("unknown vertex \"" + std::string(vertex_name) + "\"");
  return *found;
}

std::optional<int> Digraph::find(std::string_view vertex_name) const {
  const std::string target(vertex_name);
  auto it = std::lower_bound(names_.begin(), names_.end(), target, name_less);
  if (it == names_.end() || *it != target) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

bool Digraph::has_arc(int u, int v) const {
  const auto& lst = out_[static_cast<std::size_t>(u)];
  return std::binary_search(lst.begin(), lst.end(), v);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (std::size_t u = 0; u < out_.size(); ++u)
    for (int v : out_[u]) result.emplace_back(names_[u], names_[static_cast<std::size_t>(v)]);
  return result;
}

DegreeProfile degree_profile(const Digraph& g) {
  DegreeProfile p;
  const std::size_t n = g.vertex_count();
  if (n == 0) {
    p.is_out_regular = true;
    p.is_regular = true;
    return p;
  }
  p.min_out = p.min_in = g.arc_count() + 1;
  for (int v = 0; v < static_cast<int>(n); ++v) {
    const std::size_t dout = g.out_neighbors(v).size();
    const std::size_t din = g.in_neighbors(v).size();
    p.min_out = std::min(p.min_out, dout);
    p.max_out = std::max(p.max_out, dout);
    p.min_in = std::min(p.min_in, din);
    p.max_in = std::max(p.max_in, din);
  }
  p.is_out_regular = p.min_out == p.max_out;
  p.is_regular = p.is_out_regular && p.min_in == p.max_in && p.min_in == p.min_out;
  return p;
}

namespace {

// BFS into a caller-provided distance buffer; returns the number of reached
// vertices.
std::size_t bfs_into(const Digraph& g, int source, std::vector<int>& dist,
                     std::vector<int>& queue) {
  dist.assign(g.vertex_count(), kUnreachable);
  queue.clear();
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  std::size_t head = 0;
  while (head < queue.size()) {
    const int u = queue[head++];
    const int du = dist[static_cast<std::size_t>(u)];
    for (int w : g.out_neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
        dist[static_cast<std::size_t>(w)] = du + 1;
        queue.push_back(w);
      }
    }
  }
  return queue.size();
}

}  // namespace

std::vector<int> bfs_distances(const Digraph& g, int source) {
  if (source < 0 || static_cast<std::size_t>(source) >= g.vertex_count())
    throw std::out_of_range("bfs source index out of range");
  std::vector<int> dist, queue;
  queue.reserve(g.vertex_count());
  bfs_into(g, source, dist, queue);
  return dist;
}

std::vector<int> bfs_distances(const Digraph& g, std::string_view source) {
  return bfs_distances(g, g.index(source));
}

Diameter diameter(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return Diameter::nonexistent();

  const auto eccentricity_scan = [&g, n](int begin, int end, const std::atomic<bool>& stop,
                                         std::atomic<bool>& unreachable) {
    std::vector<int> dist, queue;
    queue.reserve(n);
    int best = 0;
    for (int s = begin; s < end && !stop.load(std::memory_order_relaxed); ++s) {
      if (bfs_into(g, s, dist, queue) < n) {
        unreachable.store(true, std::memory_order_relaxed);
        return 0;
      }
      best = std::max(best, dist[static_cast<std::size_t>(queue.back())]);
    }
    return best;
  };

  std::atomic<bool> unreachable{false};
  int max_ecc = 0;
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = n >= 512 ? std::min<unsigned>(hw, 8) : 1;
  if (workers <= 1) {
    max_ecc = eccentricity_scan(0, static_cast<int>(n), unreachable, unreachable);
  } else {
    std::vector<std::future<int>> parts;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const int begin = static_cast<int>(std::min(n, w * chunk));
      const int end = static_cast<int>(std::min(n, (w + 1) * chunk));
      if (begin >= end) break;
      parts.push_back(std::async(std::launch::async, eccentricity_scan, begin, end,
                                 std::cref(unreachable), std::ref(unreachable)));
    }
    for (auto& part : parts) max_ecc = std::max(max_ecc, part.get());
  }
  if (unreachable.load()) return Diameter::infinite();
  return Diameter::finite(max_ecc);
}

std::vector<std::vector<int>> strongly_connected_components(const Digraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> order(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  struct Frame {
    int v;
    std::size_t child;
  };
  std::vector<Frame> call;
  int next_order = 0;
  int comp_count = 0;

  for (int start = 0; start < n; ++start) {
    if (order[static_cast<std::size_t>(start)] >= 0) continue;
    call.push_back({start, 0});
    order[static_cast<std::size_t>(start)] = low[static_cast<std::size_t>(start)] = next_order++;
    stack.push_back(start);
    on_stack[static_cast<std::size_t>(start)] = 1;
    while (!call.empty()) {
      Frame& frame = call.back();
      const int v = frame.v;
      const auto& succ = g.out_neighbors(v);
      if (frame.child < succ.size()) {
        const int w = succ[frame.child++];
        if (order[static_cast<std::size_t>(w)] < 0) {
          order[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = next_order++;
          stack.push_back(w);
          on_stack[static_cast<std::size_t>(w)] = 1;
          call.push_back({w, 0});
        } else if (on_stack[static_cast<std::size_t>(w)]) {
          low[static_cast<std::size_t>(v)] =
              std::min(low[static_cast<std::size_t>(v)], order[static_cast<std::size_t>(w)]);
        }
      } else {
        if (low[static_cast<std::size_t>(v)] == order[static_cast<std::size_t>(v)]) {
          while (true) {
            const int w = stack.back();
            stack.pop_back();
            on_stack[static_cast<std::size_t>(w)] = 0;
            comp[static_cast<std::size_t>(w)] = comp_count;
            if (w == v) break;
          }
          ++comp_count;
        }
        call.pop_back();
        if (!call.empty())
          low[static_cast<std::size_t>(call.back().v)] = std::min(
              low[static_cast<std::size_t>(call.back().v)], low[static_cast<std::size_t>(v)]);
      }
    }
  }

  // Renumber so classes appear in order of their smallest vertex.
  std::vector<std::vector<int>> classes(static_cast<std::size_t>(comp_count));
  for (int v = 0; v < n; ++v) classes[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
  std::sort(classes.begin(), classes.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  return classes;
}

bool is_directed_cycle(const Digraph& g) {
  if (g.empty()) return false;
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v)
    if (g.out_neighbors(v).size() != 1 || g.in_neighbors(v).size() != 1) return false;
  return strongly_connected_components(g).size() == 1;
}

namespace {

std::string line_vertex_name(const std::string& u, const std::string& v) {
  const auto lu = Label::try_parse(u);
  const auto lv = Label::try_parse(v);
  if (lu && lv && lu->size() == lv->size()) {
    const std::size_t n = lu->size();
    bool overlap = true;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if ((*lu)[i + 1] != (*lv)[i]) {
        overlap = false;
        break;
      }
    if (overlap) {
      std::vector<Symbol> merged = lu->symbols();
      merged.push_back(lv->back());
      return Label(std::move(merged)).str();
    }
  }
  return u + "|" + v;
}

// Sorts arc names and returns the rank of each arc id, verifying that the
// generated names are pairwise distinct.
std::pair<std::vector<std::string>, std::vector<int>> rank_arc_names(
    std::vector<std::string> arc_names) {
  const std::size_t m = arc_names.size();
  std::vector<int> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = static_cast<int>(i);
  struct Keyed {
    std::optional<Label> key;
    const std::string* name;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(m);
  for (const auto& name : arc_names) keyed.push_back({Label::try_parse(name), &name});
  std::sort(perm.begin(), perm.end(), [&keyed](int a, int b) {
    const Keyed& x = keyed[static_cast<std::size_t>(a)];
    const Keyed& y = keyed[static_cast<std::size_t>(b)];
    if (x.key.has_value() != y.key.has_value()) return x.key.has_value();
    if (x.key && y.key && x.key->symbols() != y.key->symbols())
      return x.key->symbols() < y.key->symbols();
    return *x.name < *y.name;
  });
  std::vector<int> rank(m);
  std::vector<std::string> sorted_names;
  sorted_names.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    const auto id = static_cast<std::size_t>(perm[r]);
    if (r > 0 && arc_names[id] == sorted_names.back())
      throw std::logic_error("line digraph vertex name collision: \"" + arc_names[id] + "\"");
    rank[id] = static_cast<int>(r);
    sorted_names.push_back(std::move(arc_names[id]));
  }
  return {std::move(sorted_names), std::move(rank)};
}

}  // namespace

Digraph line_digraph(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  // Arc ids follow the (tail, head) order of the adjacency lists.
  std::vector<std::size_t> first_arc(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v)
    first_arc[v + 1] = first_arc[v] + g.out_neighbors(static_cast<int>(v)).size();
  const std::size_t m = first_arc[n];

  std::vector<std::string> arc_names;
  arc_names.reserve(m);
  for (std::size_t v = 0; v < n; ++v)
    for (int w : g.out_neighbors(static_cast<int>(v)))
      arc_names.push_back(line_vertex_name(g.name(static_cast<int>(v)), g.name(w)));
  auto [sorted_names, rank] = rank_arc_names(std::move(arc_names));

  const auto arc_id = [&g, &first_arc](int v, int w) {
    const auto& lst = g.out_neighbors(v);
    const auto it = std::lower_bound(lst.begin(), lst.end(), w);
    return first_arc[static_cast<std::size_t>(v)] +
           static_cast<std::size_t>(it - lst.begin());
  };

  std::vector<std::pair<int, int>> arcs;
  for (std::size_t v = 0; v < n; ++v) {
    for (int w : g.out_neighbors(static_cast<int>(v))) {
      const std::size_t a = arc_id(static_cast<int>(v), w);
      for (int x : g.out_neighbors(w))
        arcs.emplace_back(rank[a], rank[arc_id(w, x)]);
    }
  }
  return Digraph::from_sorted(std::move(sorted_names), std::move(arcs));
}

Digraph iterated_line_digraph(const Digraph& g, int t) {
  if (t < 0) throw std::domain_error("iteration count must be nonnegative");
  Digraph result = g;
  for (int i = 0; i < t; ++i) result = line_digraph(result);
  return result;
}

Digraph partial_line_digraph(const Digraph& g, const std::vector<Arc>& keep) {
  return partial_line_digraph(g, keep, ChooseFn{});
}

Digraph partial_line_digraph(const Digraph& g, const std::vector<Arc>& keep,
                             const ChooseFn& choose) {
  const std::size_t n = g.vertex_count();
  std::vector<std::pair<int, int>> kept;
  kept.reserve(keep.size());
  for (const auto& [tail, head] : keep) {
    const int u = g.index(tail);
    const int v = g.index(head);
    if (!g.has_arc(u, v))
      throw std::invalid_argument("kept arc (" + tail + ", " + head + ") is not an arc");
    kept.emplace_back(u, v);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  // Heads of kept arcs must cover every vertex; record the smallest kept
  // in-neighbor per head for the canonical choose rule.
  std::vector<int> canonical_tail(n, -1);
  for (const auto& [u, v] : kept) {
    int& best = canonical_tail[static_cast<std::size_t>(v)];
    if (best < 0 || u < best) best = u;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (canonical_tail[v] < 0)
      throw std::invalid_argument("kept arcs do not cover vertex \"" +
                                  g.name(static_cast<int>(v)) + "\"");

  const auto kept_slot = [&kept](int u, int v) {
    const auto it = std::lower_bound(kept.begin(), kept.end(), std::make_pair(u, v));
    if (it == kept.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - kept.begin());
  };

  std::vector<std::string> slot_names;
  slot_names.reserve(kept.size());
  for (const auto& [u, v] : kept) slot_names.push_back(line_vertex_name(g.name(u), g.name(v)));
  auto [sorted_names, rank] = rank_arc_names(std::move(slot_names));

  std::vector<std::pair<int, int>> arcs;
  for (std::size_t slot = 0; slot < kept.size(); ++slot) {
    const int v = kept[slot].second;
    for (int w : g.out_neighbors(v)) {
      int target = kept_slot(v, w);
      if (target < 0) {
        int vp;
        if (choose) {
          vp = g.index(choose(g.name(v), g.name(w)));
          const auto& preds = g.in_neighbors(w);
          if (!std::binary_search(preds.begin(), preds.end(), vp))
            throw std::logic_error("choose returned a non-in-neighbor of \"" + g.name(w) + "\"");
        } else {
          vp = canonical_tail[static_cast<std::size_t>(w)];
        }
        target = kept_slot(vp, w);
        if (target < 0)
          throw std::logic_error("choose returned a dropped arc into \"" + g.name(w) + "\"");
      }
      arcs.emplace_back(rank[slot], rank[static_cast<std::size_t>(target)]);
    }
  }
  return Digraph::from_sorted(std::move(sorted_names), std::move(arcs));
}

}  // namespace ckgraph

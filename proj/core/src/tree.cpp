#include "hbm/tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace hbm {

AlternatingTree::AlternatingTree(const BipartiteHypergraph& h, VertexId root)
    : root_{root},
      x_deg_(h.a_count(), 0),
      y_deg_(h.a_count(), 0),
      occ_count_(h.b_count(), 0),
      occ_layer_(h.b_count(), 0) {
  if (root >= h.a_count()) throw Error(ErrorCode::IndexOutOfRange, "root " + std::to_string(root));
}

AlternatingTree AlternatingTree::from_layers(const BipartiteHypergraph& h, VertexId root,
                                             std::vector<Layer> layers) {
  AlternatingTree tree(h, root);
  for (auto& layer : layers) tree.push_layer(h, std::move(layer));
  return tree;
}

std::size_t AlternatingTree::occupied_count() const {
  return static_cast<std::size_t>(
      std::count_if(occ_count_.begin(), occ_count_.end(), [](auto c) { return c > 0; }));
}

std::vector<VertexId> AlternatingTree::parent_set(const BipartiteHypergraph& h,
                                                  std::size_t i) const {
  if (i <= 1) return {root_.root};
  std::vector<VertexId> out;
  for (EdgeId f : layer(i - 1).y) out.push_back(h.a_of(f));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void AlternatingTree::account_edge(const BipartiteHypergraph& h, std::size_t i, EdgeId e,
                                   bool is_x, int sign) {
  const VertexId a = h.a_of(e);
  auto& deg = is_x ? x_deg_[a] : y_deg_[a];
  deg = static_cast<std::uint32_t>(static_cast<int>(deg) + sign);
  (is_x ? x_total_ : y_total_) += static_cast<std::size_t>(sign);
  for (VertexId b : h.bs_of(e)) {
    occ_count_[b] = static_cast<std::uint16_t>(occ_count_[b] + sign);
    if (sign > 0) occ_layer_[b] = static_cast<std::uint32_t>(i);
  }
}

void AlternatingTree::account(const BipartiteHypergraph& h, std::size_t i, const Layer& layer,
                              int sign) {
  for (EdgeId e : layer.x) account_edge(h, i, e, true, sign);
  for (EdgeId f : layer.y) account_edge(h, i, f, false, sign);
}

void AlternatingTree::push_layer(const BipartiteHypergraph& h, Layer layer) {
  layers_.push_back(std::move(layer));
  account(h, layers_.size(), layers_.back(), +1);
}

Layer AlternatingTree::pop_layer(const BipartiteHypergraph& h) {
  account(h, layers_.size(), layers_.back(), -1);
  Layer out = std::move(layers_.back());
  layers_.pop_back();
  return out;
}

void AlternatingTree::remove_blocking(const BipartiteHypergraph& h, std::size_t i, EdgeId f) {
  auto& y = layers_[i - 1].y;
  auto it = std::find(y.begin(), y.end(), f);
  if (it == y.end()) {
    throw Error(ErrorCode::NotInMatching,
                "edge " + std::to_string(f) + " not in Y_" + std::to_string(i));
  }
  y.erase(it);
  account_edge(h, i, f, false, -1);
}

void AlternatingTree::replace_layer(const BipartiteHypergraph& h, std::size_t i, Layer layer) {
  account(h, i, layers_[i - 1], -1);
  layers_[i - 1] = std::move(layer);
  account(h, i, layers_[i - 1], +1);
}

std::uint32_t tree_degree(const AlternatingTree& tree, VertexId a) {
  return tree.x_degree(a) + tree.blocking_degree(a);
}

BuildWorkspace::BuildWorkspace(const BipartiteHypergraph& h)
    : b_stamp_(h.b_count(), 0), a_stamp_(h.a_count(), 0), a_count_(h.a_count(), 0) {}

void BuildWorkspace::reset() { ++stamp_; }

std::optional<std::pair<VertexId, EdgeId>> find_addable_edge(
    const BipartiteHypergraph& h, const PartialMatching& m, const AlternatingTree& tree,
    std::span<const VertexId> parent_a_set, const Layer& under_construction,
    std::uint32_t u_bound) {
  std::set<VertexId> local_b;
  std::map<VertexId, std::uint32_t> counts;
  for (EdgeId e : under_construction.x) {
    ++counts[h.a_of(e)];
    for (VertexId b : h.bs_of(e)) local_b.insert(b);
  }
  for (EdgeId f : under_construction.y) {
    for (VertexId b : h.bs_of(f)) local_b.insert(b);
  }
  std::vector<VertexId> parents(parent_a_set.begin(), parent_a_set.end());
  std::sort(parents.begin(), parents.end());
  for (VertexId a : parents) {
    if (counts[a] >= u_bound) continue;
    for (EdgeId e : h.edges_of_a(a)) {
      if (m.contains(e)) continue;
      auto bs = h.bs_of(e);
      bool clear = std::none_of(bs.begin(), bs.end(), [&](VertexId b) {
        return tree.occupied(b) || local_b.count(b) > 0;
      });
      if (clear) return std::make_pair(a, e);
    }
  }
  return std::nullopt;
}

Layer build_layer(const BipartiteHypergraph& h, const PartialMatching& m,
                  const AlternatingTree& tree, std::size_t visible_layers,
                  std::span<const VertexId> parent_a_set, Layer start, std::uint32_t u_bound,
                  BuildWorkspace& ws) {
  ws.reset();
  Layer out = std::move(start);
  for (EdgeId e : out.x) {
    ++ws.count(h.a_of(e));
    for (VertexId b : h.bs_of(e)) ws.mark(b);
  }
  for (EdgeId f : out.y) {
    for (VertexId b : h.bs_of(f)) ws.mark(b);
  }
  auto blocked = [&](VertexId b) { return ws.marked(b) || tree.occupied(b, visible_layers); };

  std::vector<VertexId> parents(parent_a_set.begin(), parent_a_set.end());
  std::sort(parents.begin(), parents.end());
  parents.erase(std::unique(parents.begin(), parents.end()), parents.end());

  // Occupancy only grows and counts only rise, so one ordered pass picks
  // the same edges as repeatedly taking the least addable pair.
  std::vector<EdgeId> blockers;
  for (VertexId a : parents) {
    std::uint32_t& count = ws.count(a);
    for (EdgeId e : h.edges_of_a(a)) {
      if (count >= u_bound) break;
      if (m.contains(e)) continue;
      auto bs = h.bs_of(e);
      if (std::any_of(bs.begin(), bs.end(), blocked)) continue;
      out.x.push_back(e);
      ++count;
      blockers.clear();
      for (VertexId b : bs) {
        ws.mark(b);
        if (EdgeId f = m.edge_of_b(b); f != kNoEdge) blockers.push_back(f);
      }
      std::sort(blockers.begin(), blockers.end());
      blockers.erase(std::unique(blockers.begin(), blockers.end()), blockers.end());
      for (EdgeId f : blockers) {
        out.y.push_back(f);
        for (VertexId b : h.bs_of(f)) ws.mark(b);
      }
    }
  }
  return out;
}

Layer build_layer(const BipartiteHypergraph& h, const PartialMatching& m,
                  const AlternatingTree& tree, std::span<const VertexId> parent_a_set,
                  Layer start, std::uint32_t u_bound) {
  BuildWorkspace ws(h);
  return build_layer(h, m, tree, tree.depth(), parent_a_set, std::move(start), u_bound, ws);
}

namespace {

std::string at_layer(std::size_t i) { return "layer " + std::to_string(i); }

}  // namespace

Report validate_tree(const BipartiteHypergraph& h, const PartialMatching& m,
                     const AlternatingTree& tree, std::optional<std::uint32_t> u_bound) {
  const VertexId root = tree.root();
  if (root >= h.a_count()) return Violation{ErrorCode::IndexOutOfRange, "root"};
  if (m.is_matched(root)) return Violation{ErrorCode::RootMatched, "root " + std::to_string(root)};

  std::vector<std::uint32_t> x_deg(h.a_count(), 0), y_deg(h.a_count(), 0);
  std::vector<std::size_t> b_owner(h.b_count(), 0);  // layer index, 0 = free
  std::size_t x_total = 0, y_total = 0;

  std::set<VertexId> parent_a{root};
  for (std::size_t i = 1; i <= tree.depth(); ++i) {
    const Layer& layer = tree.layer(i);
    std::vector<EdgeId> x_owner_of_b(h.b_count(), kNoEdge);
    std::set<EdgeId> expected_y;
    for (EdgeId e : layer.x) {
      if (m.contains(e)) return Violation{ErrorCode::XInMatching, at_layer(i) + ", edge " + std::to_string(e)};
      if (!parent_a.count(h.a_of(e))) {
        return Violation{ErrorCode::XParentMissing, at_layer(i) + ", edge " + std::to_string(e)};
      }
      for (VertexId b : h.bs_of(e)) {
        if (x_owner_of_b[b] != kNoEdge) {
          return Violation{ErrorCode::XNotDisjoint, at_layer(i) + ", edges " +
                                                        std::to_string(x_owner_of_b[b]) + " and " +
                                                        std::to_string(e)};
        }
        x_owner_of_b[b] = e;
      }
      for (EdgeId f : blocking_edges(h, m, e)) expected_y.insert(f);
      ++x_deg[h.a_of(e)];
      ++x_total;
    }
    std::set<EdgeId> actual_y;
    for (EdgeId f : layer.y) {
      if (!m.contains(f)) return Violation{ErrorCode::YNotInMatching, at_layer(i) + ", edge " + std::to_string(f)};
      std::set<EdgeId> touched;
      for (VertexId b : h.bs_of(f)) {
        if (x_owner_of_b[b] != kNoEdge) touched.insert(x_owner_of_b[b]);
      }
      if (touched.size() > 1) {
        return Violation{ErrorCode::YIntersectsMultipleX, at_layer(i) + ", edge " + std::to_string(f)};
      }
      actual_y.insert(f);
      ++y_deg[h.a_of(f)];
      ++y_total;
    }
    if (actual_y.size() != layer.y.size() || actual_y != expected_y) {
      return Violation{ErrorCode::YNotBlockers, at_layer(i)};
    }
    std::set<EdgeId> layer_edges(layer.x.begin(), layer.x.end());
    layer_edges.insert(layer.y.begin(), layer.y.end());
    for (EdgeId e : layer_edges) {
      for (VertexId b : h.bs_of(e)) {
        if (b_owner[b] != 0 && b_owner[b] != i) {
          return Violation{ErrorCode::CrossLayerBOverlap, "layers " + std::to_string(b_owner[b]) +
                                                              " and " + std::to_string(i) +
                                                              " at B-vertex " + std::to_string(b)};
        }
        b_owner[b] = i;
      }
    }
    parent_a.clear();
    for (EdgeId f : layer.y) parent_a.insert(h.a_of(f));
  }

  for (VertexId a = 0; a < h.a_count(); ++a) {
    if (y_deg[a] > 1) return Violation{ErrorCode::AInMultipleBlocking, "A-vertex " + std::to_string(a)};
    if (u_bound && x_deg[a] > *u_bound) {
      return Violation{ErrorCode::DegreeBoundExceeded, "A-vertex " + std::to_string(a)};
    }
    if (tree.x_degree(a) != x_deg[a] || tree.blocking_degree(a) != y_deg[a]) {
      return Violation{ErrorCode::CounterMismatch, "degree of A-vertex " + std::to_string(a)};
    }
  }
  if (tree.x_total() != x_total || tree.y_total() != y_total + 1) {
    return Violation{ErrorCode::CounterMismatch, "layer totals"};
  }
  for (VertexId b = 0; b < h.b_count(); ++b) {
    if (tree.occupied(b) != (b_owner[b] != 0) ||
        (b_owner[b] != 0 && (!tree.occupied(b, b_owner[b]) || tree.occupied(b, b_owner[b] - 1)))) {
      return Violation{ErrorCode::CounterMismatch, "occupancy of B-vertex " + std::to_string(b)};
    }
  }
  return std::nullopt;
}

}  // namespace hbm

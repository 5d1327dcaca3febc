#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hbm/hypergraph.hpp"
#include "hbm/matching.hpp"

namespace hbm {

/// (X, Y): pairwise B-disjoint non-matching edges and exactly the matching
/// edges blocking them, each blocker meeting a single X edge.
struct Layer {
  std::vector<EdgeId> x;
  std::vector<EdgeId> y;

  friend bool operator==(const Layer&, const Layer&) = default;
};

/// Layer 0 holds the unmatched root vertex rather than edges.
struct RootLayer {
  VertexId root = 0;
};

/// Root plus layers L_1..L_depth, with per-vertex degree counters and the
/// B-occupancy of the whole tree kept incrementally.
class AlternatingTree {
 public:
  AlternatingTree(const BipartiteHypergraph& h, VertexId root);

  /// Assembles a tree from explicit layers without checking anything; used
  /// to construct inputs for validate_tree.
  static AlternatingTree from_layers(const BipartiteHypergraph& h, VertexId root,
                                     std::vector<Layer> layers);

  VertexId root() const noexcept { return root_.root; }
  const RootLayer& root_layer() const noexcept { return root_; }
  std::size_t depth() const noexcept { return layers_.size(); }
  /// 1-based, 1 <= i <= depth().
  const Layer& layer(std::size_t i) const { return layers_[i - 1]; }
  std::span<const Layer> layers() const noexcept { return layers_; }

  std::uint32_t x_degree(VertexId a) const { return x_deg_[a]; }
  std::uint32_t blocking_degree(VertexId a) const { return y_deg_[a]; }
  /// |Y_{<=depth}| with the root counted as one.
  std::size_t y_total() const noexcept { return y_total_ + 1; }
  std::size_t x_total() const noexcept { return x_total_; }

  /// True when b lies in an edge of layers 1..up_to.
  bool occupied(VertexId b, std::size_t up_to) const {
    return occ_count_[b] > 0 && occ_layer_[b] <= up_to;
  }
  bool occupied(VertexId b) const { return occ_count_[b] > 0; }
  std::size_t occupied_count() const;

  /// A(Y_{i-1}) in increasing order; {root} for i = 1.
  std::vector<VertexId> parent_set(const BipartiteHypergraph& h, std::size_t i) const;

  void push_layer(const BipartiteHypergraph& h, Layer layer);
  Layer pop_layer(const BipartiteHypergraph& h);
  /// Drops the matching edge f from Y_i.
  void remove_blocking(const BipartiteHypergraph& h, std::size_t i, EdgeId f);
  /// Replaces L_i, e.g. by a committed superposed build.
  void replace_layer(const BipartiteHypergraph& h, std::size_t i, Layer layer);

 private:
  void account(const BipartiteHypergraph& h, std::size_t i, const Layer& layer, int sign);
  void account_edge(const BipartiteHypergraph& h, std::size_t i, EdgeId e, bool is_x, int sign);

  RootLayer root_;
  std::vector<Layer> layers_;
  std::vector<std::uint32_t> x_deg_;
  std::vector<std::uint32_t> y_deg_;
  std::vector<std::uint16_t> occ_count_;
  std::vector<std::uint32_t> occ_layer_;
  std::size_t x_total_ = 0;
  std::size_t y_total_ = 0;
};

/// Degree of a in the tree: edges of the layers (root excluded) holding a.
std::uint32_t tree_degree(const AlternatingTree& tree, VertexId a);

/// Scratch space reused across BuildLayer calls.
class BuildWorkspace {
 public:
  explicit BuildWorkspace(const BipartiteHypergraph& h);

  void reset();
  bool marked(VertexId b) const { return b_stamp_[b] == stamp_; }
  void mark(VertexId b) { b_stamp_[b] = stamp_; }
  std::uint32_t& count(VertexId a) {
    if (a_stamp_[a] != stamp_) {
      a_stamp_[a] = stamp_;
      a_count_[a] = 0;
    }
    return a_count_[a];
  }

 private:
  std::uint64_t stamp_ = 0;
  std::vector<std::uint64_t> b_stamp_;
  std::vector<std::uint64_t> a_stamp_;
  std::vector<std::uint32_t> a_count_;
};

/// The least (vertex, edge) pair such that the vertex is in parent_a_set,
/// has fewer than u_bound edges in under_construction.x, and the edge
/// avoids B of the whole tree and of the layer under construction.
std::optional<std::pair<VertexId, EdgeId>> find_addable_edge(
    const BipartiteHypergraph& h, const PartialMatching& m, const AlternatingTree& tree,
    std::span<const VertexId> parent_a_set, const Layer& under_construction, std::uint32_t u_bound);

/// Grows `start` by repeatedly adding the least addable edge and its
/// blockers. Only layers 1..visible_layers of the tree count as occupied,
/// which lets a layer be rebuilt while ignoring the layers above it.
Layer build_layer(const BipartiteHypergraph& h, const PartialMatching& m,
                  const AlternatingTree& tree, std::size_t visible_layers,
                  std::span<const VertexId> parent_a_set, Layer start, std::uint32_t u_bound,
                  BuildWorkspace& ws);

/// Convenience form over the whole tree.
Layer build_layer(const BipartiteHypergraph& h, const PartialMatching& m,
                  const AlternatingTree& tree, std::span<const VertexId> parent_a_set,
                  Layer start, std::uint32_t u_bound);

/// Re-derives every layer and tree invariant from scratch. The degree bound
/// is only checked when u_bound is given.
Report validate_tree(const BipartiteHypergraph& h, const PartialMatching& m,
                     const AlternatingTree& tree, std::optional<std::uint32_t> u_bound = std::nullopt);

}  // namespace hbm

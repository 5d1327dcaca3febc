#pragma once

#include <span>
#include <vector>

#include "hbm/hypergraph.hpp"

namespace hbm {

/// A set of pairwise vertex-disjoint edges, with both vertex-to-edge maps
/// kept in step so blocking queries cost O(r).
class PartialMatching {
 public:
  PartialMatching() = default;
  explicit PartialMatching(const BipartiteHypergraph& h);

  bool contains(EdgeId e) const { return e < in_.size() && in_[e]; }
  bool is_matched(VertexId a) const { return by_a_[a] != kNoEdge; }
  EdgeId edge_of_a(VertexId a) const { return by_a_[a]; }
  EdgeId edge_of_b(VertexId b) const { return by_b_[b]; }
  std::size_t size() const noexcept { return size_; }

  /// Member edge ids, increasing.
  std::vector<EdgeId> edges() const;
  /// Matched A-vertices, increasing.
  std::vector<VertexId> matched_a() const;

  /// Adds e; throws NotAddable if any vertex of e is already covered.
  void insert(const BipartiteHypergraph& h, EdgeId e);
  /// Removes e; throws NotInMatching.
  void erase(const BipartiteHypergraph& h, EdgeId e);
  /// In-place swapping operation, same contract as hbm::swap.
  void swap_edges(const BipartiteHypergraph& h, EdgeId f_out, EdgeId e_in);

  friend bool operator==(const PartialMatching&, const PartialMatching&) = default;

 private:
  std::vector<bool> in_;
  std::vector<EdgeId> by_a_;
  std::vector<EdgeId> by_b_;
  std::size_t size_ = 0;
};

/// Matching edges sharing a B-vertex with e, increasing. Sharing only e's
/// A-vertex does not block.
std::vector<EdgeId> blocking_edges(const BipartiteHypergraph& h, const PartialMatching& m, EdgeId e);

bool is_immediately_addable(const BipartiteHypergraph& h, const PartialMatching& m, EdgeId e);

/// Replaces f_out by e_in, which must be an immediately addable edge for
/// the same A-vertex. Errors: NotInMatching, AlreadyInMatching,
/// AVertexMismatch, NotAddable.
PartialMatching swap(const BipartiteHypergraph& h, PartialMatching m, EdgeId f_out, EdgeId e_in);

/// Checks an arbitrary edge list for pairwise disjointness and, when asked,
/// that it covers every A-vertex. Reports OVERLAP or UNMATCHED.
Report verify_matching(const BipartiteHypergraph& h, std::span<const EdgeId> edges,
                       bool require_perfect);

}  // namespace hbm

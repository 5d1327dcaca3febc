#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "hbm/error.hpp"

namespace hbm {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

/// One hyperedge as written by a user: its A-vertex and its r-1 B-vertices.
struct EdgeSpec {
  VertexId a = 0;
  std::vector<VertexId> bs;

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

/// Unvalidated instance description. BipartiteHypergraph::build turns it
/// into the immutable indexed form.
struct InstanceDescription {
  std::uint32_t r = 2;
  std::uint32_t a_count = 0;
  std::uint32_t b_count = 0;
  std::vector<EdgeSpec> edges;
};

/// Checks uniformity, index ranges, distinct B-vertices within an edge and
/// the absence of duplicate edges. The report names the first failing edge.
/// B-vertex lists need not be sorted.
Report validate_instance(const InstanceDescription& desc);

/// An r-uniform bipartite hypergraph. Edge ids are positions in the edge
/// list, which is also the canonical edge order; each edge stores its
/// B-vertices in increasing order.
class BipartiteHypergraph {
 public:
  BipartiteHypergraph() = default;

  /// Validates, sorts each edge's B-vertices and builds incidence lists.
  /// Throws Error with the validate_instance code on failure.
  static BipartiteHypergraph build(const InstanceDescription& desc);

  std::uint32_t r() const noexcept { return r_; }
  std::uint32_t a_count() const noexcept { return a_count_; }
  std::uint32_t b_count() const noexcept { return b_count_; }
  std::size_t edge_count() const noexcept { return a_of_.size(); }
  std::uint32_t b_per_edge() const noexcept { return r_ - 1; }

  VertexId a_of(EdgeId e) const { return a_of_[e]; }
  std::span<const VertexId> bs_of(EdgeId e) const {
    return {b_flat_.data() + static_cast<std::size_t>(e) * (r_ - 1), r_ - 1};
  }

  /// Edges whose A-vertex is a, increasing.
  std::span<const EdgeId> edges_of_a(VertexId a) const {
    return {a_inc_.data() + a_off_[a], a_off_[a + 1] - a_off_[a]};
  }
  /// Edges containing B-vertex b, increasing.
  std::span<const EdgeId> edges_of_b(VertexId b) const {
    return {b_inc_.data() + b_off_[b], b_off_[b + 1] - b_off_[b]};
  }

  bool shares_b(EdgeId e, EdgeId f) const;

  InstanceDescription describe() const;

  friend bool operator==(const BipartiteHypergraph&, const BipartiteHypergraph&) = default;

 private:
  std::uint32_t r_ = 2;
  std::uint32_t a_count_ = 0;
  std::uint32_t b_count_ = 0;
  std::vector<VertexId> a_of_;
  std::vector<VertexId> b_flat_;
  std::vector<std::uint32_t> a_off_{0};
  std::vector<EdgeId> a_inc_;
  std::vector<std::uint32_t> b_off_{0};
  std::vector<EdgeId> b_inc_;
};

/// Re-checks a built hypergraph, including incidence consistency.
Report validate_instance(const BipartiteHypergraph& h);

/// E_S: all edges whose A-vertex lies in s. Result is increasing.
std::vector<EdgeId> incident_edges(const BipartiteHypergraph& h, std::span<const VertexId> s);

}  // namespace hbm

#include "hbm/matching.hpp"

#include <algorithm>
#include <string>

namespace hbm {

PartialMatching::PartialMatching(const BipartiteHypergraph& h)
    : in_(h.edge_count(), false), by_a_(h.a_count(), kNoEdge), by_b_(h.b_count(), kNoEdge) {}

std::vector<EdgeId> PartialMatching::edges() const {
  std::vector<EdgeId> out;
  out.reserve(size_);
  for (std::size_t e = 0; e < in_.size(); ++e) {
    if (in_[e]) out.push_back(static_cast<EdgeId>(e));
  }
  return out;
}

std::vector<VertexId> PartialMatching::matched_a() const {
  std::vector<VertexId> out;
  for (std::size_t a = 0; a < by_a_.size(); ++a) {
    if (by_a_[a] != kNoEdge) out.push_back(static_cast<VertexId>(a));
  }
  return out;
}

void PartialMatching::insert(const BipartiteHypergraph& h, EdgeId e) {
  if (contains(e)) throw Error(ErrorCode::AlreadyInMatching, "edge " + std::to_string(e));
  const VertexId a = h.a_of(e);
  if (by_a_[a] != kNoEdge) {
    throw Error(ErrorCode::NotAddable, "A-vertex " + std::to_string(a) + " already matched");
  }
  for (VertexId b : h.bs_of(e)) {
    if (by_b_[b] != kNoEdge) {
      throw Error(ErrorCode::NotAddable, "edge " + std::to_string(e) + " blocked at B-vertex " +
                                             std::to_string(b));
    }
  }
  in_[e] = true;
  by_a_[a] = e;
  for (VertexId b : h.bs_of(e)) by_b_[b] = e;
  ++size_;
}

void PartialMatching::erase(const BipartiteHypergraph& h, EdgeId e) {
  if (!contains(e)) throw Error(ErrorCode::NotInMatching, "edge " + std::to_string(e));
  in_[e] = false;
  by_a_[h.a_of(e)] = kNoEdge;
  for (VertexId b : h.bs_of(e)) by_b_[b] = kNoEdge;
  --size_;
}

void PartialMatching::swap_edges(const BipartiteHypergraph& h, EdgeId f_out, EdgeId e_in) {
  if (!contains(f_out)) throw Error(ErrorCode::NotInMatching, "edge " + std::to_string(f_out));
  if (contains(e_in)) throw Error(ErrorCode::AlreadyInMatching, "edge " + std::to_string(e_in));
  if (h.a_of(f_out) != h.a_of(e_in)) {
    throw Error(ErrorCode::AVertexMismatch,
                "edges " + std::to_string(f_out) + " and " + std::to_string(e_in));
  }
  // The outgoing edge counts as a blocker like any other matching edge.
  if (!is_immediately_addable(h, *this, e_in)) {
    throw Error(ErrorCode::NotAddable, "edge " + std::to_string(e_in));
  }
  erase(h, f_out);
  insert(h, e_in);
}

std::vector<EdgeId> blocking_edges(const BipartiteHypergraph& h, const PartialMatching& m,
                                   EdgeId e) {
  std::vector<EdgeId> out;
  for (VertexId b : h.bs_of(e)) {
    if (EdgeId f = m.edge_of_b(b); f != kNoEdge) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_immediately_addable(const BipartiteHypergraph& h, const PartialMatching& m, EdgeId e) {
  for (VertexId b : h.bs_of(e)) {
    if (m.edge_of_b(b) != kNoEdge) return false;
  }
  return true;
}

PartialMatching swap(const BipartiteHypergraph& h, PartialMatching m, EdgeId f_out, EdgeId e_in) {
  m.swap_edges(h, f_out, e_in);
  return m;
}

Report verify_matching(const BipartiteHypergraph& h, std::span<const EdgeId> edges,
                       bool require_perfect) {
  std::vector<EdgeId> owner_a(h.a_count(), kNoEdge);
  std::vector<EdgeId> owner_b(h.b_count(), kNoEdge);
  for (EdgeId e : edges) {
    if (e >= h.edge_count()) {
      return Violation{ErrorCode::IndexOutOfRange, "edge " + std::to_string(e)};
    }
    const VertexId a = h.a_of(e);
    if (owner_a[a] != kNoEdge) {
      return Violation{ErrorCode::Overlap, "edges " + std::to_string(owner_a[a]) + " and " +
                                               std::to_string(e) + " at A-vertex " +
                                               std::to_string(a)};
    }
    owner_a[a] = e;
    for (VertexId b : h.bs_of(e)) {
      if (owner_b[b] != kNoEdge) {
        return Violation{ErrorCode::Overlap, "edges " + std::to_string(owner_b[b]) + " and " +
                                                 std::to_string(e) + " at B-vertex " +
                                                 std::to_string(b)};
      }
      owner_b[b] = e;
    }
  }
  if (require_perfect) {
    for (VertexId a = 0; a < h.a_count(); ++a) {
      if (owner_a[a] == kNoEdge) return Violation{ErrorCode::Unmatched, "A-vertex " + std::to_string(a)};
    }
  }
  return std::nullopt;
}

}  // namespace hbm

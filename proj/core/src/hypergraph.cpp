#include "hbm/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace hbm {

namespace {

std::string edge_name(std::size_t index) { return "edge " + std::to_string(index); }

}  // namespace

Report validate_instance(const InstanceDescription& desc) {
  if (desc.r < 2) {
    return Violation{ErrorCode::InvalidUniformity, "r = " + std::to_string(desc.r)};
  }
  std::set<std::pair<VertexId, std::vector<VertexId>>> seen;
  for (std::size_t i = 0; i < desc.edges.size(); ++i) {
    const EdgeSpec& e = desc.edges[i];
    if (e.bs.size() != desc.r - 1) {
      return Violation{ErrorCode::NonUniformEdge, edge_name(i) + " has " +
                                                      std::to_string(e.bs.size()) +
                                                      " B-vertices, expected " +
                                                      std::to_string(desc.r - 1)};
    }
    if (e.a >= desc.a_count) {
      return Violation{ErrorCode::IndexOutOfRange,
                       edge_name(i) + ": A-vertex " + std::to_string(e.a)};
    }
    for (VertexId b : e.bs) {
      if (b >= desc.b_count) {
        return Violation{ErrorCode::IndexOutOfRange,
                         edge_name(i) + ": B-vertex " + std::to_string(b)};
      }
    }
    std::vector<VertexId> sorted = e.bs;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
      return Violation{ErrorCode::DuplicateBVertex,
                       edge_name(i) + ": B-vertex " + std::to_string(*dup)};
    }
    if (!seen.emplace(e.a, std::move(sorted)).second) {
      return Violation{ErrorCode::DuplicateEdge, edge_name(i)};
    }
  }
  return std::nullopt;
}

BipartiteHypergraph BipartiteHypergraph::build(const InstanceDescription& desc) {
  if (auto v = validate_instance(desc)) throw Error(*v);

  BipartiteHypergraph h;
  h.r_ = desc.r;
  h.a_count_ = desc.a_count;
  h.b_count_ = desc.b_count;
  const std::size_t m = desc.edges.size();
  h.a_of_.reserve(m);
  h.b_flat_.reserve(m * (desc.r - 1));
  for (const EdgeSpec& e : desc.edges) {
    h.a_of_.push_back(e.a);
    std::vector<VertexId> sorted = e.bs;
    std::sort(sorted.begin(), sorted.end());
    h.b_flat_.insert(h.b_flat_.end(), sorted.begin(), sorted.end());
  }

  // Counting sort keeps incidence lists in edge order.
  h.a_off_.assign(h.a_count_ + 1, 0);
  h.b_off_.assign(h.b_count_ + 1, 0);
  for (std::size_t e = 0; e < m; ++e) {
    ++h.a_off_[h.a_of_[e] + 1];
    for (VertexId b : h.bs_of(static_cast<EdgeId>(e))) ++h.b_off_[b + 1];
  }
  for (std::size_t i = 0; i < h.a_count_; ++i) h.a_off_[i + 1] += h.a_off_[i];
  for (std::size_t i = 0; i < h.b_count_; ++i) h.b_off_[i + 1] += h.b_off_[i];
  h.a_inc_.resize(m);
  h.b_inc_.resize(m * (desc.r - 1));
  std::vector<std::uint32_t> a_fill(h.a_off_.begin(), h.a_off_.end() - 1);
  std::vector<std::uint32_t> b_fill(h.b_off_.begin(), h.b_off_.end() - 1);
  for (std::size_t e = 0; e < m; ++e) {
    const auto id = static_cast<EdgeId>(e);
    h.a_inc_[a_fill[h.a_of_[e]]++] = id;
    for (VertexId b : h.bs_of(id)) h.b_inc_[b_fill[b]++] = id;
  }
  return h;
}

bool BipartiteHypergraph::shares_b(EdgeId e, EdgeId f) const {
  auto x = bs_of(e);
  auto y = bs_of(f);
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

InstanceDescription BipartiteHypergraph::describe() const {
  InstanceDescription desc;
  desc.r = r_;
  desc.a_count = a_count_;
  desc.b_count = b_count_;
  desc.edges.reserve(edge_count());
  for (std::size_t e = 0; e < edge_count(); ++e) {
    auto bs = bs_of(static_cast<EdgeId>(e));
    desc.edges.push_back(EdgeSpec{a_of_[e], {bs.begin(), bs.end()}});
  }
  return desc;
}

Report validate_instance(const BipartiteHypergraph& h) {
  if (auto v = validate_instance(h.describe())) return v;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    auto bs = h.bs_of(static_cast<EdgeId>(e));
    if (!std::is_sorted(bs.begin(), bs.end())) {
      return Violation{ErrorCode::DuplicateBVertex, edge_name(e) + " B-vertices not increasing"};
    }
  }
  // Incidence lists must be exactly the sorted inverse of the edge list.
  std::vector<std::vector<EdgeId>> by_a(h.a_count()), by_b(h.b_count());
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    const auto id = static_cast<EdgeId>(e);
    by_a[h.a_of(id)].push_back(id);
    for (VertexId b : h.bs_of(id)) by_b[b].push_back(id);
  }
  for (VertexId a = 0; a < h.a_count(); ++a) {
    auto got = h.edges_of_a(a);
    if (!std::equal(got.begin(), got.end(), by_a[a].begin(), by_a[a].end())) {
      return Violation{ErrorCode::IndexOutOfRange, "incidence list of A-vertex " + std::to_string(a)};
    }
  }
  for (VertexId b = 0; b < h.b_count(); ++b) {
    auto got = h.edges_of_b(b);
    if (!std::equal(got.begin(), got.end(), by_b[b].begin(), by_b[b].end())) {
      return Violation{ErrorCode::IndexOutOfRange, "incidence list of B-vertex " + std::to_string(b)};
    }
  }
  return std::nullopt;
}

std::vector<EdgeId> incident_edges(const BipartiteHypergraph& h, std::span<const VertexId> s) {
  std::vector<EdgeId> out;
  for (VertexId a : s) {
    if (a >= h.a_count()) throw Error(ErrorCode::IndexOutOfRange, "A-vertex " + std::to_string(a));
    auto es = h.edges_of_a(a);
    out.insert(out.end(), es.begin(), es.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace hbm

#include "hbm/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "hbm/error.hpp"

namespace hbm {

namespace {

// Branch and bound over a compacted copy of the edge family.
class HittingSetSearch {
 public:
  HittingSetSearch(const BipartiteHypergraph& h, std::span<const EdgeId> family) {
    std::unordered_map<VertexId, std::uint32_t> local;
    std::vector<VertexId> global;
    for (EdgeId e : family) {
      for (VertexId b : h.bs_of(e)) {
        if (local.emplace(b, 0).second) global.push_back(b);
      }
    }
    std::sort(global.begin(), global.end());
    for (std::uint32_t i = 0; i < global.size(); ++i) local[global[i]] = i;
    global_ = std::move(global);
    sets_.reserve(family.size());
    for (EdgeId e : family) {
      std::vector<std::uint32_t> s;
      for (VertexId b : h.bs_of(e)) s.push_back(local[b]);
      sets_.push_back(std::move(s));  // increasing, since bs_of is
    }
    incident_.resize(global_.size());
    for (std::uint32_t i = 0; i < sets_.size(); ++i) {
      for (std::uint32_t v : sets_[i]) incident_[v].push_back(i);
    }
    hits_.assign(sets_.size(), 0);
    excluded_.assign(global_.size(), false);
    mark_.assign(global_.size(), 0);
  }

  /// Searches for hitting sets strictly smaller than `limit`.
  std::optional<std::vector<VertexId>> run(std::size_t limit) {
    limit_ = limit;
    best_.reset();
    chosen_.clear();
    recurse();
    if (!best_) return std::nullopt;
    std::vector<VertexId> out;
    for (std::uint32_t v : *best_) out.push_back(global_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::uint32_t> greedy() const {
    // Repeatedly take the vertex hitting the most unhit sets.
    std::vector<bool> hit(sets_.size(), false);
    std::vector<std::uint32_t> picked;
    std::size_t remaining = sets_.size();
    while (remaining > 0) {
      std::uint32_t best_v = 0;
      std::size_t best_count = 0;
      for (std::uint32_t v = 0; v < incident_.size(); ++v) {
        std::size_t c = 0;
        for (std::uint32_t s : incident_[v]) c += hit[s] ? 0 : 1;
        if (c > best_count) {
          best_count = c;
          best_v = v;
        }
      }
      picked.push_back(best_v);
      for (std::uint32_t s : incident_[best_v]) {
        if (!hit[s]) {
          hit[s] = true;
          --remaining;
        }
      }
    }
    return picked;
  }

  std::size_t family_size() const { return sets_.size(); }

 private:
  void choose(std::uint32_t v) {
    chosen_.push_back(v);
    for (std::uint32_t s : incident_[v]) ++hits_[s];
  }
  void unchoose(std::uint32_t v) {
    chosen_.pop_back();
    for (std::uint32_t s : incident_[v]) --hits_[s];
  }

  // Size of a greedy packing of pairwise disjoint unhit sets, counting only
  // non-excluded vertices; each needs its own hitter.
  std::size_t packing_bound() {
    ++stamp_;
    std::size_t count = 0;
    for (std::uint32_t i = 0; i < sets_.size(); ++i) {
      if (hits_[i] > 0) continue;
      bool free = true;
      for (std::uint32_t v : sets_[i]) {
        if (!excluded_[v] && mark_[v] == stamp_) {
          free = false;
          break;
        }
      }
      if (!free) continue;
      ++count;
      for (std::uint32_t v : sets_[i]) mark_[v] = stamp_;
    }
    return count;
  }

  void recurse() {
    // Branch on the unhit set with fewest remaining candidates.
    std::int64_t pick = -1;
    std::size_t pick_avail = 0;
    for (std::uint32_t i = 0; i < sets_.size(); ++i) {
      if (hits_[i] > 0) continue;
      std::size_t avail = 0;
      for (std::uint32_t v : sets_[i]) avail += excluded_[v] ? 0 : 1;
      if (avail == 0) return;
      if (pick < 0 || avail < pick_avail) {
        pick = i;
        pick_avail = avail;
      }
    }
    if (pick < 0) {
      if (chosen_.size() < limit_) {
        best_ = chosen_;
        limit_ = chosen_.size();
      }
      return;
    }
    if (chosen_.size() + std::max<std::size_t>(1, packing_bound()) >= limit_) return;

    std::vector<std::uint32_t> newly_excluded;
    for (std::uint32_t v : sets_[static_cast<std::size_t>(pick)]) {
      if (excluded_[v]) continue;
      choose(v);
      recurse();
      unchoose(v);
      excluded_[v] = true;
      newly_excluded.push_back(v);
      if (chosen_.size() + 1 >= limit_) break;
    }
    for (std::uint32_t v : newly_excluded) excluded_[v] = false;
  }

  std::vector<VertexId> global_;
  std::vector<std::vector<std::uint32_t>> sets_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::vector<std::uint32_t> hits_;
  std::vector<bool> excluded_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t stamp_ = 0;
  std::vector<std::uint32_t> chosen_;
  std::optional<std::vector<std::uint32_t>> best_;
  std::size_t limit_ = 0;
};

void check_cap(const BipartiteHypergraph& h, std::uint32_t max_a) {
  if (h.a_count() > max_a) {
    throw Error(ErrorCode::InstanceTooLarge, "|A| = " + std::to_string(h.a_count()) +
                                                 " exceeds cap " + std::to_string(max_a));
  }
}

}  // namespace

std::variant<HittingSetResult, ExceedsBudget> min_hitting_set(const BipartiteHypergraph& h,
                                                              std::span<const EdgeId> family,
                                                              std::optional<std::size_t> budget) {
  for (EdgeId e : family) {
    if (e >= h.edge_count()) throw Error(ErrorCode::IndexOutOfRange, "edge " + std::to_string(e));
  }
  if (family.empty()) return HittingSetResult{};

  HittingSetSearch search(h, family);
  std::size_t limit;
  if (budget) {
    limit = *budget + 1;
  } else {
    limit = search.greedy().size() + 1;
  }
  auto found = search.run(limit);
  if (!found) return ExceedsBudget{};
  return HittingSetResult{found->size(), std::move(*found)};
}

Rational haxell_bound(std::uint32_t r, const Rational& epsilon, std::size_t s_size) {
  return (Rational(2 * static_cast<std::int64_t>(r) - 3) + epsilon) *
         Rational(static_cast<std::int64_t>(s_size) - 1);
}

HaxellResult check_haxell(const BipartiteHypergraph& h, const Rational& epsilon, HaxellMode mode,
                          std::uint32_t max_a) {
  check_cap(h, max_a);
  const Rational eps = mode == HaxellMode::Classic ? Rational(0) : epsilon;
  if (eps < 0) throw Error(ErrorCode::InvalidParameters, "epsilon must be non-negative");
  const std::uint32_t n = h.a_count();
  std::vector<VertexId> s;
  for (std::uint32_t k = 1; k <= n; ++k) {
    const BigInt budget = floor(haxell_bound(h.r(), eps, k));
    const auto budget_n = budget.convert_to<std::size_t>();
    s.resize(k);
    std::iota(s.begin(), s.end(), 0);
    while (true) {
      const auto family = incident_edges(h, s);
      auto res = min_hitting_set(h, family, budget_n);
      if (auto* hs = std::get_if<HittingSetResult>(&res)) return HaxellViolated{s, hs->size};
      // Next k-combination of {0..n-1} in lexicographic order.
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && s[i] == n - k + static_cast<std::uint32_t>(i)) --i;
      if (i < 0) break;
      ++s[i];
      for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
  }
  return HaxellSatisfied{};
}

namespace {

class PerfectMatchingSearch {
 public:
  explicit PerfectMatchingSearch(const BipartiteHypergraph& h)
      : h_(h), used_(h.b_count(), false) {}

  bool run(VertexId a) {
    if (a == h_.a_count()) return true;
    if (!remaining_feasible(a)) return false;
    for (EdgeId e : h_.edges_of_a(a)) {
      if (!available(e)) continue;
      take(e, true);
      picked_.push_back(e);
      if (run(a + 1)) return true;
      picked_.pop_back();
      take(e, false);
    }
    return false;
  }

  std::vector<EdgeId> picked_;

 private:
  bool available(EdgeId e) const {
    for (VertexId b : h_.bs_of(e)) {
      if (used_[b]) return false;
    }
    return true;
  }
  void take(EdgeId e, bool flag) {
    for (VertexId b : h_.bs_of(e)) used_[b] = flag;
  }
  bool remaining_feasible(VertexId from) const {
    for (VertexId a = from; a < h_.a_count(); ++a) {
      auto es = h_.edges_of_a(a);
      if (std::none_of(es.begin(), es.end(), [&](EdgeId e) { return available(e); })) return false;
    }
    return true;
  }

  const BipartiteHypergraph& h_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<EdgeId>> brute_force_perfect_matching(const BipartiteHypergraph& h,
                                                                std::uint32_t max_a) {
  check_cap(h, max_a);
  PerfectMatchingSearch search(h);
  if (!search.run(0)) return std::nullopt;
  return std::move(search.picked_);
}

WitnessCertificate make_certificate(const BipartiteHypergraph& h, std::vector<VertexId> s,
                                    std::vector<VertexId> hitting_set, const Rational& epsilon) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::sort(hitting_set.begin(), hitting_set.end());
  hitting_set.erase(std::unique(hitting_set.begin(), hitting_set.end()), hitting_set.end());
  WitnessCertificate cert;
  cert.bound = haxell_bound(h.r(), epsilon, s.size());
  cert.s = std::move(s);
  cert.hitting_set = std::move(hitting_set);
  cert.epsilon = epsilon;
  return cert;
}

Report verify_witness(const BipartiteHypergraph& h, const WitnessCertificate& cert) {
  if (cert.epsilon < 0) return Violation{ErrorCode::InvalidParameters, "negative epsilon"};
  std::vector<VertexId> s = cert.s;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    return Violation{ErrorCode::IndexOutOfRange, "S lists an A-vertex twice"};
  }
  for (VertexId a : s) {
    if (a >= h.a_count()) return Violation{ErrorCode::IndexOutOfRange, "A-vertex " + std::to_string(a)};
  }
  std::vector<bool> in_h(h.b_count(), false);
  std::size_t distinct = 0;
  for (VertexId b : cert.hitting_set) {
    if (b >= h.b_count()) return Violation{ErrorCode::IndexOutOfRange, "B-vertex " + std::to_string(b)};
    if (!in_h[b]) {
      in_h[b] = true;
      ++distinct;
    }
  }
  for (EdgeId e : incident_edges(h, s)) {
    auto bs = h.bs_of(e);
    if (std::none_of(bs.begin(), bs.end(), [&](VertexId b) { return in_h[b]; })) {
      return Violation{ErrorCode::UnhitEdge, "edge " + std::to_string(e)};
    }
  }
  const Rational bound = haxell_bound(h.r(), cert.epsilon, s.size());
  if (Rational(static_cast<std::int64_t>(distinct)) > bound) {
    return Violation{ErrorCode::SizeExceedsBound,
                     std::to_string(distinct) + " > " + format_rational(bound)};
  }
  return std::nullopt;
}

}  // namespace hbm

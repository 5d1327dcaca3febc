#pragma once

// Exact, exponential-time checks for desk-scale instances. These are the
// ground truth the solver is tested against.

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "hbm/hypergraph.hpp"
#include "hbm/rational.hpp"

namespace hbm {

struct HittingSetResult {
  std::size_t size = 0;
  std::vector<VertexId> witness;  // increasing
};

struct ExceedsBudget {};

/// Minimum B-subset meeting every edge of `family` (branch and bound).
/// With a budget, returns ExceedsBudget as soon as tau > budget is proven.
std::variant<HittingSetResult, ExceedsBudget> min_hitting_set(
    const BipartiteHypergraph& h, std::span<const EdgeId> family,
    std::optional<std::size_t> budget = std::nullopt);

enum class HaxellMode { Strengthened, Classic };

struct HaxellSatisfied {};
struct HaxellViolated {
  std::vector<VertexId> s;
  std::size_t tau = 0;
};
using HaxellResult = std::variant<HaxellSatisfied, HaxellViolated>;

inline constexpr std::uint32_t kDefaultOracleCap = 20;

/// (2r - 3 + eps)(|S| - 1), exactly.
Rational haxell_bound(std::uint32_t r, const Rational& epsilon, std::size_t s_size);

/// Enumerates nonempty S by increasing size, then lexicographically, and
/// returns the first S with tau(E_S) <= bound. Classic mode ignores epsilon.
/// Throws InstanceTooLarge when |A| exceeds max_a.
HaxellResult check_haxell(const BipartiteHypergraph& h, const Rational& epsilon, HaxellMode mode,
                          std::uint32_t max_a = kDefaultOracleCap);

/// Lexicographically first perfect matching by backtracking over A in
/// order, or nullopt. Throws InstanceTooLarge when |A| exceeds max_a.
std::optional<std::vector<EdgeId>> brute_force_perfect_matching(
    const BipartiteHypergraph& h, std::uint32_t max_a = kDefaultOracleCap);

/// A set S of A-vertices together with an explicit hitting set of E_S
/// small enough to refute the strengthened condition at epsilon.
struct WitnessCertificate {
  std::vector<VertexId> s;
  std::vector<VertexId> hitting_set;
  Rational epsilon;
  Rational bound;  // (2r - 3 + epsilon)(|s| - 1)
};

WitnessCertificate make_certificate(const BipartiteHypergraph& h, std::vector<VertexId> s,
                                    std::vector<VertexId> hitting_set, const Rational& epsilon);

/// Polynomial-time check: the hitting set meets every edge of E_S and its
/// size is at most the exact bound recomputed from epsilon.
Report verify_witness(const BipartiteHypergraph& h, const WitnessCertificate& cert);

}  // namespace hbm

#pragma once

#include <cstdint>
#include <optional>

#include "hbm/rational.hpp"

namespace hbm {

/// Experiment knobs; unset fields take the defaults derived from epsilon.
struct ParameterOverrides {
  std::optional<Rational> mu;
  std::optional<std::uint32_t> u;
  std::optional<std::uint64_t> max_iterations;
};

/// Solver constants for one (epsilon, r, n). All thresholds are exact.
struct Parameters {
  Rational epsilon;
  std::uint32_t r = 2;
  Rational mu;                  // eps^2 / (10 r^2)
  std::uint32_t u = 0;          // ceil(1 / mu), the degree bound
  Rational delta;               // eps / (5 r^2), growth rate of fresh layers
  Rational gamma;               // (1 - mu) eps / (5 r^2), growth of |Y| per layer
  std::uint64_t small_tree_threshold = 0;  // ceil(5 r^2 / eps)
  std::uint64_t max_iterations = 0;        // per augment call

  /// Throws Error(InvalidParameters) for eps <= 0, r < 2, mu outside (0, 1)
  /// or u == 0.
  static Parameters make(const Rational& epsilon, std::uint32_t r, std::uint32_t n,
                         const ParameterOverrides& overrides = {});
};

/// 10 n^2 (ceil(log2 n) + 2)^2 + 1000.
std::uint64_t default_max_iterations(std::uint32_t n);

}  // namespace hbm

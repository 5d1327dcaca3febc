#include "hbm/params.hpp"

#include "hbm/error.hpp"

namespace hbm {

std::uint64_t default_max_iterations(std::uint32_t n) {
  std::uint64_t log2n = 0;
  while ((std::uint64_t{1} << log2n) < n) ++log2n;
  const std::uint64_t nn = n;
  return 10 * nn * nn * (log2n + 2) * (log2n + 2) + 1000;
}

Parameters Parameters::make(const Rational& epsilon, std::uint32_t r, std::uint32_t n,
                             const ParameterOverrides& overrides) {
  if (epsilon <= 0) throw Error(ErrorCode::InvalidParameters, "epsilon must be positive");
  if (r < 2) throw Error(ErrorCode::InvalidParameters, "r must be at least 2");
  Parameters p;
  p.epsilon = epsilon;
  p.r = r;
  const Rational r2(static_cast<std::int64_t>(r) * r);
  p.mu = overrides.mu ? *overrides.mu : Rational(epsilon * epsilon / (10 * r2));
  if (p.mu <= 0 || p.mu >= 1) throw Error(ErrorCode::InvalidParameters, "mu must lie in (0, 1)");
  if (overrides.u) {
    p.u = *overrides.u;
  } else {
    p.u = ceil(Rational(1 / p.mu)).convert_to<std::uint32_t>();
  }
  if (p.u == 0) throw Error(ErrorCode::InvalidParameters, "u must be positive");
  p.delta = epsilon / (5 * r2);
  p.gamma = (1 - p.mu) * epsilon / (5 * r2);
  p.small_tree_threshold = ceil(Rational(5 * r2 / epsilon)).convert_to<std::uint64_t>();
  p.max_iterations =
      overrides.max_iterations ? *overrides.max_iterations : default_max_iterations(n);
  return p;
}

}  // namespace hbm

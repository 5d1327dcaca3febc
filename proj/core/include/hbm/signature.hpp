#pragma once

// Signature vectors: the potential that strictly decreases across every
// iteration of the augmenting loop. Layer i contributes
//   -floor(log_b(C_i |X_i|)),  floor(log_b(D_i |Y_i|))
// with C_i = (5r^2/eps)^i / (1-mu)^(i-1), D_i = (5r^2/eps)^i / (1-mu)^i and
// b = 1 / (1 - mu^3). The vector ends in an implicit top symbol.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hbm/params.hpp"

namespace hbm {

struct SignatureVector {
  std::vector<std::int64_t> coords;  // s_1..s_2l; the trailing top symbol is implicit

  friend bool operator==(const SignatureVector&, const SignatureVector&) = default;
};

/// Lexicographic order in which the top symbol exceeds every integer.
bool lex_less(const SignatureVector& a, const SignatureVector& b);

/// |s_1| <= |s_2| <= ... and odd coordinates <= 0 <= even coordinates.
bool has_monotone_magnitudes(const SignatureVector& s);

/// "c1,c2,...,inf".
std::string format_signature(const SignatureVector& s);
SignatureVector parse_signature(std::string_view text);

struct FloorGuardStats {
  std::uint64_t evaluations = 0;
  std::uint64_t recomputed = 0;  // first pass landed within 2^-20 of an integer
  std::uint64_t unresolved = 0;  // still undecidable at doubled precision
};

struct LayerSizes {
  std::size_t x = 0;
  std::size_t y = 0;
};

/// Evaluates floor(log_b(.)) in multiprecision floating point. A first pass
/// uses 50 significant digits; values within 2^-20 of an integer are redone
/// at 100 digits.
class SignatureEvaluator {
 public:
  explicit SignatureEvaluator(const Parameters& params);
  ~SignatureEvaluator();
  SignatureEvaluator(SignatureEvaluator&&) noexcept;
  SignatureEvaluator& operator=(SignatureEvaluator&&) noexcept;

  /// s_{2i-1}; throws Error(LogOfZero) when x_size == 0.
  std::int64_t x_coordinate(std::size_t layer, std::size_t x_size);
  /// s_{2i}; throws Error(LogOfZero) when y_size == 0.
  std::int64_t y_coordinate(std::size_t layer, std::size_t y_size);

  /// Layers are given in order L_1..L_l.
  SignatureVector evaluate(std::span<const LayerSizes> layers);

  const FloorGuardStats& guard_stats() const noexcept { return stats_; }

 private:
  struct Impl;
  std::int64_t floor_log(std::size_t layer, std::size_t inv_one_minus_mu_power, std::size_t count);

  std::unique_ptr<Impl> impl_;
  FloorGuardStats stats_;
};

}  // namespace hbm

#include "hbm/signature.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include <boost/math/special_functions/log1p.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hbm/error.hpp"

namespace hbm {

namespace mp = boost::multiprecision;

namespace {

using Float50 = mp::number<mp::cpp_bin_float<50>, mp::et_off>;
using Float100 = mp::number<mp::cpp_bin_float<100>, mp::et_off>;

template <class F>
F to_float(const Rational& q) {
  return F(mp::numerator(q)) / F(mp::denominator(q));
}

template <class F>
struct LogConstants {
  F ln_growth;        // ln(5 r^2 / eps)
  F ln_one_minus_mu;  // ln(1 - mu) < 0
  F ln_base;          // ln b = -ln(1 - mu^3) > 0

  explicit LogConstants(const Parameters& p) {
    const Rational r2(static_cast<std::int64_t>(p.r) * p.r);
    ln_growth = log(to_float<F>(Rational(5 * r2 / p.epsilon)));
    ln_one_minus_mu = boost::math::log1p(F(-to_float<F>(p.mu)));
    ln_base = -boost::math::log1p(F(-to_float<F>(Rational(p.mu * p.mu * p.mu))));
  }

  // log_b of (5r^2/eps)^layer / (1-mu)^power * count
  F log_b(std::size_t layer, std::size_t power, std::size_t count) const {
    F ln_value = F(static_cast<unsigned long long>(layer)) * ln_growth -
                 F(static_cast<unsigned long long>(power)) * ln_one_minus_mu +
                 log(F(static_cast<unsigned long long>(count)));
    return ln_value / ln_base;
  }
};

template <class F>
F distance_to_integer(const F& v) {
  F frac = v - floor(v);
  return frac < F(1) - frac ? frac : F(1) - frac;
}

}  // namespace

struct SignatureEvaluator::Impl {
  explicit Impl(const Parameters& p) : fast(p), precise(p) {}
  LogConstants<Float50> fast;
  LogConstants<Float100> precise;
};

SignatureEvaluator::SignatureEvaluator(const Parameters& params)
    : impl_(std::make_unique<Impl>(params)) {}
SignatureEvaluator::~SignatureEvaluator() = default;
SignatureEvaluator::SignatureEvaluator(SignatureEvaluator&&) noexcept = default;
SignatureEvaluator& SignatureEvaluator::operator=(SignatureEvaluator&&) noexcept = default;

std::int64_t SignatureEvaluator::floor_log(std::size_t layer, std::size_t power,
                                           std::size_t count) {
  ++stats_.evaluations;
  const Float50 v = impl_->fast.log_b(layer, power, count);
  if (distance_to_integer(v) >= ldexp(Float50(1), -20)) {
    return floor(v).convert_to<std::int64_t>();
  }
  ++stats_.recomputed;
  const Float100 w = impl_->precise.log_b(layer, power, count);
  if (distance_to_integer(w) < Float100("1e-60")) ++stats_.unresolved;
  return floor(w).convert_to<std::int64_t>();
}

std::int64_t SignatureEvaluator::x_coordinate(std::size_t layer, std::size_t x_size) {
  if (x_size == 0) throw Error(ErrorCode::LogOfZero, "empty X in layer " + std::to_string(layer));
  return -floor_log(layer, layer - 1, x_size);
}

std::int64_t SignatureEvaluator::y_coordinate(std::size_t layer, std::size_t y_size) {
  if (y_size == 0) throw Error(ErrorCode::LogOfZero, "empty Y in layer " + std::to_string(layer));
  return floor_log(layer, layer, y_size);
}

SignatureVector SignatureEvaluator::evaluate(std::span<const LayerSizes> layers) {
  SignatureVector s;
  s.coords.reserve(2 * layers.size());
  for (std::size_t i = 1; i <= layers.size(); ++i) {
    s.coords.push_back(x_coordinate(i, layers[i - 1].x));
    s.coords.push_back(y_coordinate(i, layers[i - 1].y));
  }
  return s;
}

bool lex_less(const SignatureVector& a, const SignatureVector& b) {
  const std::size_t n = std::min(a.coords.size(), b.coords.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords[i] != b.coords[i]) return a.coords[i] < b.coords[i];
  }
  // At position n the shorter vector holds the top symbol.
  return a.coords.size() > b.coords.size();
}

bool has_monotone_magnitudes(const SignatureVector& s) {
  std::int64_t prev = 0;
  for (std::size_t k = 0; k < s.coords.size(); ++k) {
    const std::int64_t c = s.coords[k];
    if (k % 2 == 0 ? c > 0 : c < 0) return false;
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag < prev) return false;
    prev = mag;
  }
  return true;
}

std::string format_signature(const SignatureVector& s) {
  std::string out;
  for (std::int64_t c : s.coords) {
    out += std::to_string(c);
    out += ',';
  }
  out += "inf";
  return out;
}

SignatureVector parse_signature(std::string_view text) {
  SignatureVector s;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view tok = text.substr(0, comma);
    if (comma == std::string_view::npos) {
      if (tok != "inf") throw Error(ErrorCode::ParseError, "signature must end in inf");
      return s;
    }
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::ParseError, "bad signature coordinate '" + std::string(tok) + "'");
    }
    s.coords.push_back(v);
    text.remove_prefix(comma + 1);
  }
}

}  // namespace hbm

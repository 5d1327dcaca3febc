#pragma once

// Seeded instance generators. All randomness comes from std::mt19937_64
// through the helpers below, so an instance is a pure function of its spec
// on every platform.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hbm/hypergraph.hpp"
#include "hbm/rational.hpp"

namespace hbm {

enum class GeneratorMode { Planted, Guaranteed, Graph, Adversarial };

std::string_view to_string(GeneratorMode mode);
/// Throws Error(ParseError) on an unknown name.
GeneratorMode parse_generator_mode(std::string_view name);

struct GeneratorSpec {
  GeneratorMode mode = GeneratorMode::Guaranteed;
  std::uint32_t r = 2;
  std::uint32_t a_count = 0;
  std::uint32_t b_count = 0;
  std::uint32_t extra_edges = 0;
  /// Private edges per A-vertex in guaranteed mode; defaults to
  /// ceil(2r - 2 + epsilon).
  std::optional<std::uint32_t> private_degree;
  Rational epsilon = 1;
  std::uint64_t seed = 0;
};

/// ceil(2r - 2 + epsilon).
std::uint32_t default_private_degree(std::uint32_t r, const Rational& epsilon);

/// "generator mode:guaranteed r:3 na:4 nb:40 extra:0 d:5 seed:7 prng:mt19937_64"
std::string describe(const GeneratorSpec& spec);

/// Each A-vertex gets d pairwise disjoint edges on B-vertices no other edge
/// uses, then extra_edges random edges are added. Every S then has
/// tau(E_S) >= d|S|. Throws Error(InfeasibleSpec) when
/// b_count < d (r - 1) a_count.
BipartiteHypergraph gen_guaranteed(const GeneratorSpec& spec);

/// A hidden perfect matching plus extra_edges random edges. Throws
/// Error(InfeasibleSpec) when b_count < (r - 1) a_count.
BipartiteHypergraph gen_planted(const GeneratorSpec& spec);

/// r = 2 random bipartite graph: one edge per A-vertex, then extra_edges
/// more random pairs.
BipartiteHypergraph gen_graph(const GeneratorSpec& spec);

/// Sparse instances funneled through a small set of B-vertices: each
/// A-vertex gets one to three edges, each containing a funnel vertex.
BipartiteHypergraph gen_adversarial(const GeneratorSpec& spec);

/// Dispatches on spec.mode.
BipartiteHypergraph generate(const GeneratorSpec& spec);

/// Bipartite graph as an r = 2 hypergraph. Throws Error(IndexOutOfRange)
/// or Error(DuplicateEdge).
BipartiteHypergraph from_bipartite_graph(const std::vector<std::pair<VertexId, VertexId>>& pairs,
                                         std::uint32_t a_count, std::uint32_t b_count);

/// Portable draws from mt19937_64; the std distributions differ between
/// standard libraries.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n > 0. Rejection sampling.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  /// Fisher-Yates, drawing from the back.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }
  /// k distinct values from [0, n), in draw order.
  std::vector<std::uint32_t> sample(std::uint32_t n, std::uint32_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace hbm

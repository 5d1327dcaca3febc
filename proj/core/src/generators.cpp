#include "hbm/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "hbm/error.hpp"

namespace hbm {

namespace {

using EdgeKey = std::pair<VertexId, std::vector<VertexId>>;

class EdgeCollector {
 public:
  bool add(VertexId a, std::vector<VertexId> bs) {
    std::sort(bs.begin(), bs.end());
    if (!seen_.emplace(a, bs).second) return false;
    edges_.push_back({a, std::move(bs)});
    return true;
  }

  BipartiteHypergraph finish(const GeneratorSpec& spec, Prng& rng) {
    rng.shuffle(edges_);
    return BipartiteHypergraph::build({spec.r, spec.a_count, spec.b_count, std::move(edges_)});
  }

 private:
  std::set<EdgeKey> seen_;
  std::vector<EdgeSpec> edges_;
};

// Adds up to `count` random distinct edges whose B-vertices come from pool.
void add_random_edges(EdgeCollector& out, Prng& rng, const GeneratorSpec& spec,
                      const std::vector<VertexId>& pool, std::uint32_t count) {
  const std::uint32_t k = spec.r - 1;
  if (count == 0 || spec.a_count == 0) return;
  if (pool.size() < k) {
    throw Error(ErrorCode::InfeasibleSpec,
                "extra edges need at least " + std::to_string(k) + " shared B-vertices");
  }
  std::uint64_t attempts = 50ull * count + 100;
  std::uint32_t added = 0;
  while (added < count && attempts-- > 0) {
    const auto a = static_cast<VertexId>(rng.below(spec.a_count));
    std::vector<VertexId> bs;
    for (std::uint32_t i : rng.sample(static_cast<std::uint32_t>(pool.size()), k)) {
      bs.push_back(pool[i]);
    }
    added += out.add(a, std::move(bs)) ? 1 : 0;
  }
}

std::vector<VertexId> iota_vertices(std::uint32_t n) {
  std::vector<VertexId> v(n);
  std::iota(v.begin(), v.end(), VertexId{0});
  return v;
}

void check_basic(const GeneratorSpec& spec) {
  if (spec.r < 2) throw Error(ErrorCode::InfeasibleSpec, "r must be at least 2");
}

}  // namespace

std::uint64_t Prng::below(std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % n + 1) % n;  // largest multiple of n, minus one
  std::uint64_t x = engine_();
  while (x > limit) x = engine_();
  return x % n;
}

std::vector<std::uint32_t> Prng::sample(std::uint32_t n, std::uint32_t k) {
  std::vector<std::uint32_t> out;
  if (2ull * k > n) {
    std::vector<std::uint32_t> all = iota_vertices(n);
    for (std::uint32_t i = 0; i < k; ++i) {
      std::swap(all[i], all[i + below(n - i)]);
      out.push_back(all[i]);
    }
    return out;
  }
  while (out.size() < k) {
    const auto v = static_cast<std::uint32_t>(below(n));
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

std::string_view to_string(GeneratorMode mode) {
  switch (mode) {
    case GeneratorMode::Planted: return "planted";
    case GeneratorMode::Guaranteed: return "guaranteed";
    case GeneratorMode::Graph: return "graph";
    case GeneratorMode::Adversarial: return "adversarial";
  }
  return "?";
}

GeneratorMode parse_generator_mode(std::string_view name) {
  for (auto m : {GeneratorMode::Planted, GeneratorMode::Guaranteed, GeneratorMode::Graph,
                 GeneratorMode::Adversarial}) {
    if (to_string(m) == name) return m;
  }
  throw Error(ErrorCode::ParseError, "unknown generator mode '" + std::string(name) + "'");
}

std::uint32_t default_private_degree(std::uint32_t r, const Rational& epsilon) {
  return ceil(Rational(2 * static_cast<std::int64_t>(r) - 2) + epsilon).convert_to<std::uint32_t>();
}

std::string describe(const GeneratorSpec& spec) {
  std::string s = "generator mode:" + std::string(to_string(spec.mode)) +
                  " r:" + std::to_string(spec.r) + " na:" + std::to_string(spec.a_count) +
                  " nb:" + std::to_string(spec.b_count) +
                  " extra:" + std::to_string(spec.extra_edges);
  if (spec.mode == GeneratorMode::Guaranteed) {
    s += " d:" + std::to_string(spec.private_degree.value_or(
                     default_private_degree(spec.r, spec.epsilon)));
  }
  s += " seed:" + std::to_string(spec.seed) + " prng:mt19937_64";
  return s;
}

BipartiteHypergraph gen_guaranteed(const GeneratorSpec& spec) {
  check_basic(spec);
  const std::uint32_t d = spec.private_degree.value_or(default_private_degree(spec.r, spec.epsilon));
  const std::uint64_t needed = std::uint64_t{d} * (spec.r - 1) * spec.a_count;
  if (spec.b_count < needed) {
    throw Error(ErrorCode::InfeasibleSpec, "guaranteed mode needs b_count >= " +
                                               std::to_string(needed));
  }
  Prng rng(spec.seed);
  std::vector<VertexId> bs = iota_vertices(spec.b_count);
  rng.shuffle(bs);
  EdgeCollector out;
  std::size_t next = 0;
  for (VertexId a = 0; a < spec.a_count; ++a) {
    for (std::uint32_t j = 0; j < d; ++j) {
      std::vector<VertexId> edge(bs.begin() + next, bs.begin() + next + (spec.r - 1));
      next += spec.r - 1;
      out.add(a, std::move(edge));
    }
  }
  const std::vector<VertexId> shared(bs.begin() + next, bs.end());
  add_random_edges(out, rng, spec, shared, spec.extra_edges);
  return out.finish(spec, rng);
}

BipartiteHypergraph gen_planted(const GeneratorSpec& spec) {
  check_basic(spec);
  const std::uint64_t needed = std::uint64_t{spec.r - 1} * spec.a_count;
  if (spec.b_count < needed) {
    throw Error(ErrorCode::InfeasibleSpec, "planted mode needs b_count >= " +
                                               std::to_string(needed));
  }
  Prng rng(spec.seed);
  std::vector<VertexId> bs = iota_vertices(spec.b_count);
  rng.shuffle(bs);
  EdgeCollector out;
  for (VertexId a = 0; a < spec.a_count; ++a) {
    const auto first = bs.begin() + static_cast<std::ptrdiff_t>(a) * (spec.r - 1);
    out.add(a, std::vector<VertexId>(first, first + (spec.r - 1)));
  }
  add_random_edges(out, rng, spec, iota_vertices(spec.b_count), spec.extra_edges);
  return out.finish(spec, rng);
}

BipartiteHypergraph gen_graph(const GeneratorSpec& spec) {
  if (spec.r != 2) throw Error(ErrorCode::InfeasibleSpec, "graph mode requires r = 2");
  if (spec.a_count > 0 && spec.b_count == 0) {
    throw Error(ErrorCode::InfeasibleSpec, "graph mode needs b_count >= 1");
  }
  Prng rng(spec.seed);
  EdgeCollector out;
  for (VertexId a = 0; a < spec.a_count; ++a) {
    out.add(a, {static_cast<VertexId>(rng.below(spec.b_count))});
  }
  add_random_edges(out, rng, spec, iota_vertices(spec.b_count), spec.extra_edges);
  return out.finish(spec, rng);
}

BipartiteHypergraph gen_adversarial(const GeneratorSpec& spec) {
  check_basic(spec);
  if (spec.a_count > 0 && spec.b_count < spec.r - 1) {
    throw Error(ErrorCode::InfeasibleSpec, "adversarial mode needs b_count >= r - 1");
  }
  Prng rng(spec.seed);
  EdgeCollector out;
  if (spec.a_count == 0) return out.finish(spec, rng);
  const std::uint32_t funnel = 1 + (spec.b_count - 1) / 8;
  for (VertexId a = 0; a < spec.a_count; ++a) {
    const auto degree = rng.between(1, 3);
    for (std::uint64_t j = 0; j < degree; ++j) {
      std::vector<VertexId> edge{static_cast<VertexId>(rng.below(funnel))};
      while (edge.size() < spec.r - 1) {
        const auto b = static_cast<VertexId>(rng.below(spec.b_count));
        if (std::find(edge.begin(), edge.end(), b) == edge.end()) edge.push_back(b);
      }
      out.add(a, std::move(edge));
    }
  }
  add_random_edges(out, rng, spec, iota_vertices(spec.b_count), spec.extra_edges);
  return out.finish(spec, rng);
}

BipartiteHypergraph generate(const GeneratorSpec& spec) {
  switch (spec.mode) {
    case GeneratorMode::Planted: return gen_planted(spec);
    case GeneratorMode::Guaranteed: return gen_guaranteed(spec);
    case GeneratorMode::Graph: return gen_graph(spec);
    case GeneratorMode::Adversarial: return gen_adversarial(spec);
  }
  throw Error(ErrorCode::InfeasibleSpec, "unknown mode");
}

BipartiteHypergraph from_bipartite_graph(const std::vector<std::pair<VertexId, VertexId>>& pairs,
                                         std::uint32_t a_count, std::uint32_t b_count) {
  InstanceDescription desc{2, a_count, b_count, {}};
  desc.edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) desc.edges.push_back({a, {b}});
  return BipartiteHypergraph::build(desc);
}

}  // namespace hbm

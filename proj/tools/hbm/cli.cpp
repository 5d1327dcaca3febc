#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hbm/engine.hpp"
#include "hbm/format.hpp"
#include "hbm/generators.hpp"
#include "hbm/oracles.hpp"

namespace hbm::cli {

namespace {

std::string join(const std::vector<VertexId>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file(path, text);
  }
}

struct SolveArgs {
  std::string epsilon;
  std::string input;
  std::string output;
  std::string trace;
  std::optional<std::uint64_t> max_iters;
  std::optional<std::string> mu;
  std::optional<std::uint32_t> u;
  bool debug = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Rational eps = parse_rational(a.epsilon);
  const BipartiteHypergraph h = parse_instance(read_file(a.input));

  SolveOptions options;
  options.overrides.max_iterations = a.max_iters;
  options.overrides.u = a.u;
  if (a.mu) options.overrides.mu = parse_rational(*a.mu);
  options.debug_invariants = a.debug;
  InvariantReport report;
  options.invariants = &report;

  std::ofstream trace_file;
  std::optional<trace::Writer> writer;
  if (!a.trace.empty()) {
    trace_file.open(a.trace, std::ios::binary);
    if (!trace_file) throw Error(ErrorCode::IoError, "cannot write '" + a.trace + "'");
    writer.emplace(trace_file);
    options.trace = &*writer;
  }

  const SolveResult result = find_perfect_matching(h, eps, options);
  if (const auto* ie = std::get_if<InternalError>(&result.outcome)) {
    err << "error: " << to_string(ie->code) << ": " << ie->diagnostic << '\n';
    return kError;
  }
  if (a.debug) {
    err << "invariants: boundaries:" << report.boundaries
        << " superposed_checks:" << report.superposed_checks
        << " signature_checks:" << report.signature_checks
        << " violations:" << report.violations()
        << " guard_recomputed:" << report.guard.recomputed
        << " guard_unresolved:" << report.guard.unresolved << '\n';
    for (const auto& m : report.messages) err << "  " << m << '\n';
    if (!report.clean()) return kError;
  }
  const ResultDocument doc = make_result_document(result, eps);
  write_output(a.output, serialize_result(doc), out);
  return doc.status == ResultStatus::PerfectMatching ? kOk : kWitness;
}

int cmd_verify(const std::string& instance, const std::string& result_path, std::ostream& out,
               std::ostream& err) {
  const BipartiteHypergraph h = parse_instance(read_file(instance));
  const ResultDocument doc = parse_result(read_file(result_path));
  if (auto v = verify_result(h, doc)) {
    err << "FAIL " << v->message() << '\n';
    return kError;
  }
  out << "OK " << (doc.status == ResultStatus::PerfectMatching ? "perfect_matching" : "witness")
      << '\n';
  return kOk;
}

int cmd_check_haxell(const std::string& input, const std::string& epsilon, bool classic,
                     std::uint32_t max_a, std::ostream& out) {
  const BipartiteHypergraph h = parse_instance(read_file(input));
  const Rational eps = classic ? Rational(0) : parse_rational(epsilon);
  const auto mode = classic ? HaxellMode::Classic : HaxellMode::Strengthened;
  const HaxellResult res = check_haxell(h, eps, mode, max_a);
  if (std::holds_alternative<HaxellSatisfied>(res)) {
    out << "SATISFIED\n";
    return kOk;
  }
  const auto& v = std::get<HaxellViolated>(res);
  out << "VIOLATED S:" << join(v.s) << " tau:" << v.tau
      << " bound:" << format_rational(haxell_bound(h.r(), eps, v.s.size())) << '\n';
  return kWitness;
}

struct GenArgs {
  std::string mode = "guaranteed";
  std::uint32_t r = 2;
  std::uint32_t na = 0;
  std::optional<std::uint32_t> nb;
  std::uint32_t extra = 0;
  std::optional<std::uint32_t> d;
  std::uint64_t seed = 0;
  std::string epsilon = "1";
  std::string output;
};

// b_count used when --nb is absent: the smallest sensible size for the mode.
std::uint32_t default_b_count(const GeneratorSpec& s) {
  const std::uint32_t k = s.r - 1;
  switch (s.mode) {
    case GeneratorMode::Guaranteed:
      return s.private_degree.value_or(default_private_degree(s.r, s.epsilon)) * k * s.a_count +
             2 * k;
    case GeneratorMode::Planted: return 2 * k * s.a_count;
    case GeneratorMode::Graph: return std::max<std::uint32_t>(1, 2 * s.a_count);
    case GeneratorMode::Adversarial: return std::max(k, s.a_count);
  }
  return 0;
}

GeneratorSpec make_spec(const GenArgs& a) {
  GeneratorSpec s;
  s.mode = parse_generator_mode(a.mode);
  s.r = a.r;
  s.a_count = a.na;
  s.extra_edges = a.extra;
  s.private_degree = a.d;
  s.epsilon = parse_rational(a.epsilon);
  s.seed = a.seed;
  if (s.r < 2) throw Error(ErrorCode::InfeasibleSpec, "r must be at least 2");
  s.b_count = a.nb.value_or(default_b_count(s));
  return s;
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const GeneratorSpec spec = make_spec(a);
  const BipartiteHypergraph h = generate(spec);
  write_output(a.output, serialize_instance(h, {describe(spec)}), out);
  return kOk;
}

// "key=value" lines; '#' starts a comment.
GenArgs parse_bench_spec(const std::string& text) {
  GenArgs a;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = line.substr(0, line.find('#'));
    line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }),
               line.end());
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::ParseError, "spec line " + std::to_string(number) + ": expected key=value");
    }
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    auto num = [&] {
      try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return static_cast<std::uint32_t>(v);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError,
                    "spec line " + std::to_string(number) + ": bad number '" + value + "'");
      }
    };
    if (key == "mode") a.mode = value;
    else if (key == "r") a.r = num();
    else if (key == "na") a.na = num();
    else if (key == "nb") a.nb = num();
    else if (key == "extra_edges" || key == "extra-edges") a.extra = num();
    else if (key == "d") a.d = num();
    else throw Error(ErrorCode::ParseError, "spec line " + std::to_string(number) + ": unknown key '" + key + "'");
  }
  return a;
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
  try {
    const auto colon = text.find(':');
    if (colon == std::string::npos) return {0, std::stoull(text)};
    const std::uint64_t lo = std::stoull(text.substr(0, colon));
    const std::uint64_t hi = std::stoull(text.substr(colon + 1));
    if (hi < lo) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "--seeds takes N or LO:HI, got '" + text + "'");
  }
}

int cmd_bench(const std::string& spec_file, const std::string& seeds, const std::string& epsilon,
              unsigned jobs, std::ostream& out) {
  GenArgs base = parse_bench_spec(read_file(spec_file));
  base.epsilon = epsilon;
  const Rational eps = parse_rational(epsilon);
  const auto [lo, hi] = parse_seed_range(seeds);
  const std::uint64_t count = hi - lo;

  std::vector<std::string> rows(count);
  std::vector<bool> failed(count, false);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < count; i = next++) {
      GenArgs a = base;
      a.seed = lo + i;
      std::string row = "row seed:" + std::to_string(a.seed);
      try {
        const BipartiteHypergraph h = generate(make_spec(a));
        const auto start = std::chrono::steady_clock::now();
        const SolveResult res = find_perfect_matching(h, eps);
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start).count();
        std::string status = "matching";
        if (std::holds_alternative<WitnessFound>(res.outcome)) status = "witness";
        if (const auto* ie = std::get_if<InternalError>(&res.outcome)) {
          status = "error code:" + std::string(to_string(ie->code));
          failed[i] = true;
        }
        std::ostringstream wall;
        wall.setf(std::ios::fixed);
        wall.precision(3);
        wall << ms;
        row += " status:" + status + " na:" + std::to_string(h.a_count()) +
               " m:" + std::to_string(h.edge_count()) +
               " iterations:" + std::to_string(res.stats.iterations) +
               " max_layers:" + std::to_string(res.stats.max_layers) +
               " swaps:" + std::to_string(res.stats.swaps) +
               " build_ops:" + std::to_string(res.stats.build_ops) + " wall_ms:" + wall.str();
      } catch (const Error& e) {
        row += " status:error code:" + std::string(to_string(e.code()));
        failed[i] = true;
      }
      rows[i] = std::move(row);
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::uint64_t>(count, 1))));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& row : rows) out << row << '\n';
  const auto errors = std::count(failed.begin(), failed.end(), true);
  out << "summary rows:" << count << " errors:" << errors << '\n';
  return errors == 0 ? kOk : kError;
}

int cmd_check_trace(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto events = trace::parse_trace(read_file(path));
  const trace::CheckSummary s = trace::check_trace(events);
  for (const auto& v : s.violations) err << "FAIL " << v << '\n';
  out << (s.violations.empty() ? "OK" : "FAIL") << " augments:" << s.augments
      << " signatures:" << s.signatures << " comparisons:" << s.comparisons
      << " violations:" << s.violations.size() << '\n';
  return s.violations.empty() ? kOk : kError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfect matchings in bipartite hypergraphs, or certificates that none exist"};
  app.name("hbm");
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Find a perfect matching or a witness");
  s->add_option("--epsilon", solve.epsilon, "Slack in the matching condition, e.g. 1/4")->required();
  s->add_option("--input", solve.input, "Instance file")->required();
  s->add_option("--output", solve.output, "Result document (default: stdout)");
  s->add_option("--trace", solve.trace, "Write a solver trace to this file");
  s->add_option("--max-iters", solve.max_iters, "Iteration cap per augment call");
  s->add_option("--mu-override", solve.mu, "Replace the derived mu");
  s->add_option("--u-override", solve.u, "Replace the derived degree bound");
  s->add_flag("--debug-invariants", solve.debug, "Check invariants at every iteration");

  std::string v_instance, v_result;
  auto* v = app.add_subcommand("verify", "Check a result document against its instance");
  v->add_option("--instance", v_instance)->required();
  v->add_option("--result", v_result)->required();

  std::string c_input, c_eps = "0";
  bool c_classic = false;
  std::uint32_t c_max_a = kDefaultOracleCap;
  auto* c = app.add_subcommand("check-haxell", "Exhaustively test the matching condition");
  c->add_option("--input", c_input, "Instance file")->required();
  c->add_option("--epsilon", c_eps, "Slack of the strengthened condition");
  c->add_flag("--classic", c_classic, "Use the classic condition");
  c->add_option("--max-a", c_max_a, "Refuse instances with more A-vertices");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a seeded instance");
  g->add_option("--mode", gen.mode, "planted | guaranteed | graph | adversarial");
  g->add_option("--r", gen.r)->required();
  g->add_option("--na", gen.na)->required();
  g->add_option("--nb", gen.nb);
  g->add_option("--extra-edges", gen.extra);
  g->add_option("--d", gen.d, "Private edges per A-vertex (guaranteed mode)");
  g->add_option("--seed", gen.seed);
  g->add_option("--epsilon", gen.epsilon, "Sets the default d in guaranteed mode");
  g->add_option("--output", gen.output, "Instance file (default: stdout)");

  std::string b_spec, b_seeds = "100", b_eps = "1";
  unsigned b_jobs = 1;
  auto* b = app.add_subcommand("bench", "Solve a seeded batch and print one row per seed");
  b->add_option("--spec-file", b_spec, "key=value generator settings")->required();
  b->add_option("--seeds", b_seeds, "N for seeds 0..N-1, or LO:HI for LO..HI-1");
  b->add_option("--epsilon", b_eps);
  b->add_option("--jobs", b_jobs, "Worker threads");

  std::string t_path;
  auto* t = app.add_subcommand("check-trace", "Check signature decrease in a trace file");
  t->add_option("--trace", t_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kError;
  }

  try {
    if (*s) return cmd_solve(solve, out, err);
    if (*v) return cmd_verify(v_instance, v_result, out, err);
    if (*c) return cmd_check_haxell(c_input, c_eps, c_classic, c_max_a, out);
    if (*g) return cmd_gen(gen, out);
    if (*b) return cmd_bench(b_spec, b_seeds, b_eps, b_jobs, out);
    if (*t) return cmd_check_trace(t_path, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace hbm::cli

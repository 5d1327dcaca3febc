#include "hbm/format.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace hbm {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void fail(std::size_t line, const std::string& reason) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + reason);
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

// Calls f(line_number, line) for each line.
template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    f(number, text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

template <class T>
std::optional<T> to_uint(std::string_view s) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

template <class T>
T uint_or_fail(std::string_view s, std::size_t line, std::string_view what) {
  if (auto v = to_uint<T>(s)) return *v;
  fail(line, "bad " + std::string(what) + " '" + std::string(s) + "'");
}

std::string join(const std::vector<std::uint32_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<std::uint32_t> split_ids(std::string_view s, std::size_t line) {
  std::vector<std::uint32_t> out;
  if (s.empty()) return out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(uint_or_fail<std::uint32_t>(s.substr(0, comma), line, "id"));
    if (comma == std::string_view::npos) return out;
    s.remove_prefix(comma + 1);
  }
}

struct Record {
  std::size_t line = 0;
  std::string_view name;
  std::vector<std::pair<std::string_view, std::string_view>> fields;

  std::string_view get(std::string_view key) const {
    for (const auto& [k, v] : fields) {
      if (k == key) return v;
    }
    fail(line, "record '" + std::string(name) + "' lacks field '" + std::string(key) + "'");
  }
  template <class T>
  T number(std::string_view key) const {
    return uint_or_fail<T>(get(key), line, key);
  }
  bool flag(std::string_view key) const {
    const auto v = get(key);
    if (v == "1") return true;
    if (v == "0") return false;
    fail(line, "field '" + std::string(key) + "' must be 0 or 1");
  }
};

// Records of a line-delimited document; comment and blank lines are skipped.
std::vector<Record> records(std::string_view text) {
  std::vector<Record> out;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    const auto toks = tokens(line);
    if (toks.empty() || toks[0] == "c") return;
    Record rec{number, toks[0], {}};
    for (std::size_t i = 1; i < toks.size(); ++i) {
      const auto colon = toks[i].find(':');
      if (colon == std::string_view::npos) fail(number, "field without ':'");
      rec.fields.emplace_back(toks[i].substr(0, colon), toks[i].substr(colon + 1));
    }
    out.push_back(std::move(rec));
  });
  return out;
}

}  // namespace

BipartiteHypergraph parse_instance(std::string_view text) {
  InstanceDescription desc;
  bool have_header = false;
  std::size_t declared = 0;
  std::size_t last_line = 0;
  for_each_line(text, [&](std::size_t number, std::string_view line) {
    last_line = number;
    const auto toks = tokens(line);
    if (toks.empty() || toks[0] == "c") return;
    if (toks[0] == "p") {
      if (have_header) fail(number, "second header line");
      if (toks.size() != 6 || toks[1] != "hbm") fail(number, "expected 'p hbm <r> <nA> <nB> <m>'");
      desc.r = uint_or_fail<std::uint32_t>(toks[2], number, "r");
      desc.a_count = uint_or_fail<std::uint32_t>(toks[3], number, "|A|");
      desc.b_count = uint_or_fail<std::uint32_t>(toks[4], number, "|B|");
      declared = uint_or_fail<std::size_t>(toks[5], number, "edge count");
      have_header = true;
      return;
    }
    if (toks[0] != "e") fail(number, "unknown line type '" + std::string(toks[0]) + "'");
    if (!have_header) fail(number, "edge before header");
    if (toks.size() < 2) fail(number, "edge without A-vertex");
    if (desc.edges.size() == declared) fail(number, "more edges than the header declares");
    EdgeSpec e;
    e.a = uint_or_fail<VertexId>(toks[1], number, "A-vertex");
    for (std::size_t i = 2; i < toks.size(); ++i) {
      e.bs.push_back(uint_or_fail<VertexId>(toks[i], number, "B-vertex"));
    }
    desc.edges.push_back(std::move(e));
  });
  if (!have_header) fail(last_line, "missing 'p hbm' header");
  if (desc.edges.size() != declared) {
    fail(last_line, "header declares " + std::to_string(declared) + " edges, found " +
                        std::to_string(desc.edges.size()));
  }
  return BipartiteHypergraph::build(desc);
}

std::string serialize_instance(const BipartiteHypergraph& h,
                               const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "c " + c + "\n";
  out += "p hbm " + std::to_string(h.r()) + ' ' + std::to_string(h.a_count()) + ' ' +
         std::to_string(h.b_count()) + ' ' + std::to_string(h.edge_count()) + '\n';
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    out += "e " + std::to_string(h.a_of(e));
    for (VertexId b : h.bs_of(e)) {
      out += ' ';
      out += std::to_string(b);
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

ResultDocument make_result_document(const SolveResult& result, const Rational& epsilon) {
  ResultDocument doc;
  doc.epsilon = epsilon;
  doc.iterations = result.stats.iterations;
  doc.max_layers = result.stats.max_layers;
  doc.swaps = result.stats.swaps;
  doc.build_ops = result.stats.build_ops;
  if (const auto* pm = std::get_if<PerfectMatching>(&result.outcome)) {
    doc.status = ResultStatus::PerfectMatching;
    doc.matching = pm->edges;
  } else if (const auto* w = std::get_if<WitnessFound>(&result.outcome)) {
    doc.status = ResultStatus::Witness;
    doc.certificate = w->certificate;
  } else {
    const auto& err = std::get<InternalError>(result.outcome);
    throw Error(ErrorCode::InvalidParameters,
                "no result document for internal error " + std::string(to_string(err.code)));
  }
  return doc;
}

std::string serialize_result(const ResultDocument& doc) {
  std::string out = "result status:";
  out += doc.status == ResultStatus::PerfectMatching ? "perfect_matching" : "witness";
  out += " epsilon:" + format_rational(doc.epsilon) + '\n';
  if (doc.status == ResultStatus::PerfectMatching) {
    out += "matching edges:" + join(doc.matching) + '\n';
  } else {
    out += "witness S:" + join(doc.certificate.s) +
           " hitting_set:" + join(doc.certificate.hitting_set) +
           " bound:" + format_rational(doc.certificate.bound) + '\n';
  }
  out += "stats iterations:" + std::to_string(doc.iterations) +
         " max_layers:" + std::to_string(doc.max_layers) + " swaps:" + std::to_string(doc.swaps) +
         " build_ops:" + std::to_string(doc.build_ops) + '\n';
  return out;
}

ResultDocument parse_result(std::string_view text) {
  const auto recs = records(text);
  if (recs.size() != 3) {
    fail(recs.empty() ? 1 : recs.back().line, "a result document has exactly three records");
  }
  const Record& head = recs[0];
  const Record& body = recs[1];
  const Record& stats = recs[2];
  if (head.name != "result") fail(head.line, "expected 'result' record");
  ResultDocument doc;
  const auto status = head.get("status");
  try {
    doc.epsilon = parse_rational(head.get("epsilon"));
  } catch (const Error& e) {
    fail(head.line, e.what());
  }
  if (status == "perfect_matching") {
    if (body.name != "matching") fail(body.line, "expected 'matching' record");
    doc.status = ResultStatus::PerfectMatching;
    doc.matching = split_ids(body.get("edges"), body.line);
  } else if (status == "witness") {
    if (body.name != "witness") fail(body.line, "expected 'witness' record");
    doc.status = ResultStatus::Witness;
    doc.certificate.s = split_ids(body.get("S"), body.line);
    doc.certificate.hitting_set = split_ids(body.get("hitting_set"), body.line);
    doc.certificate.epsilon = doc.epsilon;
    try {
      doc.certificate.bound = parse_rational(body.get("bound"));
    } catch (const Error& e) {
      fail(body.line, e.what());
    }
  } else {
    fail(head.line, "unknown status '" + std::string(status) + "'");
  }
  if (stats.name != "stats") fail(stats.line, "expected 'stats' record");
  doc.iterations = stats.number<std::uint64_t>("iterations");
  doc.max_layers = stats.number<std::uint64_t>("max_layers");
  doc.swaps = stats.number<std::uint64_t>("swaps");
  doc.build_ops = stats.number<std::uint64_t>("build_ops");
  return doc;
}

Report verify_result(const BipartiteHypergraph& h, const ResultDocument& doc) {
  if (doc.status == ResultStatus::PerfectMatching) {
    return verify_matching(h, doc.matching, true);
  }
  if (auto v = verify_witness(h, doc.certificate)) return v;
  const Rational bound = haxell_bound(h.r(), doc.certificate.epsilon, doc.certificate.s.size());
  if (doc.certificate.bound != bound) {
    return Violation{ErrorCode::SizeExceedsBound, "stated bound " +
                                                      format_rational(doc.certificate.bound) +
                                                      " differs from " + format_rational(bound)};
  }
  return std::nullopt;
}

namespace trace {

std::string format_event(const Event& event) {
  auto n = [](auto v) { return std::to_string(v); };
  return std::visit(
      Overloaded{
          [&](const AugmentBegin& e) { return "augment root:" + n(e.root); },
          [&](const IterationBegin& e) {
            return "iteration_start iteration:" + n(e.iteration) + " layers:" + n(e.layers);
          },
          [&](const Signature& e) {
            return "signature iteration:" + n(e.iteration) + " coords:" + format_signature(e.value);
          },
          [&](const LayerBuilt& e) {
            return "layer_built iteration:" + n(e.iteration) + " layer:" + n(e.layer) +
                   " x:" + n(e.x) + " y:" + n(e.y) + " y_below:" + n(e.y_below) +
                   " growth_ok:" + n(int{e.growth_ok});
          },
          [&](const Collapse& e) {
            return "collapse iteration:" + n(e.iteration) + " layer:" + n(e.layer) +
                   " swaps:" + n(e.swaps) + " root_matched:" + n(int{e.root_matched});
          },
          [&](const SuperposedBuild& e) {
            return "superposed iteration:" + n(e.iteration) + " layer:" + n(e.layer) +
                   " x_before:" + n(e.x_before) + " x_after:" + n(e.x_after) +
                   " committed:" + n(int{e.committed});
          },
          [&](const IterationEnd& e) {
            return "iteration_end iteration:" + n(e.iteration) + " layers:" + n(e.layers);
          },
          [&](const Witness& e) {
            return "witness iteration:" + n(e.iteration) + " s:" + n(e.s_size) +
                   " hitting_set:" + n(e.hitting_set_size);
          },
          [&](const AugmentEnd& e) {
            return "augment_end root:" + n(e.root) + " matched:" + n(int{e.matched}) +
                   " iterations:" + n(e.iterations);
          },
      },
      event);
}

Writer::Writer(std::ostream& out) : out_(out) { out_ << "c hbm-trace v1\n"; }

void Writer::emit(const Event& event) { out_ << format_event(event) << '\n'; }

std::vector<Event> parse_trace(std::string_view text) {
  std::vector<Event> out;
  for (const Record& r : records(text)) {
    auto u64 = [&](std::string_view k) { return r.number<std::uint64_t>(k); };
    auto sz = [&](std::string_view k) { return r.number<std::size_t>(k); };
    if (r.name == "augment") {
      out.push_back(AugmentBegin{r.number<VertexId>("root")});
    } else if (r.name == "iteration_start") {
      out.push_back(IterationBegin{u64("iteration"), sz("layers")});
    } else if (r.name == "signature") {
      SignatureVector sig;
      try {
        sig = parse_signature(r.get("coords"));
      } catch (const Error& e) {
        fail(r.line, e.what());
      }
      out.push_back(Signature{u64("iteration"), std::move(sig)});
    } else if (r.name == "layer_built") {
      out.push_back(LayerBuilt{u64("iteration"), sz("layer"), sz("x"), sz("y"), sz("y_below"),
                               r.flag("growth_ok")});
    } else if (r.name == "collapse") {
      out.push_back(Collapse{u64("iteration"), sz("layer"), sz("swaps"), r.flag("root_matched")});
    } else if (r.name == "superposed") {
      out.push_back(SuperposedBuild{u64("iteration"), sz("layer"), sz("x_before"), sz("x_after"),
                                    r.flag("committed")});
    } else if (r.name == "iteration_end") {
      out.push_back(IterationEnd{u64("iteration"), sz("layers")});
    } else if (r.name == "witness") {
      out.push_back(Witness{u64("iteration"), sz("s"), sz("hitting_set")});
    } else if (r.name == "augment_end") {
      out.push_back(AugmentEnd{r.number<VertexId>("root"), r.flag("matched"), u64("iterations")});
    } else {
      fail(r.line, "unknown trace record '" + std::string(r.name) + "'");
    }
  }
  return out;
}

CheckSummary check_trace(const std::vector<Event>& events) {
  CheckSummary summary;
  std::optional<SignatureVector> previous;
  std::optional<VertexId> root;
  std::uint64_t previous_iteration = 0;
  for (const Event& ev : events) {
    if (const auto* b = std::get_if<AugmentBegin>(&ev)) {
      ++summary.augments;
      root = b->root;
      previous.reset();
    } else if (const auto* s = std::get_if<Signature>(&ev)) {
      ++summary.signatures;
      const std::string where = "augment from " + (root ? std::to_string(*root) : "?") +
                                ", iteration " + std::to_string(s->iteration) + ": ";
      if (!has_monotone_magnitudes(s->value)) {
        summary.violations.push_back(where + "magnitudes not monotone in " +
                                     format_signature(s->value));
      }
      if (previous) {
        ++summary.comparisons;
        if (!lex_less(s->value, *previous)) {
          summary.violations.push_back(where + format_signature(s->value) +
                                       " does not decrease from " + format_signature(*previous) +
                                       " (iteration " + std::to_string(previous_iteration) + ")");
        }
      }
      previous = s->value;
      previous_iteration = s->iteration;
    } else if (std::holds_alternative<AugmentEnd>(ev)) {
      previous.reset();
    }
  }
  return summary;
}

}  // namespace trace

}  // namespace hbm

#pragma once

// Text formats: HBM instances, result documents and solver traces. Result
// and trace documents hold one record per line: a record name followed by
// key:value fields in a fixed order.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hbm/engine.hpp"
#include "hbm/hypergraph.hpp"
#include "hbm/oracles.hpp"
#include "hbm/trace.hpp"

namespace hbm {

/// HBM text: optional "c ..." comment lines, a "p hbm <r> <nA> <nB> <m>"
/// header and m lines "e <a> <b1> ... <b_{r-1}>". Blank lines are ignored.
/// Throws Error(ParseError) with a line number, or the validate_instance
/// error of a structurally bad instance.
BipartiteHypergraph parse_instance(std::string_view text);

/// Canonical form: optional comment lines, the header, then one edge per
/// line in edge-id order with B-vertices increasing.
std::string serialize_instance(const BipartiteHypergraph& h,
                               const std::vector<std::string>& comments = {});

std::string read_file(const std::string& path);   // Error(IoError)
void write_file(const std::string& path, std::string_view contents);

enum class ResultStatus { PerfectMatching, Witness };

struct ResultDocument {
  ResultStatus status = ResultStatus::PerfectMatching;
  Rational epsilon;
  std::vector<EdgeId> matching;    // PerfectMatching
  WitnessCertificate certificate;  // Witness
  std::uint64_t iterations = 0;
  std::uint64_t max_layers = 0;
  std::uint64_t swaps = 0;
  std::uint64_t build_ops = 0;
};

/// Throws Error(InvalidParameters) for an InternalError outcome.
ResultDocument make_result_document(const SolveResult& result, const Rational& epsilon);

std::string serialize_result(const ResultDocument& doc);
ResultDocument parse_result(std::string_view text);

/// Checks the document's claim against the instance: a perfect matching, or
/// a witness whose hitting set hits E_S within the recomputed bound.
Report verify_result(const BipartiteHypergraph& h, const ResultDocument& doc);

namespace trace {

/// Writes events as trace records; the first line is "c hbm-trace v1".
class Writer final : public Sink {
 public:
  explicit Writer(std::ostream& out);
  void emit(const Event& event) override;

 private:
  std::ostream& out_;
};

std::string format_event(const Event& event);
std::vector<Event> parse_trace(std::string_view text);

struct CheckSummary {
  std::uint64_t augments = 0;
  std::uint64_t signatures = 0;
  std::uint64_t comparisons = 0;
  std::vector<std::string> violations;
};

/// Within each augment call, consecutive signatures must strictly decrease
/// lexicographically, and every signature must have monotone magnitudes.
CheckSummary check_trace(const std::vector<Event>& events);

}  // namespace trace

}  // namespace hbm

#pragma once

// The augmenting algorithm: alternating trees with a per-vertex degree
// bound, lazy collapses, superposed builds, and witness extraction when a
// freshly built layer is too small.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hbm/hypergraph.hpp"
#include "hbm/matching.hpp"
#include "hbm/oracles.hpp"
#include "hbm/params.hpp"
#include "hbm/signature.hpp"
#include "hbm/trace.hpp"
#include "hbm/tree.hpp"

namespace hbm {

struct SolveStats {
  std::uint64_t augments = 0;
  std::uint64_t iterations = 0;
  std::uint64_t max_layers = 0;
  std::uint64_t swaps = 0;
  std::uint64_t build_ops = 0;
  std::uint64_t collapses = 0;
  std::uint64_t superposed_commits = 0;

  SolveStats& operator+=(const SolveStats& o);
};

/// Debug-mode findings at iteration boundaries. Every counter except the
/// check counters must stay zero.
struct InvariantReport {
  std::uint64_t boundaries = 0;
  std::uint64_t superposed_checks = 0;
  std::uint64_t signature_checks = 0;

  std::uint64_t tree_invalid = 0;
  std::uint64_t collapsible_layer = 0;      // some layer collapsible
  std::uint64_t y_below_x_fraction = 0;     // |Y_i| < (1 - mu)|X_i|
  std::uint64_t superposed_growth = 0;      // |X'_i| >= (1 + mu)|X_i|
  std::uint64_t layer_growth = 0;           // |X_{i+1}| <= delta |Y_{<=i}|
  std::uint64_t too_many_layers = 0;        // (1 + gamma)^l > n
  std::uint64_t signature_not_decreasing = 0;
  std::uint64_t signature_not_monotone = 0;
  std::uint64_t signature_undefined = 0;    // empty X or Y at a boundary
  FloorGuardStats guard;

  std::vector<std::string> messages;  // first few findings

  std::uint64_t violations() const;
  bool clean() const { return violations() == 0 && guard.unresolved == 0; }
  InvariantReport& operator+=(const InvariantReport& o);
};

struct SolveOptions {
  ParameterOverrides overrides;
  /// Validate the tree and check the growth and potential invariants at
  /// every iteration boundary.
  bool debug_invariants = false;
  /// Superposed-build re-checks run on every k-th boundary.
  std::uint32_t superposed_check_stride = 1;
  trace::Sink* trace = nullptr;
  InvariantReport* invariants = nullptr;
};

struct Matched {
  PartialMatching matching;
};
struct WitnessFound {
  WitnessCertificate certificate;
};
struct InternalError {
  ErrorCode code;
  std::string diagnostic;
};

using AugmentOutcome = std::variant<Matched, WitnessFound, InternalError>;

/// PASS iff a small tree gained at least one edge, or a large tree gained
/// more than delta |Y_{<=l}| edges. y_below counts the root.
bool growth_check(std::size_t y_below, std::size_t new_x, const Parameters& params);

/// More than mu |X| of the X edges are immediately addable.
bool is_collapsible(const BipartiteHypergraph& h, const PartialMatching& m, const Layer& layer,
                    const Parameters& params);

/// State of one augment call. The phase methods are public so tests can
/// step through an iteration; augment() drives them to completion.
class AugmentState {
 public:
  AugmentState(const BipartiteHypergraph& h, PartialMatching m, VertexId root,
               const Parameters& params, trace::Sink* trace = nullptr);

  const BipartiteHypergraph& graph() const noexcept { return h_; }
  const PartialMatching& matching() const noexcept { return m_; }
  PartialMatching take_matching() { return std::move(m_); }
  const AlternatingTree& tree() const noexcept { return tree_; }
  const Parameters& params() const noexcept { return params_; }
  bool root_matched() const noexcept { return root_matched_; }
  const SolveStats& stats() const noexcept { return stats_; }
  std::uint64_t iteration() const noexcept { return iteration_; }
  void set_iteration(std::uint64_t i) { iteration_ = i; }

  /// Builds L_{l+1} from A(Y_l), appends it, and returns the growth check.
  bool build_phase();
  /// Collapses the last layer while it is collapsible.
  void collapse_phase();
  /// Swaps along the last layer, discards it, and tries a superposed build
  /// on the new last layer.
  void collapse_layer();
  /// Rebuilds L_i on top of its own contents, ignoring higher layers;
  /// commits when X grew by a (1 + mu) factor. Returns whether it committed.
  bool superposed_build(std::size_t i);
  /// The same rebuild without committing.
  Layer tentative_build(std::size_t i);

  /// Requires nonempty X_i and Y_i in every layer.
  SignatureVector signature(SignatureEvaluator& eval) const;

  /// After a failed growth check: the violating set and its hitting set.
  WitnessCertificate extract_witness();

  /// Boundary invariants; findings are added to `report`.
  void check_boundary(InvariantReport& report, bool check_superposed);

 private:
  void emit(const trace::Event& e) {
    if (trace_) trace_->emit(e);
  }

  const BipartiteHypergraph& h_;
  PartialMatching m_;
  AlternatingTree tree_;
  Parameters params_;
  BuildWorkspace ws_;
  trace::Sink* trace_;
  bool root_matched_ = false;
  std::uint64_t iteration_ = 0;
  SolveStats stats_;
};

/// Extends m to also match root (returns Matched), or returns a witness
/// certificate that verify_witness accepts. InternalError signals a bug.
AugmentOutcome augment(const BipartiteHypergraph& h, PartialMatching m, VertexId root,
                       const Parameters& params, const SolveOptions& options = {},
                       SolveStats* stats = nullptr);

struct PerfectMatching {
  std::vector<EdgeId> edges;  // increasing
};

using SolveOutcome = std::variant<PerfectMatching, WitnessFound, InternalError>;

struct SolveResult {
  SolveOutcome outcome;
  SolveStats stats;
};

/// Runs augment for every A-vertex in order, starting from the empty
/// matching. Stops at the first witness.
SolveResult find_perfect_matching(const BipartiteHypergraph& h, const Rational& epsilon,
                                  const SolveOptions& options = {});

}  // namespace hbm

#include "hbm/engine.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace hbm {

namespace {

constexpr std::size_t kMaxMessages = 16;

void note(InvariantReport& report, std::uint64_t& counter, std::string message) {
  ++counter;
  if (report.messages.size() < kMaxMessages) report.messages.push_back(std::move(message));
}

Rational count(std::size_t n) { return Rational(static_cast<std::uint64_t>(n)); }

}  // namespace

SolveStats& SolveStats::operator+=(const SolveStats& o) {
  augments += o.augments;
  iterations += o.iterations;
  max_layers = std::max(max_layers, o.max_layers);
  swaps += o.swaps;
  build_ops += o.build_ops;
  collapses += o.collapses;
  superposed_commits += o.superposed_commits;
  return *this;
}

std::uint64_t InvariantReport::violations() const {
  return tree_invalid + collapsible_layer + y_below_x_fraction + superposed_growth +
         layer_growth + too_many_layers + signature_not_decreasing + signature_not_monotone +
         signature_undefined;
}

InvariantReport& InvariantReport::operator+=(const InvariantReport& o) {
  boundaries += o.boundaries;
  superposed_checks += o.superposed_checks;
  signature_checks += o.signature_checks;
  tree_invalid += o.tree_invalid;
  collapsible_layer += o.collapsible_layer;
  y_below_x_fraction += o.y_below_x_fraction;
  superposed_growth += o.superposed_growth;
  layer_growth += o.layer_growth;
  too_many_layers += o.too_many_layers;
  signature_not_decreasing += o.signature_not_decreasing;
  signature_not_monotone += o.signature_not_monotone;
  signature_undefined += o.signature_undefined;
  guard.evaluations += o.guard.evaluations;
  guard.recomputed += o.guard.recomputed;
  guard.unresolved += o.guard.unresolved;
  for (const auto& m : o.messages) {
    if (messages.size() < kMaxMessages) messages.push_back(m);
  }
  return *this;
}

bool growth_check(std::size_t y_below, std::size_t new_x, const Parameters& params) {
  if (y_below < params.small_tree_threshold) return new_x >= 1;
  return count(new_x) > params.delta * count(y_below);
}

bool is_collapsible(const BipartiteHypergraph& h, const PartialMatching& m, const Layer& layer,
                    const Parameters& params) {
  std::size_t addable = 0;
  for (EdgeId e : layer.x) addable += is_immediately_addable(h, m, e) ? 1 : 0;
  return count(addable) > params.mu * count(layer.x.size());
}

AugmentState::AugmentState(const BipartiteHypergraph& h, PartialMatching m, VertexId root,
                           const Parameters& params, trace::Sink* trace)
    : h_(h), m_(std::move(m)), tree_(h, root), params_(params), ws_(h), trace_(trace) {
  if (m_.is_matched(root)) {
    throw Error(ErrorCode::AlreadyInMatching, "root " + std::to_string(root) + " is matched");
  }
}

bool AugmentState::build_phase() {
  const std::size_t depth = tree_.depth();
  const auto parents = tree_.parent_set(h_, depth + 1);
  const std::size_t y_below = tree_.y_total();
  Layer fresh = build_layer(h_, m_, tree_, depth, parents, Layer{}, params_.u, ws_);
  ++stats_.build_ops;
  const bool ok = growth_check(y_below, fresh.x.size(), params_);
  emit(trace::LayerBuilt{iteration_, depth + 1, fresh.x.size(), fresh.y.size(), y_below, ok});
  tree_.push_layer(h_, std::move(fresh));
  stats_.max_layers = std::max<std::uint64_t>(stats_.max_layers, tree_.depth());
  return ok;
}

void AugmentState::collapse_phase() {
  while (!root_matched_ && tree_.depth() > 0 &&
         is_collapsible(h_, m_, tree_.layer(tree_.depth()), params_)) {
    collapse_layer();
  }
}

void AugmentState::collapse_layer() {
  const std::size_t depth = tree_.depth();
  ++stats_.collapses;

  // (vertex, edge) pairs of the last layer, so each blocker finds the least
  // addable edge of its own vertex by binary search.
  std::vector<std::pair<VertexId, EdgeId>> by_vertex;
  for (EdgeId e : tree_.layer(depth).x) by_vertex.emplace_back(h_.a_of(e), e);
  std::sort(by_vertex.begin(), by_vertex.end());

  if (depth == 1) {
    for (const auto& [a, e] : by_vertex) {
      if (is_immediately_addable(h_, m_, e)) {
        m_.insert(h_, e);
        root_matched_ = true;
        break;
      }
    }
    tree_.pop_layer(h_);
    emit(trace::Collapse{iteration_, 1, 0, root_matched_});
    return;
  }

  std::vector<EdgeId> blockers = tree_.layer(depth - 1).y;
  std::sort(blockers.begin(), blockers.end());
  std::size_t swaps = 0;
  for (EdgeId f : blockers) {
    const VertexId a = h_.a_of(f);
    auto it = std::lower_bound(by_vertex.begin(), by_vertex.end(), std::make_pair(a, EdgeId{0}));
    for (; it != by_vertex.end() && it->first == a; ++it) {
      if (!is_immediately_addable(h_, m_, it->second)) continue;
      m_.swap_edges(h_, f, it->second);
      tree_.remove_blocking(h_, depth - 1, f);
      ++swaps;
      break;
    }
  }
  tree_.pop_layer(h_);
  stats_.swaps += swaps;
  emit(trace::Collapse{iteration_, depth, swaps, false});
  superposed_build(depth - 1);
}

Layer AugmentState::tentative_build(std::size_t i) {
  const auto parents = tree_.parent_set(h_, i);
  return build_layer(h_, m_, tree_, i, parents, tree_.layer(i), params_.u, ws_);
}

bool AugmentState::superposed_build(std::size_t i) {
  const std::size_t before = tree_.layer(i).x.size();
  Layer grown = tentative_build(i);
  ++stats_.build_ops;
  const std::size_t after = grown.x.size();
  const bool commit = count(after) >= (1 + params_.mu) * count(before);
  emit(trace::SuperposedBuild{iteration_, i, before, after, commit});
  if (commit && after != before) {
    tree_.replace_layer(h_, i, std::move(grown));
    ++stats_.superposed_commits;
  }
  return commit;
}

SignatureVector AugmentState::signature(SignatureEvaluator& eval) const {
  std::vector<LayerSizes> sizes;
  sizes.reserve(tree_.depth());
  for (const Layer& l : tree_.layers()) sizes.push_back({l.x.size(), l.y.size()});
  return eval.evaluate(sizes);
}

WitnessCertificate AugmentState::extract_witness() {
  const std::size_t top = tree_.depth();  // the layer that failed its growth check
  std::vector<bool> in_h(h_.b_count(), false);
  std::vector<bool> dropped(h_.a_count(), false);
  auto mark_edge = [&](EdgeId e) {
    for (VertexId b : h_.bs_of(e)) in_h[b] = true;
  };
  for (const Layer& l : tree_.layers()) {
    std::for_each(l.x.begin(), l.x.end(), mark_edge);
    std::for_each(l.y.begin(), l.y.end(), mark_edge);
  }
  for (std::size_t i = 1; i < top; ++i) {
    const Layer grown = tentative_build(i);
    const Layer& current = tree_.layer(i);
    for (std::size_t k = current.x.size(); k < grown.x.size(); ++k) {
      dropped[h_.a_of(grown.x[k])] = true;
      mark_edge(grown.x[k]);
    }
    for (std::size_t k = current.y.size(); k < grown.y.size(); ++k) mark_edge(grown.y[k]);
  }

  std::vector<VertexId> s;
  auto consider = [&](VertexId a) {
    if (!dropped[a] && tree_.x_degree(a) < params_.u) s.push_back(a);
  };
  consider(tree_.root());
  for (std::size_t i = 1; i < top; ++i) {
    for (EdgeId f : tree_.layer(i).y) consider(h_.a_of(f));
  }
  std::vector<VertexId> hitting;
  for (VertexId b = 0; b < h_.b_count(); ++b) {
    if (in_h[b]) hitting.push_back(b);
  }
  auto cert = make_certificate(h_, std::move(s), std::move(hitting), params_.epsilon);
  emit(trace::Witness{iteration_, cert.s.size(), cert.hitting_set.size()});
  return cert;
}

void AugmentState::check_boundary(InvariantReport& report, bool check_superposed) {
  ++report.boundaries;
  const std::string where = "iteration " + std::to_string(iteration_) + ": ";
  if (auto v = validate_tree(h_, m_, tree_, params_.u)) {
    note(report, report.tree_invalid, where + v->message());
  }
  std::size_t y_below = 1;
  for (std::size_t i = 1; i <= tree_.depth(); ++i) {
    const Layer& l = tree_.layer(i);
    const std::string at = where + "layer " + std::to_string(i) + " ";
    if (is_collapsible(h_, m_, l, params_)) note(report, report.collapsible_layer, at + "collapsible");
    if (count(l.y.size()) < (1 - params_.mu) * count(l.x.size())) {
      note(report, report.y_below_x_fraction, at + "|Y| < (1-mu)|X|");
    }
    if (!(count(l.x.size()) > params_.delta * count(y_below))) {
      note(report, report.layer_growth, at + "|X| <= delta |Y_below|");
    }
    y_below += l.y.size();
    if (check_superposed) {
      ++report.superposed_checks;
      const Layer grown = tentative_build(i);
      if (count(grown.x.size()) >= (1 + params_.mu) * count(l.x.size())) {
        note(report, report.superposed_growth,
             at + "superposed build grows X from " + std::to_string(l.x.size()) + " to " +
                 std::to_string(grown.x.size()));
      }
    }
  }
  Rational power = 1;
  for (std::size_t i = 0; i < tree_.depth(); ++i) power *= 1 + params_.gamma;
  if (power > count(h_.a_count())) {
    note(report, report.too_many_layers, where + std::to_string(tree_.depth()) + " layers");
  }
}

AugmentOutcome augment(const BipartiteHypergraph& h, PartialMatching m, VertexId root,
                       const Parameters& params, const SolveOptions& options, SolveStats* stats) {
  AugmentState state(h, std::move(m), root, params, options.trace);
  auto emit = [&](const trace::Event& e) {
    if (options.trace) options.trace->emit(e);
  };
  emit(trace::AugmentBegin{root});

  const bool debug = options.debug_invariants;
  std::optional<SignatureEvaluator> eval;
  if (debug || options.trace) eval.emplace(params);
  InvariantReport local;
  InvariantReport& report = options.invariants ? *options.invariants : local;
  const std::uint32_t stride = std::max<std::uint32_t>(1, options.superposed_check_stride);

  std::uint64_t it = 0;
  auto finish = [&](bool matched) {
    if (stats) {
      SolveStats s = state.stats();
      s.augments = 1;
      s.iterations = it;
      *stats += s;
    }
    if (debug && eval) {
      report.guard.evaluations += eval->guard_stats().evaluations;
      report.guard.recomputed += eval->guard_stats().recomputed;
      report.guard.unresolved += eval->guard_stats().unresolved;
    }
    emit(trace::AugmentEnd{root, matched, it});
  };

  std::optional<SignatureVector> previous;
  while (true) {
    ++it;
    if (it > params.max_iterations) {
      --it;
      finish(false);
      return InternalError{ErrorCode::IterationCapExceeded,
                           "augment from A-vertex " + std::to_string(root) + " exceeded " +
                               std::to_string(params.max_iterations) + " iterations"};
    }
    state.set_iteration(it);
    emit(trace::IterationBegin{it, state.tree().depth()});

    if (eval) {
      try {
        SignatureVector sig = state.signature(*eval);
        emit(trace::Signature{it, sig});
        if (debug) {
          ++report.signature_checks;
          const std::string where = "iteration " + std::to_string(it) + ": signature ";
          if (!has_monotone_magnitudes(sig)) {
            note(report, report.signature_not_monotone, where + format_signature(sig));
          }
          if (previous && !lex_less(sig, *previous)) {
            note(report, report.signature_not_decreasing,
                 where + format_signature(sig) + " after " + format_signature(*previous));
          }
        }
        previous = std::move(sig);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::LogOfZero) throw;
        if (debug) note(report, report.signature_undefined, e.what());
        previous.reset();
      }
    }
    if (debug) state.check_boundary(report, (it - 1) % stride == 0);

    if (!state.build_phase()) {
      WitnessCertificate cert = state.extract_witness();
      finish(false);
      if (auto v = verify_witness(h, cert)) {
        return InternalError{ErrorCode::CertificateInvalid, v->message()};
      }
      return WitnessFound{std::move(cert)};
    }
    state.collapse_phase();
    emit(trace::IterationEnd{it, state.tree().depth()});
    if (state.root_matched()) {
      finish(true);
      return Matched{state.take_matching()};
    }
  }
}

SolveResult find_perfect_matching(const BipartiteHypergraph& h, const Rational& epsilon,
                                  const SolveOptions& options) {
  const Parameters params = Parameters::make(epsilon, h.r(), h.a_count(), options.overrides);
  SolveResult result{PerfectMatching{}, SolveStats{}};
  PartialMatching m(h);
  for (VertexId a = 0; a < h.a_count(); ++a) {
    if (m.is_matched(a)) continue;
    AugmentOutcome out = augment(h, std::move(m), a, params, options, &result.stats);
    if (auto* matched = std::get_if<Matched>(&out)) {
      m = std::move(matched->matching);
      continue;
    }
    if (auto* w = std::get_if<WitnessFound>(&out)) {
      result.outcome = std::move(*w);
    } else {
      result.outcome = std::get<InternalError>(std::move(out));
    }
    return result;
  }
  std::vector<EdgeId> edges = m.edges();
  if (auto v = verify_matching(h, edges, true)) {
    result.outcome = InternalError{v->code, v->message()};
    return result;
  }
  result.outcome = PerfectMatching{std::move(edges)};
  return result;
}

}  // namespace hbm

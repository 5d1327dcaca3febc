#include <gtest/gtest.h>

#include <random>

#include "hbm/hypergraph.hpp"
#include "hbm/matching.hpp"
#include "hbm/params.hpp"
#include "hbm/rational.hpp"
#include "naive.hpp"

namespace hbm {
namespace {

BipartiteHypergraph make(std::uint32_t r, std::uint32_t na, std::uint32_t nb,
                         std::vector<EdgeSpec> edges) {
  return BipartiteHypergraph::build({r, na, nb, std::move(edges)});
}

ErrorCode code_of(const Report& rep) { return rep ? rep->code : ErrorCode::IoError; }

TEST(ValidateInstance, MinimalInstanceIsClean) {
  EXPECT_FALSE(validate_instance(InstanceDescription{3, 1, 2, {{0, {0, 1}}}}));
}

TEST(ValidateInstance, RepeatedBVertex) {
  EXPECT_EQ(code_of(validate_instance(InstanceDescription{3, 1, 2, {{0, {0, 0}}}})),
            ErrorCode::DuplicateBVertex);
}

TEST(ValidateInstance, BVertexOutOfRange) {
  EXPECT_EQ(code_of(validate_instance(InstanceDescription{2, 1, 3, {{0, {5}}}})),
            ErrorCode::IndexOutOfRange);
}

TEST(ValidateInstance, AVertexOutOfRange) {
  EXPECT_EQ(code_of(validate_instance(InstanceDescription{2, 1, 3, {{1, {0}}}})),
            ErrorCode::IndexOutOfRange);
}

TEST(ValidateInstance, WrongEdgeSize) {
  EXPECT_EQ(code_of(validate_instance(InstanceDescription{3, 1, 3, {{0, {0}}}})),
            ErrorCode::NonUniformEdge);
}

TEST(ValidateInstance, UniformityBelowTwo) {
  EXPECT_EQ(code_of(validate_instance(InstanceDescription{1, 1, 3, {}})),
            ErrorCode::InvalidUniformity);
}

TEST(ValidateInstance, DuplicateEdgeUpToOrder) {
  EXPECT_EQ(code_of(validate_instance(InstanceDescription{3, 1, 3, {{0, {0, 1}}, {0, {1, 0}}}})),
            ErrorCode::DuplicateEdge);
}

TEST(ValidateInstance, BuildThrowsWithTheSameCode) {
  try {
    make(3, 1, 2, {{0, {0, 0}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicateBVertex);
  }
}

TEST(Hypergraph, SortsBVerticesAndIndexesIncidence) {
  const auto h = make(3, 2, 4, {{0, {3, 1}}, {1, {0, 1}}, {0, {2, 0}}});
  EXPECT_EQ(h.edge_count(), 3u);
  EXPECT_EQ(std::vector<VertexId>(h.bs_of(0).begin(), h.bs_of(0).end()), (std::vector<VertexId>{1, 3}));
  EXPECT_EQ(std::vector<EdgeId>(h.edges_of_a(0).begin(), h.edges_of_a(0).end()), (std::vector<EdgeId>{0, 2}));
  EXPECT_EQ(std::vector<EdgeId>(h.edges_of_b(1).begin(), h.edges_of_b(1).end()), (std::vector<EdgeId>{0, 1}));
  EXPECT_TRUE(h.shares_b(0, 1));
  EXPECT_FALSE(h.shares_b(0, 2));
  EXPECT_FALSE(validate_instance(h));
  EXPECT_EQ(BipartiteHypergraph::build(h.describe()), h);
}

TEST(IncidentEdges, EmptySet) {
  const auto h = make(3, 1, 2, {{0, {0, 1}}});
  EXPECT_TRUE(incident_edges(h, {}).empty());
}

TEST(IncidentEdges, SingleIncidence) {
  const auto h = make(3, 1, 2, {{0, {0, 1}}});
  const std::vector<VertexId> s{0};
  EXPECT_EQ(incident_edges(h, s), (std::vector<EdgeId>{0}));
}

TEST(IncidentEdges, FiltersByAVertex) {
  const auto h = make(3, 2, 4, {{0, {0, 1}}, {1, {0, 2}}, {0, {2, 3}}});
  const std::vector<VertexId> s{0};
  EXPECT_EQ(incident_edges(h, s), (std::vector<EdgeId>{0, 2}));
}

TEST(IncidentEdges, MatchesScanOnRandomInstances) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto h = naive::random_hypergraph(rng, 3, 6, 8, 20);
    std::vector<VertexId> s;
    std::uint32_t mask = 0;
    for (VertexId a = 0; a < 6; ++a) {
      if (rng() % 2) {
        s.push_back(a);
        mask |= 1u << a;
      }
    }
    EXPECT_EQ(incident_edges(h, s), naive::edges_of_set(h, mask));
  }
}

TEST(IncidentEdges, RejectsOutOfRange) {
  const auto h = make(2, 1, 1, {{0, {0}}});
  const std::vector<VertexId> s{4};
  EXPECT_THROW(incident_edges(h, s), Error);
}

// Edges: e0=(a0;b0,b1) e1=(a1;b0,b2) e2=(a0;b2,b3) e3=(a0;b1,b2) e4=(a1;b2,b3) e5=(a0;b4,b5)
BipartiteHypergraph matching_fixture() {
  return make(3, 2, 6,
              {{0, {0, 1}}, {1, {0, 2}}, {0, {2, 3}}, {0, {1, 2}}, {1, {2, 3}}, {0, {4, 5}}});
}

TEST(Blocking, EmptyMatching) {
  const auto h = matching_fixture();
  EXPECT_TRUE(blocking_edges(h, PartialMatching(h), 0).empty());
  EXPECT_TRUE(is_immediately_addable(h, PartialMatching(h), 0));
}

TEST(Blocking, SharedBVertexBlocks) {
  const auto h = matching_fixture();
  PartialMatching m(h);
  m.insert(h, 1);
  EXPECT_EQ(blocking_edges(h, m, 0), (std::vector<EdgeId>{1}));
  EXPECT_FALSE(is_immediately_addable(h, m, 0));
}

TEST(Blocking, SharingOnlyTheAVertexDoesNotBlock) {
  const auto h = matching_fixture();
  PartialMatching m(h);
  m.insert(h, 2);
  EXPECT_TRUE(blocking_edges(h, m, 0).empty());
  EXPECT_TRUE(is_immediately_addable(h, m, 0));
}

TEST(Swap, DisjointReplacement) {
  const auto h = matching_fixture();
  PartialMatching m(h);
  m.insert(h, 0);
  const auto out = swap(h, m, 0, 2);
  EXPECT_EQ(out.edges(), (std::vector<EdgeId>{2}));
  EXPECT_EQ(out.matched_a(), (std::vector<VertexId>{0}));
}

TEST(Swap, OwnEdgeBlocksThroughSharedB) {
  const auto h = matching_fixture();
  PartialMatching m(h);
  m.insert(h, 0);
  try {
    swap(h, m, 0, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAddable);
  }
}

TEST(Swap, LeavesOtherEdgesAlone) {
  const auto h = matching_fixture();
  PartialMatching m(h);
  m.insert(h, 0);
  m.insert(h, 4);
  const auto out = swap(h, m, 0, 5);
  EXPECT_EQ(out.edges(), (std::vector<EdgeId>{4, 5}));
  EXPECT_FALSE(verify_matching(h, out.edges(), false));
}

TEST(Swap, ContractErrors) {
  const auto h = matching_fixture();
  PartialMatching m(h);
  m.insert(h, 0);
  auto code = [&](EdgeId f, EdgeId e) {
    try {
      swap(h, m, f, e);
    } catch (const Error& err) {
      return err.code();
    }
    return ErrorCode::IoError;
  };
  EXPECT_EQ(code(2, 5), ErrorCode::NotInMatching);
  EXPECT_EQ(code(0, 0), ErrorCode::AlreadyInMatching);
  EXPECT_EQ(code(0, 4), ErrorCode::AVertexMismatch);
}

TEST(PartialMatching, InsertEraseKeepsMapsInStep) {
  const auto h = matching_fixture();
  PartialMatching m(h);
  m.insert(h, 1);
  EXPECT_EQ(m.edge_of_a(1), 1u);
  EXPECT_EQ(m.edge_of_b(2), 1u);
  EXPECT_THROW(m.insert(h, 4), Error);
  m.erase(h, 1);
  EXPECT_EQ(m.size(), 0u);
  EXPECT_EQ(m.edge_of_b(2), kNoEdge);
  EXPECT_THROW(m.erase(h, 1), Error);
}

TEST(VerifyMatching, EmptyPartialIsFine) {
  const auto h = matching_fixture();
  EXPECT_FALSE(verify_matching(h, {}, false));
}

TEST(VerifyMatching, EmptyIsNotPerfect) {
  const auto h = make(3, 1, 2, {{0, {0, 1}}});
  EXPECT_EQ(code_of(verify_matching(h, {}, true)), ErrorCode::Unmatched);
}

TEST(VerifyMatching, OverlapAtSharedB) {
  const auto h = make(3, 2, 3, {{0, {0, 1}}, {1, {1, 2}}});
  const std::vector<EdgeId> edges{0, 1};
  const auto rep = verify_matching(h, edges, false);
  ASSERT_TRUE(rep);
  EXPECT_EQ(rep->code, ErrorCode::Overlap);
  EXPECT_NE(rep->detail.find("B-vertex 1"), std::string::npos) << rep->detail;
}

TEST(VerifyMatching, TwoEdgesOfOneAVertexOverlap) {
  const auto h = matching_fixture();
  const std::vector<EdgeId> edges{0, 2};
  EXPECT_EQ(code_of(verify_matching(h, edges, false)), ErrorCode::Overlap);
}

TEST(VerifyMatching, UnknownEdge) {
  const auto h = matching_fixture();
  const std::vector<EdgeId> edges{17};
  EXPECT_EQ(code_of(verify_matching(h, edges, false)), ErrorCode::IndexOutOfRange);
}

TEST(Rational, ParsesFractionsAndDecimalsExactly) {
  EXPECT_EQ(parse_rational("1/4"), Rational(1, 4));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-2/6"), Rational(-1, 3));
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_THROW(parse_rational("1e-1"), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational(""), Error);
  EXPECT_THROW(parse_rational("x"), Error);
}

TEST(Rational, FormatsCanonically) {
  EXPECT_EQ(format_rational(Rational(6, 4)), "3/2");
  EXPECT_EQ(format_rational(Rational(2)), "2");
  EXPECT_EQ(floor(Rational(7, 2)), 3);
  EXPECT_EQ(ceil(Rational(7, 2)), 4);
  EXPECT_EQ(ceil(Rational(-7, 2)), -3);
}

TEST(Parameters, DerivedFromEpsilon) {
  const auto p = Parameters::make(Rational(1), 3, 10);
  EXPECT_EQ(p.mu, Rational(1, 90));
  EXPECT_EQ(p.u, 90u);
  EXPECT_EQ(p.delta, Rational(1, 45));
  EXPECT_EQ(p.gamma, Rational(89, 90) / 45);
  EXPECT_EQ(p.small_tree_threshold, 45u);
  EXPECT_EQ(p.max_iterations, default_max_iterations(10));
}

TEST(Parameters, RejectsBadInputs) {
  EXPECT_THROW(Parameters::make(Rational(0), 3, 1), Error);
  EXPECT_THROW(Parameters::make(Rational(1), 1, 1), Error);
  ParameterOverrides o;
  o.mu = Rational(1);
  EXPECT_THROW(Parameters::make(Rational(1), 3, 1, o), Error);
  o.mu.reset();
  o.u = 0;
  EXPECT_THROW(Parameters::make(Rational(1), 3, 1, o), Error);
}

TEST(Parameters, MaxIterationsFormula) {
  EXPECT_EQ(default_max_iterations(1), 10u * 1 * 4 + 1000);
  EXPECT_EQ(default_max_iterations(8), 10u * 64 * 25 + 1000);
  EXPECT_EQ(default_max_iterations(9), 10u * 81 * 36 + 1000);
}

TEST(ErrorCode, StableNames) {
  EXPECT_EQ(to_string(ErrorCode::SizeExceedsBound), "SIZE_EXCEEDS_BOUND");
  EXPECT_EQ(to_string(ErrorCode::IterationCapExceeded), "ITERATION_CAP_EXCEEDED");
  EXPECT_EQ(to_string(ErrorCode::DuplicateBVertex), "DUPLICATE_B_VERTEX");
}

}  // namespace
}  // namespace hbm

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hbm/tree.hpp"
#include "naive.hpp"

namespace hbm {
namespace {

BipartiteHypergraph make(std::uint32_t r, std::uint32_t na, std::uint32_t nb,
                         std::vector<EdgeSpec> edges) {
  return BipartiteHypergraph::build({r, na, nb, std::move(edges)});
}

// Layer growth written straight from its definition: scan parents in
// order, take the first edge that avoids every used B-vertex, add it and its
// blockers, start over.
Layer naive_build(const BipartiteHypergraph& h, const PartialMatching& m, const AlternatingTree& t,
                  std::vector<VertexId> parents, Layer layer, std::uint32_t u) {
  std::sort(parents.begin(), parents.end());
  auto used = [&](VertexId b) {
    for (const Layer& l : t.layers()) {
      for (const auto* side : {&l.x, &l.y}) {
        for (EdgeId e : *side) {
          for (VertexId c : h.bs_of(e)) {
            if (c == b) return true;
          }
        }
      }
    }
    for (const auto* side : {&layer.x, &layer.y}) {
      for (EdgeId e : *side) {
        for (VertexId c : h.bs_of(e)) {
          if (c == b) return true;
        }
      }
    }
    return false;
  };
  while (true) {
    bool added = false;
    for (VertexId a : parents) {
      const auto mine = std::count_if(layer.x.begin(), layer.x.end(), [&](EdgeId e) { return h.a_of(e) == a; });
      if (mine >= u) continue;
      for (EdgeId e = 0; e < h.edge_count() && !added; ++e) {
        if (h.a_of(e) != a || m.contains(e)) continue;
        const auto bs = h.bs_of(e);
        if (std::any_of(bs.begin(), bs.end(), used)) continue;
        layer.x.push_back(e);
        for (EdgeId f = 0; f < h.edge_count(); ++f) {
          if (m.contains(f) && h.shares_b(e, f)) layer.y.push_back(f);
        }
        added = true;
      }
      if (added) break;
    }
    if (!added) return layer;
  }
}

std::uint32_t degree_from_scratch(const BipartiteHypergraph& h, const AlternatingTree& t, VertexId a) {
  std::uint32_t d = 0;
  for (const Layer& l : t.layers()) {
    for (EdgeId e : l.x) d += h.a_of(e) == a;
    for (EdgeId e : l.y) d += h.a_of(e) == a;
  }
  return d;
}

TEST(FindAddableEdge, EmptyParentSet) {
  const auto h = make(3, 1, 2, {{0, {0, 1}}});
  const PartialMatching m(h);
  const AlternatingTree t(h, 0);
  EXPECT_FALSE(find_addable_edge(h, m, t, {}, Layer{}, 5));
}

TEST(FindAddableEdge, FreshTree) {
  const auto h = make(3, 1, 2, {{0, {0, 1}}});
  const PartialMatching m(h);
  const AlternatingTree t(h, 0);
  const std::vector<VertexId> parents{0};
  const auto hit = find_addable_edge(h, m, t, parents, Layer{}, 5);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->first, 0u);
  EXPECT_EQ(hit->second, 0u);
}

TEST(FindAddableEdge, OccupiedBVertexExcludesEdge) {
  // a0's only edge is e0 = (a0; b0,b1); b1 is taken by e1 in L_1 of a tree
  // rooted at a1.
  const auto h = make(3, 2, 4, {{0, {0, 1}}, {1, {1, 2}}});
  const PartialMatching m(h);
  AlternatingTree t(h, 1);
  t.push_layer(h, Layer{{1}, {}});
  const std::vector<VertexId> parents{0};
  EXPECT_FALSE(find_addable_edge(h, m, t, parents, Layer{}, 5));
}

TEST(FindAddableEdge, UnderConstructionLayerCountsToo) {
  const auto h = make(3, 1, 4, {{0, {0, 1}}, {0, {1, 2}}, {0, {2, 3}}});
  const PartialMatching m(h);
  const AlternatingTree t(h, 0);
  const std::vector<VertexId> parents{0};
  const auto hit = find_addable_edge(h, m, t, parents, Layer{{0}, {}}, 5);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->second, 2u);
  EXPECT_FALSE(find_addable_edge(h, m, t, parents, Layer{{0}, {}}, 1));
}

TEST(BuildLayer, NoEdgesLeavesStartUnchanged) {
  const auto h = make(3, 2, 4, {{1, {0, 1}}});
  const PartialMatching m(h);
  const AlternatingTree t(h, 0);
  const std::vector<VertexId> parents{0};
  EXPECT_EQ(build_layer(h, m, t, parents, Layer{}, 3), Layer{});
}

TEST(BuildLayer, TwoFreeEdges) {
  const auto h = make(3, 1, 4, {{0, {0, 1}}, {0, {2, 3}}});
  const PartialMatching m(h);
  const AlternatingTree t(h, 0);
  const std::vector<VertexId> parents{0};
  const Layer l = build_layer(h, m, t, parents, Layer{}, 2);
  EXPECT_EQ(l.x, (std::vector<EdgeId>{0, 1}));
  EXPECT_TRUE(l.y.empty());
}

TEST(BuildLayer, OneBlocker) {
  // e0 = (a0; b0,b1), e1 = (a1; b1,b4) in M.
  const auto h = make(3, 2, 5, {{0, {0, 1}}, {1, {1, 4}}});
  PartialMatching m(h);
  m.insert(h, 1);
  const AlternatingTree t(h, 0);
  const std::vector<VertexId> parents{0};
  const Layer l = build_layer(h, m, t, parents, Layer{}, 2);
  EXPECT_EQ(l.x, (std::vector<EdgeId>{0}));
  EXPECT_EQ(l.y, (std::vector<EdgeId>{1}));
}

TEST(BuildLayer, AgreesWithDefinitionOnRandomTrees) {
  std::mt19937_64 rng(21);
  int layers_built = 0;
  for (int t = 0; t < 300; ++t) {
    const auto r = static_cast<std::uint32_t>(2 + rng() % 3);
    const auto na = static_cast<std::uint32_t>(2 + rng() % 10);
    const auto nb = static_cast<std::uint32_t>((r - 1) * na + rng() % 6);
    const auto h = naive::random_hypergraph(rng, r, na, nb, static_cast<std::uint32_t>(na * (1 + rng() % 5)));
    PartialMatching m(h);
    const auto root = static_cast<VertexId>(rng() % na);
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      if (h.a_of(e) != root && !m.is_matched(h.a_of(e)) && is_immediately_addable(h, m, e) && rng() % 3) {
        m.insert(h, e);
      }
    }
    const auto u = static_cast<std::uint32_t>(1 + rng() % 3);
    AlternatingTree tree(h, root);
    for (int depth = 0; depth < 5; ++depth) {
      const auto parents = tree.parent_set(h, tree.depth() + 1);
      const Layer fast = build_layer(h, m, tree, parents, Layer{}, u);
      const Layer slow = naive_build(h, m, tree, parents, Layer{}, u);
      ASSERT_EQ(fast, slow) << "trial " << t << " depth " << depth;
      EXPECT_LE(fast.y.size(), (r - 1) * fast.x.size());
      if (fast.x.empty()) break;
      tree.push_layer(h, fast);
      ++layers_built;
      const auto rep = validate_tree(h, m, tree, u);
      ASSERT_FALSE(rep) << rep->message();
      for (VertexId a = 0; a < na; ++a) {
        EXPECT_EQ(tree_degree(tree, a), degree_from_scratch(h, tree, a));
      }
    }
  }
  EXPECT_GT(layers_built, 300);
}

TEST(BuildLayer, RebuildIgnoresHigherLayers) {
  // Root a0 with e0 = (a0;b0) blocked by f = (a1;b0); a1 has e2 = (a1;b1)
  // in L_2. Rebuilding L_1 with only L_1 visible may reuse b1.
  const auto h = make(2, 2, 2, {{0, {0}}, {1, {0}}, {1, {1}}, {0, {1}}});
  PartialMatching m(h);
  m.insert(h, 1);
  AlternatingTree tree(h, 0);
  tree.push_layer(h, Layer{{0}, {1}});
  tree.push_layer(h, Layer{{2}, {}});
  BuildWorkspace ws(h);
  const std::vector<VertexId> root{0};
  const Layer full = build_layer(h, m, tree, 2, root, tree.layer(1), 5, ws);
  const Layer lower = build_layer(h, m, tree, 1, root, tree.layer(1), 5, ws);
  EXPECT_EQ(full.x, (std::vector<EdgeId>{0}));
  EXPECT_EQ(lower.x, (std::vector<EdgeId>{0, 3}));
}

TEST(ValidateTree, FreshTree) {
  const auto h = make(3, 1, 2, {{0, {0, 1}}});
  EXPECT_FALSE(validate_tree(h, PartialMatching(h), AlternatingTree(h, 0)));
}

TEST(ValidateTree, CrossLayerOverlap) {
  // L_1 = ({e0}, {e1}), L_2 = ({e2}, {}) with e2 reusing b1 from e0.
  const auto h = make(3, 2, 4, {{0, {0, 1}}, {1, {0, 2}}, {1, {1, 3}}});
  PartialMatching m(h);
  m.insert(h, 1);
  const auto tree = AlternatingTree::from_layers(h, 0, {Layer{{0}, {1}}, Layer{{2}, {}}});
  const auto rep = validate_tree(h, m, tree);
  ASSERT_TRUE(rep);
  EXPECT_EQ(rep->code, ErrorCode::CrossLayerBOverlap);
}

TEST(ValidateTree, BlockerMeetingTwoXEdges) {
  // X = {(a0;b0,b1), (a0;b2,b3)}, Y = {(a1;b1,b2)} meets both.
  const auto h = make(3, 2, 4, {{0, {0, 1}}, {0, {2, 3}}, {1, {1, 2}}});
  PartialMatching m(h);
  m.insert(h, 2);
  const auto tree = AlternatingTree::from_layers(h, 0, {Layer{{0, 1}, {2}}});
  const auto rep = validate_tree(h, m, tree);
  ASSERT_TRUE(rep);
  EXPECT_EQ(rep->code, ErrorCode::YIntersectsMultipleX);
}

TEST(ValidateTree, OtherViolations) {
  const auto h = make(3, 3, 6, {{0, {0, 1}}, {1, {1, 2}}, {2, {4, 5}}, {1, {3, 4}}});
  PartialMatching m(h);
  m.insert(h, 1);
  auto code = [&](std::vector<Layer> layers, VertexId root = 0) {
    const auto rep = validate_tree(h, m, AlternatingTree::from_layers(h, root, std::move(layers)));
    return rep ? rep->code : ErrorCode::IoError;
  };
  EXPECT_EQ(code({Layer{{0}, {}}}), ErrorCode::YNotBlockers);
  EXPECT_EQ(code({Layer{{1}, {}}}), ErrorCode::XInMatching);
  EXPECT_EQ(code({Layer{{2}, {}}}), ErrorCode::XParentMissing);
  EXPECT_EQ(code({Layer{{0}, {1}}}, 1), ErrorCode::RootMatched);
}

TEST(TreeDegree, CountsAcrossLayers) {
  // a1 holds one blocking edge in L_1 and two X edges in L_2.
  const auto h = make(3, 2, 8, {{0, {0, 1}}, {1, {1, 2}}, {1, {3, 4}}, {1, {5, 6}}});
  PartialMatching m(h);
  m.insert(h, 1);
  AlternatingTree tree(h, 0);
  EXPECT_EQ(tree_degree(tree, 1), 0u);
  tree.push_layer(h, Layer{{0}, {1}});
  EXPECT_EQ(tree_degree(tree, 1), 1u);
  const std::vector<VertexId> parents = tree.parent_set(h, 2);
  EXPECT_EQ(parents, (std::vector<VertexId>{1}));
  tree.push_layer(h, build_layer(h, m, tree, parents, Layer{}, 5));
  EXPECT_EQ(tree.layer(2).x.size(), 2u);
  EXPECT_EQ(tree_degree(tree, 1), 3u);
  EXPECT_FALSE(validate_tree(h, m, tree, 5));
  tree.pop_layer(h);
  EXPECT_EQ(tree_degree(tree, 1), 1u);
  tree.remove_blocking(h, 1, 1);
  EXPECT_EQ(tree_degree(tree, 1), 0u);
  EXPECT_EQ(tree.y_total(), 1u);
}

}  // namespace
}  // namespace hbm

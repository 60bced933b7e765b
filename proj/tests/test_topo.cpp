#include "doctest.h"
#include "torarr/topo.hpp"

using namespace torarr;
using namespace torarr::arrangement;
using namespace torarr::topo;
using intlat::TorsionData;

namespace {

Character ch(const std::vector<long long>& v) { return Character(v.begin(), v.end()); }

UnityRoot root(long long p, long long q) { return UnityRoot(Rat(p, q)); }

AtomSpec atom(const std::vector<std::vector<long long>>& chars,
              const std::vector<std::pair<long long, long long>>& consts) {
  AtomSpec a;
  for (const auto& c : chars) a.characters.push_back(ch(c));
  for (const auto& [p, q] : consts) a.constants.push_back(root(p, q));
  return a;
}

// z1=1, z2=1, z1z2=1 in rank 2: layers T < S1,S2,S3 < point
LayerPoset hypertori3() {
  return build_layer_poset(2, {atom({{1, 0}}, {{0, 1}}), atom({{0, 1}}, {{0, 1}}),
                               atom({{1, 1}}, {{0, 1}})});
}

// boundary of the n-simplex: all n-subsets of n+1 vertices
SimplicialComplex simplex_boundary(int n) {
  std::vector<std::vector<int>> facets;
  for (int out = 0; out <= n; ++out) {
    std::vector<int> f;
    for (int v = 0; v <= n; ++v)
      if (v != out) f.push_back(v);
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(static_cast<std::size_t>(n) + 1, facets);
}

}  // namespace

TEST_CASE("void and empty complex conventions") {
  auto v = SimplicialComplex::void_complex();
  CHECK(v.dimension() == -2);
  std::vector<HomologyGroup> hv = {{-2, TorsionData{1, {}}}};
  CHECK(reduced_homology(v) == hv);
  CHECK(reduced_euler(reduced_homology(v)) == 1);

  auto e = SimplicialComplex::empty_complex();
  CHECK(e.dimension() == -1);
  std::vector<HomologyGroup> he = {{-1, TorsionData{1, {}}}};
  CHECK(reduced_homology(e) == he);
  CHECK(reduced_euler(reduced_homology(e)) == -1);
}

TEST_CASE("facet normalization drops non-maximal faces") {
  auto cx = SimplicialComplex::from_facets(3, {{1, 0}, {1}, {2}, {0, 1}});
  std::vector<std::vector<int>> want = {{0, 1}, {2}};
  CHECK(cx.facets == want);
  CHECK(cx.dimension() == 1);
  CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {{0, 5}}), Error);
}

TEST_CASE("order complexes of poset intervals") {
  LayerPoset p = hypertori3();
  REQUIRE(p.layers.size() == 5);

  CHECK(order_complex(p, 0, 0).is_void);
  CHECK(order_complex(p, 1, 1).is_void);

  // nothing strictly between T and an atom
  auto e = order_complex(p, 0, 1);
  CHECK_FALSE(e.is_void);
  CHECK(e.vertex_count == 0);
  CHECK(e.facets.empty());

  // the three atoms, pairwise incomparable
  auto cx = order_complex(p, 0, 4);
  CHECK(cx.vertex_count == 3);
  std::vector<std::vector<int>> want = {{0}, {1}, {2}};
  CHECK(cx.facets == want);
  std::vector<HomologyGroup> h = {{0, TorsionData{2, {}}}};
  CHECK(reduced_homology(cx) == h);

  CHECK_THROWS_WITH_AS(order_complex(p, 1, 2), doctest::Contains("NotComparable"), Error);
  CHECK_THROWS_AS(order_complex(p, 0, 9), Error);
}

TEST_CASE("mobius function values") {
  LayerPoset p = hypertori3();
  CHECK(mobius(p, 0, 0) == 1);
  CHECK(mobius(p, 0, 1) == -1);
  CHECK(mobius(p, 0, 2) == -1);
  CHECK(mobius(p, 0, 3) == -1);
  CHECK(mobius(p, 0, 4) == 2);
  CHECK(mobius(p, 1, 4) == -1);
  CHECK(mobius(p, 4, 4) == 1);
  CHECK_THROWS_WITH_AS(mobius(p, 2, 1), doctest::Contains("NotComparable"), Error);
}

TEST_CASE("simplex boundaries have sphere homology") {
  for (int n = 1; n <= 5; ++n) {
    auto h = reduced_homology(simplex_boundary(n));
    std::vector<HomologyGroup> want = {{n - 1, TorsionData{1, {}}}};
    CHECK(h == want);
  }
}

TEST_CASE("six-vertex projective plane has 2-torsion") {
  auto rp2 = SimplicialComplex::from_facets(
      6, {{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 5}, {0, 4, 5},
          {1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}});
  std::vector<HomologyGroup> want = {{1, TorsionData{0, {2}}}};
  CHECK(reduced_homology(rp2) == want);
  CHECK(reduced_euler(reduced_homology(rp2)) == 0);

  // coning kills everything, including the torsion
  std::vector<std::vector<int>> cone;
  for (auto f : rp2.facets) {
    f.push_back(6);
    cone.push_back(f);
  }
  CHECK(reduced_homology(SimplicialComplex::from_facets(7, cone)).empty());
}

TEST_CASE("seven-vertex torus triangulation") {
  // cyclic triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  auto h = reduced_homology(SimplicialComplex::from_facets(7, facets));
  std::vector<HomologyGroup> want = {{1, TorsionData{2, {}}}, {2, TorsionData{1, {}}}};
  CHECK(h == want);
}

TEST_CASE("euler characteristic of intervals matches mobius") {
  std::vector<LayerPoset> posets;
  posets.push_back(hypertori3());
  posets.push_back(build_layer_poset(1, {atom({{2}}, {{0, 1}})}));
  posets.push_back(build_layer_poset(1, {atom({{2}}, {{0, 1}}), atom({{3}}, {{0, 1}})}));
  posets.push_back(build_layer_poset(2, {atom({{1, 0}}, {{0, 1}}), atom({{0, 1}}, {{0, 1}})}));
  posets.push_back(build_layer_poset(2, {atom({{1, 0}, {0, 1}}, {{0, 1}, {0, 1}})}));

  for (const auto& p : posets)
    for (std::size_t x = 0; x < p.layers.size(); ++x)
      for (std::size_t y = 0; y < p.layers.size(); ++y) {
        if (!p.leq(x, y)) continue;
        Int chi = reduced_euler(reduced_homology(order_complex(p, x, y)));
        CHECK(chi == mobius(p, x, y));
      }
}

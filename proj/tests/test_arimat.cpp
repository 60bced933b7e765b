#include <random>

#include "doctest.h"
#include "torarr/arimat.hpp"
#include "torarr/topo.hpp"

using namespace torarr;
using namespace torarr::arrangement;
using namespace torarr::arimat;

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

AtomSpec datom(const std::vector<long long>& chi) { return atom({chi}, {{0, 1}}); }

std::vector<AtomSpec> hyper3_atoms() {
  return {datom({1, 0}), datom({0, 1}), datom({1, 1})};
}

std::vector<Int> rel(const std::vector<long long>& v) {
  return std::vector<Int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("ground set canonicalizes spans and rejects higher codimension") {
  GroundSet g = make_ground_set(2, hyper3_atoms());
  CHECK(g.size() == 3);
  CHECK(g.characters[2] == ch({1, 1}));

  // imprimitive generator survives canonicalization
  GroundSet g1 = make_ground_set(1, {datom({2})});
  CHECK(g1.characters[0] == ch({2}));

  // a redundant description of the same hypertorus collapses to one row
  GroundSet g2 = make_ground_set(2, {atom({{1, 1}, {2, 2}}, {{1, 2}, {0, 1}})});
  CHECK(g2.characters[0] == ch({1, 1}));
  CHECK(g2.constants[0] == root(1, 2));

  CHECK_THROWS_WITH_AS(make_ground_set(2, {atom({{1, 0}, {0, 1}}, {{0, 1}, {0, 1}})}),
                       doctest::Contains("NotDivisorial"), Error);
}

TEST_CASE("rank and multiplicity of index subsets") {
  GroundSet g = make_ground_set(2, hyper3_atoms());
  CHECK(rank_of(g, {}) == 0);
  CHECK(rank_of(g, {0}) == 1);
  CHECK(rank_of(g, {0, 1, 2}) == 2);

  GroundSet g23 = make_ground_set(1, {datom({2}), datom({3})});
  CHECK(rank_of(g23, {0, 1}) == 1);

  CHECK(multiplicity(g, {}) == 1);
  CHECK(multiplicity(g, {0, 1}) == 1);

  // z1 = 1 meets z1 z2^2 = 1 in two points
  GroundSet gm = make_ground_set(2, {datom({1, 0}), datom({1, 2})});
  CHECK(multiplicity(gm, {0, 1}) == 2);

  // parallel translates never meet
  GroundSet gp = make_ground_set(1, {datom({1}), atom({{1}}, {{1, 2}})});
  CHECK_THROWS_WITH_AS(multiplicity(gp, {0, 1}), doctest::Contains("EmptyIntersection"),
                       Error);
  CHECK(multiplicity_trivial(gp, {0, 1}) == 1);
}

TEST_CASE("fundamental circuits with oriented relations") {
  GroundSet g = make_ground_set(2, hyper3_atoms());
  OrientedCircuit c = fundamental_circuit(g, {0, 1, 2});
  CHECK(c.support == IndexSet{0, 1, 2});
  CHECK(c.relation == rel({1, 1, -1}));
  CHECK(c.sign(0) == 1);
  CHECK(c.sign(2) == -1);
  CHECK(c.sign(7) == 0);

  GroundSet g2 = make_ground_set(2, {datom({1, 0}), datom({0, 1}), datom({1, 2})});
  CHECK(fundamental_circuit(g2, {0, 1, 2}).relation == rel({1, 2, -1}));

  GroundSet g23 = make_ground_set(1, {datom({2}), datom({3})});
  CHECK(fundamental_circuit(g23, {0, 1}).relation == rel({3, -2}));

  CHECK_THROWS_WITH_AS(fundamental_circuit(g, {0, 1}), doctest::Contains("NotCorank1"),
                       Error);
  GroundSet g235 = make_ground_set(1, {datom({2}), datom({3}), datom({5})});
  CHECK_THROWS_AS(fundamental_circuit(g235, {0, 1, 2}), Error);
}

TEST_CASE("positroid test on sign patterns") {
  OrientedCircuit c{{0, 1, 2}, rel({1, 1, -1})};
  CHECK(is_positroid(c, {2}));
  CHECK_FALSE(is_positroid(c, {0}));
  CHECK_FALSE(is_positroid(c, {}));
  CHECK(is_positroid(c, {0, 1}));
  CHECK(is_positroid(c, {0, 1, 2}));
}

TEST_CASE("circuit enumeration") {
  GroundSet g = make_ground_set(2, hyper3_atoms());
  auto cs = all_circuits(g);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].support == IndexSet{0, 1, 2});

  // proportional characters make a 2-circuit
  GroundSet g12 = make_ground_set(1, {datom({1}), datom({2})});
  auto cs2 = all_circuits(g12);
  REQUIRE(cs2.size() == 1);
  CHECK(cs2[0].support == IndexSet{0, 1});
  CHECK(cs2[0].relation == rel({2, -1}));

  CHECK(all_circuits(make_ground_set(2, {datom({1, 0}), datom({0, 1})})).empty());
}

TEST_CASE("scaled relation matches deletion multiplicities") {
  GroundSet g = make_ground_set(1, {datom({2}), datom({3})});
  OrientedCircuit c = fundamental_circuit(g, {0, 1});
  std::vector<Int> scaled = scaled_relation(g, c);
  // m(C) = 1, so the scaled entries are the primitive ones
  for (std::size_t k = 0; k < c.support.size(); ++k) {
    IndexSet del = c.support;
    del.erase(del.begin() + static_cast<std::ptrdiff_t>(k));
    CHECK(abs(scaled[k]) == Int(multiplicity_trivial(g, del)));
  }
}

TEST_CASE("deletion identity holds on random ground sets") {
  std::mt19937_64 rng(20240517);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<std::size_t> rank_d(1, 3), count_d(2, 6);
  for (int round = 0; round < 30; ++round) {
    const std::size_t d = rank_d(rng), n = count_d(rng);
    std::vector<AtomSpec> atoms;
    while (atoms.size() < n) {
      std::vector<long long> v(d);
      bool zero = true;
      for (auto& x : v) {
        x = entry(rng);
        if (x != 0) zero = false;
      }
      if (!zero) atoms.push_back(datom(v));
    }
    GroundSet g = make_ground_set(d, atoms);
    for (const OrientedCircuit& c : all_circuits(g)) {
      const Int mc = Int(multiplicity_trivial(g, c.support));
      for (std::size_t k = 0; k < c.support.size(); ++k) {
        IndexSet del = c.support;
        del.erase(del.begin() + static_cast<std::ptrdiff_t>(k));
        CHECK(mc * abs(c.relation[k]) == Int(multiplicity_trivial(g, del)));
      }
    }
  }
}

TEST_CASE("no-broken-circuit sets per layer") {
  auto atoms = hyper3_atoms();
  GroundSet g = make_ground_set(2, atoms);
  LayerPoset p = build_layer_poset(2, atoms);
  REQUIRE(p.layers.size() == 5);

  auto at_t = nbc_sets(g, p, 0);
  REQUIRE(at_t.size() == 1);
  CHECK(at_t[0].set.empty());

  for (std::size_t w = 1; w <= 3; ++w) {
    auto nb = nbc_sets(g, p, w);
    REQUIRE(nb.size() == 1);
    CHECK(nb[0].set.size() == 1);
  }

  // circuit {0,1,2}: broken circuit {1,2} knocks out one of the three pairs
  auto at_pt = nbc_sets(g, p, 4);
  REQUIRE(at_pt.size() == 2);
  CHECK(at_pt[0].set == IndexSet{0, 1});
  CHECK(at_pt[1].set == IndexSet{0, 2});
  CHECK(layer_independent_sets(g, p, 4).size() == 3);
}

TEST_CASE("nbc counts equal mobius magnitudes") {
  std::vector<std::pair<std::size_t, std::vector<AtomSpec>>> cases;
  cases.push_back({2, hyper3_atoms()});
  cases.push_back({1, {datom({2}), datom({3})}});
  cases.push_back({2, {datom({1, 0}), datom({1, 2})}});
  cases.push_back({2, {datom({1, 0}), datom({0, 1}), datom({1, 1}), datom({1, -1})}});
  for (const auto& [d, atoms] : cases) {
    GroundSet g = make_ground_set(d, atoms);
    LayerPoset p = build_layer_poset(d, atoms);
    for (std::size_t w = 0; w < p.layers.size(); ++w) {
      Int mu = topo::mobius(p, 0, w);
      CHECK(Int(nbc_sets(g, p, w).size()) == abs(mu));
    }
  }
}

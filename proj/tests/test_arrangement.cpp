#include <random>

#include "doctest.h"
#include "torarr/arrangement.hpp"

using namespace torarr;
using namespace torarr::arrangement;

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

}  // namespace

TEST_CASE("unity root arithmetic and canonical strings") {
  CHECK(root(1, 2).str() == "1/2");
  CHECK((root(1, 2) + root(1, 2)).is_zero());
  CHECK((root(2, 3) + root(2, 3)).str() == "1/3");
  CHECK(root(1, 3).times(Int(-1)).str() == "2/3");
  CHECK(UnityRoot(Rat(-7, 2)).str() == "1/2");

  CHECK(UnityRoot::parse("0").has_value());
  CHECK(UnityRoot::parse("0/1").has_value());
  CHECK(UnityRoot::parse("2/3").has_value());
  CHECK_FALSE(UnityRoot::parse("2/4").has_value());
  CHECK_FALSE(UnityRoot::parse("3/2").has_value());
  CHECK_FALSE(UnityRoot::parse("1/1").has_value());
  CHECK_FALSE(UnityRoot::parse("-1/2").has_value());
  CHECK_FALSE(UnityRoot::parse("").has_value());
  CHECK_FALSE(UnityRoot::parse("x/2").has_value());
  CHECK_FALSE(UnityRoot::parse("01/2").has_value());
}

TEST_CASE("atom validation") {
  CHECK_NOTHROW(validate_atom(1, atom({{2}}, {{1, 2}})));

  // one atom claiming z=1 and z=-1 simultaneously
  CHECK_THROWS_WITH_AS(validate_atom(1, atom({{1}, {1}}, {{0, 1}, {1, 2}})),
                       doctest::Contains("InconsistentConstants"), Error);
  CHECK_THROWS_AS(validate_atom(2, atom({{1}}, {{0, 1}})), Error);
  CHECK_THROWS_WITH_AS(validate_atom(2, atom({{0, 0}}, {{0, 1}})),
                       doctest::Contains("ZeroCharacter"), Error);
  CHECK_THROWS_AS(validate_atom(1, AtomSpec{}), Error);
  // consistent redundant system is fine
  CHECK_NOTHROW(validate_atom(1, atom({{1}, {2}}, {{1, 2}, {0, 1}})));
}

TEST_CASE("layer components of a single equation") {
  // z^2 = 1 splits into two points
  auto comps = layer_components(1, {{ch({2}), root(0, 1)}});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].sub == intlat::IntMatrix::from_rows({{Int(1)}}));
  CHECK(comps[0].point[0].str() == "0");
  CHECK(comps[1].point[0].str() == "1/2");

  // z^2 = -1
  auto comps2 = layer_components(1, {{ch({2}), root(1, 2)}});
  REQUIRE(comps2.size() == 2);
  CHECK(comps2[0].point[0].str() == "1/4");
  CHECK(comps2[1].point[0].str() == "3/4");

  // count equals the torsion index of the span inside its saturation
  auto comps3 = layer_components(2, {{ch({2, 0}), root(0, 1)}, {ch({0, 1}), root(1, 2)}});
  REQUIRE(comps3.size() == 2);
  CHECK(comps3[0].point == std::vector<UnityRoot>{root(0, 1), root(1, 2)});
  CHECK(comps3[1].point == std::vector<UnityRoot>{root(1, 2), root(1, 2)});

  // inconsistent system
  CHECK_THROWS_AS(layer_components(1, {{ch({1}), root(0, 1)}, {ch({1}), root(1, 2)}}), Error);
  CHECK_FALSE(try_layer_components(1, {{ch({1}), root(0, 1)}, {ch({1}), root(1, 2)}}).has_value());

  // empty system: just the torus
  auto total = layer_components(3, {});
  REQUIRE(total.size() == 1);
  CHECK(total[0].codim() == 0);
  CHECK(total[0].dim() == 3);
}

TEST_CASE("poset of three hypertori in rank two") {
  std::vector<AtomSpec> atoms{atom({{1, 0}}, {{0, 1}}), atom({{0, 1}}, {{0, 1}}),
                              atom({{1, 1}}, {{0, 1}})};
  LayerPoset poset = build_layer_poset(2, atoms);
  REQUIRE(poset.layers.size() == 5);
  CHECK(poset.codim(0) == 0);
  CHECK(poset.codim(1) == 1);
  CHECK(poset.codim(4) == 2);
  // layers sorted: T, then z2=1, z1=1, z1z2=1, then the point
  CHECK(poset.layers[1].sub == intlat::IntMatrix::from_rows({{Int(0), Int(1)}}));
  CHECK(poset.layers[2].sub == intlat::IntMatrix::from_rows({{Int(1), Int(0)}}));
  CHECK(poset.layers[3].sub == intlat::IntMatrix::from_rows({{Int(1), Int(1)}}));
  // six covers: T under each hypertorus, the point over each
  CHECK(poset.cover_pairs.size() == 6);
  for (std::size_t i = 1; i <= 3; ++i) {
    CHECK(poset.leq(0, i));
    CHECK(poset.leq(i, 4));
    CHECK_FALSE(poset.leq(i, (i % 3) + 1));
  }
  CHECK(poset.atoms_below[4] == std::vector<std::size_t>{0, 1, 2});
  CHECK(poset.atoms_below[2] == std::vector<std::size_t>{0});
  CHECK(poset.atoms_below[1] == std::vector<std::size_t>{1});
  CHECK(poset.atoms_below[3] == std::vector<std::size_t>{2});
  CHECK(poset.open_interval(0, 4) == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("poset handles disconnected atoms and dedup") {
  // z^2 = 1 inside C*: torus plus two points
  LayerPoset p1 = build_layer_poset(1, {atom({{2}}, {{0, 1}})});
  CHECK(p1.layers.size() == 3);
  CHECK(p1.cover_pairs.size() == 2);
  CHECK(p1.atoms_below[1] == std::vector<std::size_t>{0});
  CHECK(p1.atoms_below[2] == std::vector<std::size_t>{0});

  // z^2=1 and z^3=1 share the layer {z=1}
  LayerPoset p2 = build_layer_poset(1, {atom({{2}}, {{0, 1}}), atom({{3}}, {{0, 1}})});
  CHECK(p2.layers.size() == 5);  // T, {1}, {-1}, and the two primitive cube roots
  std::size_t both = 0;
  for (std::size_t w = 1; w < 5; ++w)
    if (p2.atoms_below[w].size() == 2) ++both;
  CHECK(both == 1);
}

TEST_CASE("nested atoms are rejected") {
  CHECK_THROWS_WITH_AS(build_layer_poset(1, {atom({{1}}, {{0, 1}}), atom({{2}}, {{0, 1}})}),
                       doctest::Contains("NestedAtoms"), Error);
  // parallel translates are fine
  CHECK_NOTHROW(build_layer_poset(1, {atom({{1}}, {{0, 1}}), atom({{1}}, {{1, 2}})}));
  // duplicate atom is nested both ways
  CHECK_THROWS_AS(build_layer_poset(1, {atom({{1}}, {{0, 1}}), atom({{1}}, {{0, 1}})}), Error);
}

TEST_CASE("positive system fixed instance") {
  PositiveSystem ps = positive_system(2, {atom({{1, -3}}, {{0, 1}})});
  CHECK(ps.u == intlat::IntMatrix::from_rows({{Int(1), Int(1)}, {Int(0), Int(1)}}));
  CHECK(ps.columns == intlat::IntMatrix::from_rows({{Int(2)}, {Int(3)}}));
  CHECK(ps.flipped_columns == std::vector<std::size_t>{0});
  CHECK_FALSE(ps.has_zero_entry);
}

TEST_CASE("positive system randomized properties") {
  std::mt19937 rng(555);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<std::size_t> rank_d(1, 4), natoms_d(1, 4);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t d = rank_d(rng), n = natoms_d(rng);
    std::vector<AtomSpec> atoms;
    for (std::size_t i = 0; i < n; ++i) {
      Character c(d);
      bool nonzero = false;
      for (std::size_t j = 0; j < d; ++j) {
        c[j] = entry(rng);
        if (c[j] != 0) nonzero = true;
      }
      if (!nonzero) c[0] = 1;
      AtomSpec a;
      a.characters.push_back(c);
      a.constants.push_back(UnityRoot());
      atoms.push_back(a);
    }
    PositiveSystem ps;
    try {
      ps = positive_system(d, atoms);
    } catch (const Error&) {
      continue;  // nested draw
    }
    CHECK(abs(intlat::determinant(ps.u)) == 1);
    // columns = u * signed chosen basis vectors
    intlat::IntMatrix signedb(d, ps.column_owner.size());
    std::size_t col = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      AtomLattice al = atom_lattice(d, atoms[i]);
      for (std::size_t k = 0; k < al.span.rows(); ++k, ++col)
        for (std::size_t r = 0; r < d; ++r) signedb.at(r, col) = al.span.at(k, r);
    }
    for (std::size_t f : ps.flipped_columns)
      for (std::size_t r = 0; r < d; ++r) signedb.at(r, f) = -signedb.at(r, f);
    CHECK(ps.u * signedb == ps.columns);
    for (std::size_t c2 = 0; c2 < ps.columns.cols(); ++c2) {
      bool all_zero = true;
      for (std::size_t r = 0; r < d; ++r) {
        CHECK(ps.columns.at(r, c2) >= 0);
        if (ps.columns.at(r, c2) != 0) all_zero = false;
      }
      CHECK_FALSE(all_zero);
    }
  }
}

TEST_CASE("poset order is containment of defining systems") {
  // brute force the order on a poset with torsion layers
  std::vector<AtomSpec> atoms{atom({{2, 0}}, {{0, 1}}), atom({{1, 2}}, {{0, 1}})};
  LayerPoset poset = build_layer_poset(2, atoms);
  for (std::size_t a = 0; a < poset.layers.size(); ++a)
    for (std::size_t b = 0; b < poset.layers.size(); ++b) {
      bool expect = true;
      const Layer &la = poset.layers[a], &lb = poset.layers[b];
      for (std::size_t i = 0; i < la.sub.rows() && expect; ++i)
        expect = lb.satisfies(la.sub.row(i), la.point[i]);
      CHECK(poset.leq(a, b) == expect);
      if (a != b && poset.leq(a, b)) CHECK(la.codim() < lb.codim());
    }
  // intersection closure: every component of W meet atom is a layer
  for (const Layer& w : poset.layers)
    for (const AtomSpec& at : atoms) {
      AtomLattice al = atom_lattice(2, at);
      std::vector<std::pair<Character, UnityRoot>> eqs;
      for (std::size_t i = 0; i < w.sub.rows(); ++i) eqs.emplace_back(w.sub.row(i), w.point[i]);
      for (std::size_t i = 0; i < al.span.rows(); ++i) eqs.emplace_back(al.span.row(i), al.values[i]);
      auto comps = try_layer_components(2, eqs);
      if (!comps) continue;
      for (const Layer& c : *comps) CHECK(poset.find(c).has_value());
    }
}

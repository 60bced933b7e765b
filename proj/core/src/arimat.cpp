#include <torarr/arimat.hpp>
#include <torarr/error.hpp>

#include <algorithm>
#include <string>

namespace torarr::arimat {

using arrangement::AtomSpec;
using arrangement::Character;
using arrangement::LayerPoset;
using arrangement::UnityRoot;
using intlat::IntMatrix;

intlat::IntMatrix GroundSet::matrix_of(const IndexSet& a) const {
  IntMatrix m(a.size(), ambient_rank);
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r] >= size()) fail(errc::invalid_argument, "atom index out of range");
    for (std::size_t c = 0; c < ambient_rank; ++c) m.at(r, c) = characters[a[r]][c];
  }
  return m;
}

std::vector<std::pair<Character, UnityRoot>> GroundSet::equations_of(const IndexSet& a) const {
  std::vector<std::pair<Character, UnityRoot>> eqs;
  for (std::size_t i : a) {
    if (i >= size()) fail(errc::invalid_argument, "atom index out of range");
    eqs.emplace_back(characters[i], constants[i]);
  }
  return eqs;
}

GroundSet make_ground_set(std::size_t ambient_rank, const std::vector<AtomSpec>& atoms) {
  GroundSet g;
  g.ambient_rank = ambient_rank;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    arrangement::validate_atom(ambient_rank, atoms[i]);
    auto lat = arrangement::atom_lattice(ambient_rank, atoms[i]);
    if (lat.span.rows() != 1)
      fail(errc::not_divisorial,
           "atom " + std::to_string(i) + ": cuts codimension " + std::to_string(lat.span.rows()));
    g.characters.push_back(lat.span.row(0));
    g.constants.push_back(lat.values[0]);
  }
  return g;
}

int OrientedCircuit::sign(std::size_t atom) const {
  for (std::size_t k = 0; k < support.size(); ++k)
    if (support[k] == atom) return relation[k] > 0 ? 1 : (relation[k] < 0 ? -1 : 0);
  return 0;
}

std::size_t rank_of(const GroundSet& g, const IndexSet& a) {
  return intlat::rank_of(g.matrix_of(a));
}

std::size_t multiplicity(const GroundSet& g, const IndexSet& a) {
  auto comps = arrangement::try_layer_components(g.ambient_rank, g.equations_of(a));
  if (!comps) fail(errc::empty_intersection, "constants are inconsistent on the subset");
  return comps->size();
}

std::size_t multiplicity_trivial(const GroundSet& g, const IndexSet& a) {
  std::vector<std::pair<Character, UnityRoot>> eqs;
  for (std::size_t i : a) eqs.emplace_back(g.characters.at(i), UnityRoot{});
  auto comps = arrangement::try_layer_components(g.ambient_rank, eqs);
  return comps->size();  // trivial constants are always consistent
}

OrientedCircuit fundamental_circuit(const GroundSet& g, const IndexSet& xs) {
  IndexSet x = xs;
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  IntMatrix m = g.matrix_of(x);
  if (x.empty() || x.size() != intlat::rank_of(m) + 1)
    fail(errc::not_corank1, "set size must exceed its rank by exactly one");
  IntMatrix k = intlat::kernel_rows(m);
  if (k.rows() != 1) fail(errc::not_corank1, "relation space is not one-dimensional");

  OrientedCircuit c;
  std::vector<Int> r = k.row(0);
  Int lead = 0;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0) {
      if (lead == 0) lead = r[i];
      c.support.push_back(x[i]);
      c.relation.push_back(r[i]);
    }
  if (lead < 0)
    for (Int& v : c.relation) v = -v;
  return c;
}

bool is_positroid(const OrientedCircuit& c, const IndexSet& a) {
  int seen = 0;
  for (std::size_t k = 0; k < c.support.size(); ++k) {
    if (std::binary_search(a.begin(), a.end(), c.support[k])) continue;
    const int s = c.relation[k] > 0 ? 1 : -1;
    if (seen == 0) seen = s;
    if (s != seen) return false;
  }
  return true;
}

std::vector<IndexSet> combinations(const IndexSet& pool, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > pool.size()) return out;
  IndexSet idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    IndexSet subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = pool[idx[i]];
    out.push_back(std::move(subset));
    // advance the rightmost index that can still move
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
    if (i == 0) return out;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<OrientedCircuit> all_circuits(const GroundSet& g) {
  std::vector<OrientedCircuit> out;
  IndexSet all(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) all[i] = i;
  const std::size_t top = rank_of(g, all) + 1;
  for (std::size_t s = 2; s <= top && s <= g.size(); ++s)
    for (const IndexSet& sub : combinations(all, s)) {
      if (rank_of(g, sub) != s - 1) continue;
      bool minimal = true;
      for (std::size_t i = 0; i < s && minimal; ++i) {
        IndexSet del = sub;
        del.erase(del.begin() + static_cast<std::ptrdiff_t>(i));
        minimal = rank_of(g, del) == s - 1;  // every proper subset independent
      }
      if (minimal) out.push_back(fundamental_circuit(g, sub));
    }
  return out;
}

std::vector<Int> scaled_relation(const GroundSet& g, const OrientedCircuit& c) {
  const Int m = Int(multiplicity_trivial(g, c.support));
  std::vector<Int> out = c.relation;
  for (Int& v : out) v *= m;
  return out;
}

std::vector<IndexSet> layer_independent_sets(const GroundSet& g, const LayerPoset& poset,
                                             std::size_t w) {
  if (w >= poset.layers.size()) fail(errc::invalid_argument, "layer index out of range");
  IndexSet ground = poset.atoms_below[w];
  std::sort(ground.begin(), ground.end());
  const std::size_t cd = poset.codim(w);
  std::vector<IndexSet> out;
  for (const IndexSet& a : combinations(ground, cd))
    if (rank_of(g, a) == cd) out.push_back(a);
  return out;
}

std::vector<NbcCertificate> nbc_sets(const GroundSet& g, const LayerPoset& poset,
                                     std::size_t w) {
  IndexSet ground = poset.atoms_below[w];
  std::sort(ground.begin(), ground.end());
  const std::size_t cd = poset.codim(w);
  std::vector<NbcCertificate> out;
  for (const IndexSet& a : layer_independent_sets(g, poset, w)) {
    bool broken = false;
    for (std::size_t b : ground) {
      if (broken) break;
      if (std::binary_search(a.begin(), a.end(), b)) continue;
      IndexSet ext = a;
      ext.insert(std::lower_bound(ext.begin(), ext.end(), b), b);
      if (rank_of(g, ext) != cd) continue;  // b extends independently
      // a contains the broken circuit iff the unique circuit through b
      // has b as its minimum
      broken = fundamental_circuit(g, ext).support.front() == b;
    }
    if (!broken) out.push_back(NbcCertificate{w, a});
  }
  return out;
}

}  // namespace torarr::arimat

#pragma once

#include <torarr/arrangement.hpp>
#include <torarr/intlat.hpp>

#include <vector>

namespace torarr::arimat {

// Strictly increasing atom indices.
using IndexSet = std::vector<std::size_t>;

// All size-k subsets of pool, in lexicographic order.
std::vector<IndexSet> combinations(const IndexSet& pool, std::size_t k);

// Ordered ground set of a divisorial arrangement: per atom, the canonical
// generator of its character span (possibly imprimitive when the atom is
// disconnected) and the induced constant.  The input order is kept; it fixes
// the broken-circuit convention.
struct GroundSet {
  std::size_t ambient_rank = 0;
  std::vector<arrangement::Character> characters;
  std::vector<arrangement::UnityRoot> constants;

  std::size_t size() const { return characters.size(); }
  intlat::IntMatrix matrix_of(const IndexSet& a) const;
  std::vector<std::pair<arrangement::Character, arrangement::UnityRoot>> equations_of(
      const IndexSet& a) const;
};

// Requires every atom to cut out codimension 1; throws NotDivisorial.
GroundSet make_ground_set(std::size_t ambient_rank,
                          const std::vector<arrangement::AtomSpec>& atoms);

// Minimal dependent set with its primitive relation, sign-normalized so the
// lowest-index coefficient is positive.
struct OrientedCircuit {
  IndexSet support;
  std::vector<Int> relation;  // parallel to support

  // -1/0/+1; 0 when the atom is outside the support
  int sign(std::size_t atom) const;
  bool operator==(const OrientedCircuit&) const = default;
};

struct NbcCertificate {
  std::size_t layer = 0;
  IndexSet set;
  bool operator==(const NbcCertificate&) const = default;
};

std::size_t rank_of(const GroundSet& g, const IndexSet& a);

// Connected components of the intersection of the atoms in a, with their
// actual constants; throws EmptyIntersection when the system is inconsistent.
std::size_t multiplicity(const GroundSet& g, const IndexSet& a);

// Same with all constants forced trivial; never empty.
std::size_t multiplicity_trivial(const GroundSet& g, const IndexSet& a);

// The unique circuit inside a corank-1 set x (|x| = rank(x) + 1).
OrientedCircuit fundamental_circuit(const GroundSet& g, const IndexSet& x);

// True iff all relation signs outside a coincide (vacuous for <= 1 entry).
bool is_positroid(const OrientedCircuit& c, const IndexSet& a);

// Every circuit, ordered by (size, support); sizes start at 2.
std::vector<OrientedCircuit> all_circuits(const GroundSet& g);

// The relation scaled by the component count of the full circuit (trivial
// constants), entrywise m(C)*r_i; |entries| are then the deletion counts.
std::vector<Int> scaled_relation(const GroundSet& g, const OrientedCircuit& c);

// All independent a within the atoms through layer w with |a| = codim w;
// each such a realizes w as a connected component of its intersection.
std::vector<IndexSet> layer_independent_sets(const GroundSet& g,
                                             const arrangement::LayerPoset& poset,
                                             std::size_t w);

// The subsets above that contain no broken circuit of the matroid restricted
// to the atoms through w (circuit minus its minimum, in ground-set order).
std::vector<NbcCertificate> nbc_sets(const GroundSet& g,
                                     const arrangement::LayerPoset& poset, std::size_t w);

}  // namespace torarr::arimat

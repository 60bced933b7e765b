#pragma once

#include <torarr/addcoh.hpp>
#include <torarr/arimat.hpp>
#include <torarr/arrangement.hpp>
#include <torarr/exterior.hpp>
#include <torarr/intlat.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torarr::ospres {

// Which element of C \ A anchors a circuit relation term.
enum class JConvention { min, max };

// Generator e_{W,A}: the layer W realized as a connected component of the
// intersection of the independent atom set A, with |A| = codim W.
struct GeneratorIndex {
  std::size_t layer = 0;
  arimat::IndexSet set;

  std::size_t degree() const { return set.size(); }
  bool operator==(const GeneratorIndex&) const = default;
};

// (generator number, exterior monomial): a spanning vector of the free
// module over the ambient exterior algebra on the single generators.
using SpanKey = std::pair<std::size_t, Monomial>;

// sparse module element: span key -> nonzero rational coefficient
using ModuleElement = std::map<SpanKey, Rat>;

struct Relation {
  enum class Kind { restriction, circuit };
  Kind kind = Kind::restriction;
  std::size_t degree = 0;
  ModuleElement element;
  std::string label;  // provenance: generator / atom set / layer / anchor
};

// e_{g1} e_{g2} = sign * sum of e over the listed components; sign 0 means
// the product vanishes (shared atom, dependent union, or empty intersection).
struct ProductRule {
  std::size_t g1 = 0, g2 = 0;
  int sign = 0;
  std::vector<std::size_t> components;
};

struct Presentation {
  arimat::GroundSet ground;
  arrangement::LayerPoset poset;
  JConvention j_convention = JConvention::min;
  std::vector<GeneratorIndex> generators;

  // derived: NBC flags per generator, non-pivot coordinate masks per layer
  std::vector<char> generator_is_nbc;
  std::vector<Monomial> complement_mask;
  std::map<std::pair<std::size_t, arimat::IndexSet>, std::size_t> lookup;

  std::size_t ambient_rank() const { return poset.ambient_rank; }
  std::size_t top_degree() const { return 2 * poset.ambient_rank; }
  std::optional<std::size_t> find_generator(std::size_t layer,
                                            const arimat::IndexSet& a) const;
  bool is_basis_key(const SpanKey& key) const;
};

// All (layer, independent set) pairs, ordered by layer then set.
std::vector<GeneratorIndex> enumerate_generators(const arimat::GroundSet& ground,
                                                 const arrangement::LayerPoset& poset);

// Requires the poset to be built from the same divisorial atom list.
Presentation make_presentation(const arimat::GroundSet& ground,
                               const arrangement::LayerPoset& poset,
                               JConvention j = JConvention::min);

// (sign, sorted component generator numbers); sign 0 iff the product is zero.
std::pair<int, std::vector<std::size_t>> product_of_generators(const Presentation& pres,
                                                               std::size_t g1,
                                                               std::size_t g2);

// One rule per unordered generator pair.
std::vector<ProductRule> product_relations(const Presentation& pres);

// e_{W,A} * chi for chi over the canonical basis of the layer sublattice.
std::vector<Relation> restriction_relations(const Presentation& pres);

// One relation per (corank-1 subset X, component of its intersection).
std::vector<Relation> circuit_relations(const Presentation& pres);

// restriction + circuit: the module relations defining the quotient.
std::vector<Relation> module_relations(const Presentation& pres);

struct NbcBasis {
  std::vector<SpanKey> elements;  // sorted; monomials over layer complements
  std::vector<Int> dimensions;    // per degree 0..top_degree, counting formula
};
NbcBasis nbc_basis(const Presentation& pres);

// Per-degree dimension of the quotient by the module relations, over Q.
// The capped overload computes degrees 0..max_degree only.
std::vector<std::size_t> quotient_dimensions(const Presentation& pres);
std::vector<std::size_t> quotient_dimensions(const Presentation& pres,
                                             std::size_t max_degree);

ModuleElement make_element(std::size_t gen, const ExteriorElement& form);
ModuleElement scale_element(const ModuleElement& e, const Rat& s);
ModuleElement add_elements(const ModuleElement& a, const ModuleElement& b);

// Bilinear product on spanning vectors via the product rules.
ModuleElement multiply(const Presentation& pres, const ModuleElement& a,
                       const ModuleElement& b);

// Normal form in NBC coordinates.  Throws DegreeMixed on inhomogeneous input
// and BasisDefect when the relation rows fail to complement the basis.
std::map<SpanKey, Rat> reduce_to_basis(const Presentation& pres, const ModuleElement& e);

// True when every independent subset meets in a single component
// (all arithmetic multiplicities trivial).
bool is_unimodular(const arimat::GroundSet& ground);

struct DegreeComparison {
  std::size_t degree = 0;
  intlat::TorsionData presentation_group;
  intlat::TorsionData cohomology_group;
  bool match = false;
};

struct ConjectureReport {
  bool unimodular = false;
  std::vector<DegreeComparison> degrees;
  bool all_match() const;
};

// Integral variant of the circuit relations (rational coefficients replaced
// by oriented bases of the corresponding lattice quotients), compared degree
// by degree against the additive integral answer.  Mismatches are findings.
ConjectureReport integral_conjecture_check(const Presentation& pres,
                                           const addcoh::BettiTable& betti);

}  // namespace torarr::ospres

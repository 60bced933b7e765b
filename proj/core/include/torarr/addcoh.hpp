#pragma once

#include <torarr/arrangement.hpp>
#include <torarr/intlat.hpp>
#include <torarr/topo.hpp>

#include <string>
#include <vector>

namespace torarr::addcoh {

// One tensor summand H^p(W) (x) H_s of the interval complex below W.  Since
// H^p(W) is free of rank C(dim W, p), the group is that many copies of H_s.
// The ambient torus enters uniformly through its void interval (s = -2).
struct CohomologySummand {
  std::size_t layer = 0;
  std::size_t p = 0;   // exterior degree on the layer
  long s = 0;          // homology degree of the open interval (T, W)
  std::size_t q = 0;   // sheaf row: 2*codim W - 2 - s
  std::size_t degree = 0;  // total degree k = p + q
  intlat::TorsionData group;

  bool operator==(const CohomologySummand&) const = default;
};

// Integral cohomology of the complement, one group per total degree,
// with the per-layer summand breakdown retained for diagnostics.
struct BettiTable {
  std::size_t ambient_rank = 0;
  std::vector<intlat::TorsionData> by_degree;  // indices 0 .. 2*ambient_rank
  std::vector<CohomologySummand> summands;     // sorted by (degree, layer, p)

  std::vector<Int> free_ranks() const;  // trailing zeros trimmed, never empty
  Int euler_characteristic() const;
  std::string poincare_str() const;  // e.g. "1 + 5t + 6t^2"
};

struct E2Entry {
  std::size_t p = 0;
  std::size_t q = 0;
  intlat::TorsionData group;
  std::vector<CohomologySummand> summands;

  std::size_t filtration() const { return p + 2 * q; }
  bool operator==(const E2Entry&) const = default;
};

// Second page of the complement's direct-image spectral sequence; the
// arrangement's page carries nonzero entries only as produced here and the
// sequence degenerates, so row sums along p+q = k recover BettiTable.
struct E2Table {
  std::size_t ambient_rank = 0;
  std::vector<E2Entry> entries;  // nonzero entries, sorted by (q, p)

  const E2Entry* find(std::size_t p, std::size_t q) const;
};

// All tensor summands of the layer-sum decomposition for the given poset.
std::vector<CohomologySummand> cohomology_summands(const arrangement::LayerPoset& poset);

BettiTable cohomology_groups(const arrangement::LayerPoset& poset);

// Free ranks of cohomology_groups (coefficients of the Poincare polynomial).
std::vector<Int> poincare_polynomial(const arrangement::LayerPoset& poset);

E2Table e2_page(const arrangement::LayerPoset& poset);

// Degree-by-degree equality of the anti-diagonal sums of the E2 page with the
// assembled cohomology; group mismatches (none expected) are returned as text.
std::vector<std::string> degeneration_mismatches(const BettiTable& betti, const E2Table& e2);

}  // namespace torarr::addcoh

#pragma once

#include <torarr/arrangement.hpp>
#include <torarr/intlat.hpp>

#include <string>
#include <vector>

namespace torarr::topo {

// Abstract simplicial complex given by its maximal faces.  The void complex
// (no faces at all, not even the empty one) is kept distinct from the empty
// complex (only the empty face); the two carry different reduced homology.
struct SimplicialComplex {
  std::size_t vertex_count = 0;
  std::vector<std::vector<int>> facets;  // sorted vertex lists, inclusion-maximal
  bool is_void = false;

  static SimplicialComplex void_complex();
  static SimplicialComplex empty_complex();
  // Sorts, dedupes, and drops non-maximal faces.
  static SimplicialComplex from_facets(std::size_t vertex_count,
                                       std::vector<std::vector<int>> faces);

  // -2 for void, -1 for empty, otherwise max facet size - 1.
  long dimension() const;
  std::string str() const;
};

struct HomologyGroup {
  long degree = 0;
  intlat::TorsionData group;
  bool operator==(const HomologyGroup&) const = default;
};

// Order complex of the open interval (lower, upper): vertices are the layers
// strictly between, faces are the chains.  lower == upper yields the void
// complex; an empty open interval yields the empty complex.
SimplicialComplex order_complex(const arrangement::LayerPoset& poset,
                                std::size_t lower, std::size_t upper);

// Integral reduced homology via Smith normal form of the augmented boundary
// matrices.  Conventions: empty complex has only H_{-1} = Z, void complex has
// only H_{-2} = Z.  Only nonzero groups are reported, in increasing degree.
std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& cx);

// Alternating sum of free ranks; equals the Mobius function on order
// complexes of poset intervals, including the degenerate conventions.
Int reduced_euler(const std::vector<HomologyGroup>& groups);

// Mobius function of the interval [lower, upper] by the defining recursion.
Int mobius(const arrangement::LayerPoset& poset, std::size_t lower, std::size_t upper);

}  // namespace torarr::topo

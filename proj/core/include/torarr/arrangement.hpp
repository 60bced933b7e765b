#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torarr/error.hpp"
#include "torarr/intlat.hpp"
#include "torarr/ints.hpp"

namespace torarr::arrangement {

using Character = std::vector<Int>;

// Element of Q/Z, kept reduced in [0, 1). Values of characters on torsion
// translation points; the only constants the input format admits.
class UnityRoot {
 public:
  UnityRoot() = default;
  explicit UnityRoot(const Rat& v) { assign(v); }

  const Rat& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  UnityRoot operator+(const UnityRoot& o) const { return UnityRoot(v_ + o.v_); }
  UnityRoot operator-(const UnityRoot& o) const { return UnityRoot(v_ - o.v_); }
  UnityRoot times(const Int& n) const { return UnityRoot(Rat(n) * v_); }

  bool operator==(const UnityRoot& o) const = default;
  bool operator!=(const UnityRoot& o) const = default;
  bool operator<(const UnityRoot& o) const { return v_ < o.v_; }

  // canonical "p/q" with 0 <= p < q reduced, "0" for the trivial root
  std::string str() const;
  // strict parse of the canonical forms above ("0/1" tolerated)
  static std::optional<UnityRoot> parse(const std::string& text);

 private:
  void assign(const Rat& v);
  Rat v_ = 0;
};

// value of sum(coeffs[k] * roots[k]) in Q/Z
UnityRoot combine(const std::vector<Int>& coeffs, const std::vector<UnityRoot>& roots);

// One input equation system chi = c; describes a (possibly disconnected)
// union of parallel translated subtori.
struct AtomSpec {
  std::vector<Character> characters;
  std::vector<UnityRoot> constants;
};

// Canonical data of an atom: Hermite basis of the character span with the
// induced constant on each basis row.
struct AtomLattice {
  intlat::IntMatrix span;
  std::vector<UnityRoot> values;
};

// Connected component of an intersection of atoms. `sub` is the canonical
// Hermite basis of the saturated lattice of characters constant on the layer,
// `point` the value of each basis row. codim = sub.rows().
struct Layer {
  intlat::IntMatrix sub;
  std::vector<UnityRoot> point;

  std::size_t codim() const { return sub.rows(); }
  std::size_t dim() const { return sub.cols() - sub.rows(); }

  bool operator==(const Layer& o) const = default;
  bool operator<(const Layer& o) const;

  // membership with value: chi constant on the layer with value c
  bool satisfies(const Character& chi, const UnityRoot& c) const;

  std::string str() const;
};

// Poset of layers; index 0 is the ambient torus, order = reverse inclusion
// (W <= L iff L is contained in W as a subset of the torus).
struct LayerPoset {
  std::size_t ambient_rank = 0;
  std::size_t atom_count = 0;
  std::vector<Layer> layers;
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs;
  std::vector<std::vector<std::size_t>> atoms_below;

  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b] != 0; }
  std::size_t codim(std::size_t i) const { return layers[i].codim(); }
  std::size_t dim(std::size_t i) const { return ambient_rank - layers[i].codim(); }
  // indices strictly between lower and upper, ascending
  std::vector<std::size_t> open_interval(std::size_t lower, std::size_t upper) const;
  std::optional<std::size_t> find(const Layer& w) const;

  std::vector<std::vector<char>> leq_;
};

// Throws on malformed atoms; message carries the atom index.
void validate_atom(std::size_t ambient_rank, const AtomSpec& atom);

// Canonical span basis + values; throws InconsistentConstants.
AtomLattice atom_lattice(std::size_t ambient_rank, const AtomSpec& atom);

// Components of the solution set of a simultaneous system, sorted canonically;
// nullopt when the constants are inconsistent on the span.
std::optional<std::vector<Layer>> try_layer_components(
    std::size_t ambient_rank, const std::vector<std::pair<Character, UnityRoot>>& equations);

// Throwing variant (InconsistentConstants).
std::vector<Layer> layer_components(std::size_t ambient_rank,
                                    const std::vector<std::pair<Character, UnityRoot>>& equations);

// Closure of the ambient torus under intersections with atoms, decomposed
// into connected components. Throws atom validation errors and NestedAtoms.
LayerPoset build_layer_poset(std::size_t ambient_rank, const std::vector<AtomSpec>& atoms);

// Unimodular change of basis making every chosen span-basis vector
// nonnegative in the new coordinates.
struct PositiveSystem {
  intlat::IntMatrix u;        // unimodular, d x d
  intlat::IntMatrix columns;  // u * (chosen basis vectors as columns), entrywise >= 0
  // column c is basis row column_owner[c].second of atom column_owner[c].first
  std::vector<std::pair<std::size_t, std::size_t>> column_owner;
  std::vector<std::size_t> flipped_columns;  // basis vectors replaced by their negatives
  bool has_zero_entry = false;               // nonneg system need not be strictly positive
};

PositiveSystem positive_system(std::size_t ambient_rank, const std::vector<AtomSpec>& atoms);

}  // namespace torarr::arrangement

#include "torarr/arrangement.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace torarr::arrangement {

using intlat::IntMatrix;

void UnityRoot::assign(const Rat& v) {
  const Int num = boost::multiprecision::numerator(v);
  const Int den = boost::multiprecision::denominator(v);
  v_ = v - Rat(floor_div(num, den));
}

std::string UnityRoot::str() const {
  if (v_ == 0) return "0";
  std::ostringstream os;
  os << boost::multiprecision::numerator(v_) << "/" << boost::multiprecision::denominator(v_);
  return os.str();
}

std::optional<UnityRoot> UnityRoot::parse(const std::string& text) {
  if (text == "0") return UnityRoot();
  const auto slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == text.size()) return std::nullopt;
  const std::string ps = text.substr(0, slash), qs = text.substr(slash + 1);
  auto digits = [](const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos &&
           (s.size() == 1 || s[0] != '0');
  };
  if (!digits(ps) || !digits(qs)) return std::nullopt;
  Int p(ps), q(qs);
  if (p >= q && !(p == 0 && q == 1)) return std::nullopt;  // "0/1" tolerated
  if (boost::multiprecision::gcd(p, q) != 1) return std::nullopt;
  return UnityRoot(Rat(p, q));
}

UnityRoot combine(const std::vector<Int>& coeffs, const std::vector<UnityRoot>& roots) {
  Rat acc = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) acc += Rat(coeffs[i]) * roots[i].value();
  return UnityRoot(acc);
}

bool Layer::operator<(const Layer& o) const {
  if (codim() != o.codim()) return codim() < o.codim();
  for (std::size_t i = 0; i < sub.rows(); ++i)
    for (std::size_t j = 0; j < sub.cols(); ++j)
      if (sub.at(i, j) != o.sub.at(i, j)) return sub.at(i, j) < o.sub.at(i, j);
  for (std::size_t i = 0; i < point.size(); ++i)
    if (point[i] != o.point[i]) return point[i] < o.point[i];
  return false;
}

bool Layer::satisfies(const Character& chi, const UnityRoot& c) const {
  auto coords = intlat::row_coordinates(sub, chi);
  if (!coords) return false;
  return combine(*coords, point) == c;
}

std::string Layer::str() const {
  std::ostringstream os;
  os << "{sub=" << sub.str() << ", point=[";
  for (std::size_t i = 0; i < point.size(); ++i) os << (i ? "," : "") << point[i].str();
  os << "]}";
  return os.str();
}

std::vector<std::size_t> LayerPoset::open_interval(std::size_t lower, std::size_t upper) const {
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < layers.size(); ++z)
    if (z != lower && z != upper && leq(lower, z) && leq(z, upper)) out.push_back(z);
  return out;
}

std::optional<std::size_t> LayerPoset::find(const Layer& w) const {
  auto it = std::lower_bound(layers.begin(), layers.end(), w);
  if (it == layers.end() || !(*it == w)) return std::nullopt;
  return static_cast<std::size_t>(it - layers.begin());
}

namespace {

void validate_atom_impl(std::size_t ambient_rank, const AtomSpec& atom, const std::string& where) {
  if (atom.characters.empty()) fail(errc::empty_character_list, where + "atom has no characters");
  if (atom.constants.size() != atom.characters.size())
    fail(errc::wrong_length, where + "constants and characters differ in length");
  for (const Character& chi : atom.characters) {
    if (chi.size() != ambient_rank) fail(errc::wrong_length, where + "character length != ambient rank");
    if (std::all_of(chi.begin(), chi.end(), [](const Int& x) { return x == 0; }))
      fail(errc::zero_character, where + "zero character");
  }
  atom_lattice(ambient_rank, atom);  // throws InconsistentConstants
}

// inner subset of outer (as subsets of the torus): every defining condition
// of outer holds identically on inner
bool system_implies(const AtomLattice& inner, const AtomLattice& outer) {
  for (std::size_t k = 0; k < outer.span.rows(); ++k) {
    auto coords = intlat::row_coordinates(inner.span, outer.span.row(k));
    if (!coords) return false;
    if (!(combine(*coords, inner.values) == outer.values[k])) return false;
  }
  return true;
}

bool layer_leq(const Layer& a, const Layer& b) {
  for (std::size_t i = 0; i < a.sub.rows(); ++i)
    if (!b.satisfies(a.sub.row(i), a.point[i])) return false;
  return true;
}

}  // namespace

void validate_atom(std::size_t ambient_rank, const AtomSpec& atom) {
  validate_atom_impl(ambient_rank, atom, "");
}

AtomLattice atom_lattice(std::size_t ambient_rank, const AtomSpec& atom) {
  IntMatrix g(atom.characters.size(), ambient_rank);
  for (std::size_t i = 0; i < atom.characters.size(); ++i) {
    if (atom.characters[i].size() != ambient_rank)
      fail(errc::wrong_length, "character length != ambient rank");
    for (std::size_t j = 0; j < ambient_rank; ++j) g.at(i, j) = atom.characters[i][j];
  }
  intlat::HermiteForm hf = intlat::hermite_row_form(g);
  AtomLattice out;
  out.span = IntMatrix(hf.rank, ambient_rank);
  for (std::size_t i = 0; i < hf.rank; ++i)
    for (std::size_t j = 0; j < ambient_rank; ++j) out.span.at(i, j) = hf.h.at(i, j);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    UnityRoot v = combine(hf.u.row(i), atom.constants);
    if (i < hf.rank) {
      out.values.push_back(v);
    } else if (!v.is_zero()) {
      fail(errc::inconsistent_constants, "constants violate an integer relation of the characters");
    }
  }
  return out;
}

std::optional<std::vector<Layer>> try_layer_components(
    std::size_t ambient_rank, const std::vector<std::pair<Character, UnityRoot>>& equations) {
  IntMatrix g(equations.size(), ambient_rank);
  std::vector<UnityRoot> c(equations.size());
  for (std::size_t i = 0; i < equations.size(); ++i) {
    if (equations[i].first.size() != ambient_rank)
      fail(errc::wrong_length, "character length != ambient rank");
    for (std::size_t j = 0; j < ambient_rank; ++j) g.at(i, j) = equations[i].first[j];
    c[i] = equations[i].second;
  }
  const IntMatrix sat = intlat::kernel_and_saturation(g).second;
  const std::size_t r = sat.rows();
  IntMatrix m(equations.size(), r);
  for (std::size_t i = 0; i < equations.size(); ++i) {
    auto coords = intlat::row_coordinates(sat, g.row(i));
    if (!coords) fail(errc::invalid_argument, "row escapes its own saturation");
    for (std::size_t j = 0; j < r; ++j) m.at(i, j) = (*coords)[j];
  }
  intlat::SmithForm sf = intlat::smith_normal_form(m);
  std::vector<Rat> uc(equations.size(), Rat(0));
  for (std::size_t i = 0; i < equations.size(); ++i)
    for (std::size_t l = 0; l < equations.size(); ++l)
      if (sf.u.at(i, l) != 0) uc[i] += Rat(sf.u.at(i, l)) * c[l].value();
  for (std::size_t i = sf.rank; i < equations.size(); ++i)
    if (boost::multiprecision::denominator(uc[i]) != 1) return std::nullopt;
  // every extension of the constants from the span to its saturation
  const std::vector<Int> diag = sf.diagonal();
  std::vector<Int> t(sf.rank, Int(0));
  std::vector<Layer> out;
  while (true) {
    std::vector<Rat> w(sf.rank);
    for (std::size_t i = 0; i < sf.rank; ++i) w[i] = (uc[i] + Rat(t[i])) / Rat(diag[i]);
    Layer layer;
    layer.sub = sat;
    layer.point.resize(r);
    for (std::size_t j = 0; j < r; ++j) {
      Rat y = 0;
      for (std::size_t k = 0; k < sf.rank; ++k)
        if (sf.v.at(j, k) != 0) y += Rat(sf.v.at(j, k)) * w[k];
      layer.point[j] = UnityRoot(y);
    }
    out.push_back(std::move(layer));
    std::size_t i = 0;
    while (i < sf.rank && t[i] + 1 == diag[i]) t[i++] = 0;
    if (i == sf.rank) break;
    ++t[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Layer> layer_components(std::size_t ambient_rank,
                                    const std::vector<std::pair<Character, UnityRoot>>& equations) {
  auto comps = try_layer_components(ambient_rank, equations);
  if (!comps) fail(errc::inconsistent_constants, "equation system has no solutions");
  return *comps;
}

LayerPoset build_layer_poset(std::size_t ambient_rank, const std::vector<AtomSpec>& atoms) {
  std::vector<AtomLattice> lat;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    validate_atom_impl(ambient_rank, atoms[i], "atom " + std::to_string(i) + ": ");
    lat.push_back(atom_lattice(ambient_rank, atoms[i]));
  }
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = 0; j < atoms.size(); ++j)
      if (i != j && system_implies(lat[i], lat[j]))
        fail(errc::nested_atoms,
             "atom " + std::to_string(i) + " is contained in atom " + std::to_string(j));

  LayerPoset poset;
  poset.ambient_rank = ambient_rank;
  poset.atom_count = atoms.size();

  Layer torus{IntMatrix(0, ambient_rank), {}};
  std::map<Layer, std::size_t> seen;
  std::vector<Layer> layers{torus};
  seen.emplace(torus, 0);
  for (std::size_t qi = 0; qi < layers.size(); ++qi) {
    const Layer cur = layers[qi];
    for (const AtomLattice& al : lat) {
      std::vector<std::pair<Character, UnityRoot>> eqs;
      for (std::size_t i = 0; i < cur.sub.rows(); ++i) eqs.emplace_back(cur.sub.row(i), cur.point[i]);
      for (std::size_t i = 0; i < al.span.rows(); ++i) eqs.emplace_back(al.span.row(i), al.values[i]);
      auto comps = try_layer_components(ambient_rank, eqs);
      if (!comps) continue;
      for (Layer& w : *comps)
        if (seen.emplace(w, layers.size()).second) layers.push_back(std::move(w));
    }
  }
  std::sort(layers.begin(), layers.end());
  poset.layers = std::move(layers);

  const std::size_t n = poset.layers.size();
  poset.leq_.assign(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      poset.leq_[a][b] = layer_leq(poset.layers[a], poset.layers[b]) ? 1 : 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !poset.leq(a, b)) continue;
      bool cover = true;
      for (std::size_t z = 0; z < n && cover; ++z)
        if (z != a && z != b && poset.leq(a, z) && poset.leq(z, b)) cover = false;
      if (cover) poset.cover_pairs.emplace_back(a, b);
    }
  poset.atoms_below.resize(n);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t j = 0; j < lat.size(); ++j) {
      bool below = true;
      for (std::size_t k = 0; k < lat[j].span.rows() && below; ++k)
        below = poset.layers[w].satisfies(lat[j].span.row(k), lat[j].values[k]);
      if (below) poset.atoms_below[w].push_back(j);
    }
  return poset;
}

PositiveSystem positive_system(std::size_t ambient_rank, const std::vector<AtomSpec>& atoms) {
  PositiveSystem ps;
  std::vector<std::vector<Int>> basis_vectors;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    validate_atom_impl(ambient_rank, atoms[i], "atom " + std::to_string(i) + ": ");
    AtomLattice al = atom_lattice(ambient_rank, atoms[i]);
    for (std::size_t k = 0; k < al.span.rows(); ++k) {
      basis_vectors.push_back(al.span.row(k));
      ps.column_owner.emplace_back(i, k);
    }
  }
  const std::size_t d = ambient_rank, nc = basis_vectors.size();
  IntMatrix a(d, nc);
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t r = 0; r < d; ++r) a.at(r, c) = basis_vectors[c][r];
  ps.u = IntMatrix::identity(d);
  // normalize each chosen basis vector so its last nonzero entry is positive
  std::vector<std::size_t> pivot(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    std::size_t p = d;
    for (std::size_t r = 0; r < d; ++r)
      if (a.at(r, c) != 0) p = r;
    pivot[c] = p;
    if (a.at(p, c) < 0) {
      for (std::size_t r = 0; r < d; ++r) a.at(r, c) = -a.at(r, c);
      ps.flipped_columns.push_back(c);
    }
  }
  // sweep pivot rows upward; columns with pivots below k keep zeros in row k,
  // so later sweeps never disturb finished columns
  for (std::size_t k = 1; k < d; ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      Int mult = 0;
      for (std::size_t c = 0; c < nc; ++c) {
        if (pivot[c] != k || a.at(i, c) >= 0) continue;
        Int need = (-a.at(i, c) + a.at(k, c) - 1) / a.at(k, c);  // ceil
        if (need > mult) mult = need;
      }
      if (mult > 0) {
        a.addmul_row(i, k, mult);
        ps.u.addmul_row(i, k, mult);
      }
    }
  }
  ps.columns = a;
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t r = 0; r < d; ++r)
      if (a.at(r, c) == 0) ps.has_zero_entry = true;
  return ps;
}

}  // namespace torarr::arrangement

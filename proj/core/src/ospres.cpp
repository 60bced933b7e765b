#include <torarr/error.hpp>
#include <torarr/ospres.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace torarr::ospres {

using arimat::GroundSet;
using arimat::IndexSet;
using arrangement::Character;
using arrangement::Layer;
using arrangement::LayerPoset;
using arrangement::UnityRoot;
using intlat::IntMatrix;
using intlat::TorsionData;

namespace {

std::string set_str(const IndexSet& a) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << "}";
  return os.str();
}

// parity sign of the inversions in the concatenation (a, b), both increasing
int concat_sign(const IndexSet& a, const IndexSet& b) {
  std::size_t inv = 0;
  for (std::size_t x : a)
    for (std::size_t y : b)
      if (x > y) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

IndexSet sorted_union(const IndexSet& a, const IndexSet& b) {
  IndexSet u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

IndexSet sorted_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet d;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
  return d;
}

bool intersects(const IndexSet& a, const IndexSet& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    a[i] < b[j] ? ++i : ++j;
  }
  return false;
}

std::vector<std::pair<Character, UnityRoot>> layer_equations(const Layer& w) {
  std::vector<std::pair<Character, UnityRoot>> eqs;
  for (std::size_t r = 0; r < w.sub.rows(); ++r) eqs.emplace_back(w.sub.row(r), w.point[r]);
  return eqs;
}

std::size_t key_degree(const Presentation& pres, const SpanKey& key) {
  return pres.generators[key.first].degree() +
         static_cast<std::size_t>(std::popcount(key.second));
}

}  // namespace

std::optional<std::size_t> Presentation::find_generator(std::size_t layer,
                                                        const arimat::IndexSet& a) const {
  auto it = lookup.find({layer, a});
  if (it == lookup.end()) return std::nullopt;
  return it->second;
}

bool Presentation::is_basis_key(const SpanKey& key) const {
  return generator_is_nbc[key.first] != 0 &&
         (key.second & ~complement_mask[generators[key.first].layer]) == 0;
}

std::vector<GeneratorIndex> enumerate_generators(const GroundSet& ground,
                                                 const LayerPoset& poset) {
  std::vector<GeneratorIndex> out;
  for (std::size_t w = 0; w < poset.layers.size(); ++w)
    for (IndexSet& a : arimat::layer_independent_sets(ground, poset, w))
      out.push_back(GeneratorIndex{w, std::move(a)});
  return out;
}

Presentation make_presentation(const GroundSet& ground, const LayerPoset& poset,
                               JConvention j) {
  if (ground.ambient_rank != poset.ambient_rank || ground.size() != poset.atom_count)
    fail(errc::invalid_argument, "ground set and poset describe different arrangements");
  if (poset.ambient_rank > 62)
    fail(errc::invalid_argument, "ambient rank exceeds the monomial mask width");

  Presentation pres;
  pres.ground = ground;
  pres.poset = poset;
  pres.j_convention = j;
  pres.generators = enumerate_generators(ground, poset);
  for (std::size_t k = 0; k < pres.generators.size(); ++k)
    pres.lookup.emplace(std::make_pair(pres.generators[k].layer, pres.generators[k].set), k);

  // non-pivot coordinates: monomials over them lift a basis of the layer's
  // exterior algebra along the chosen splitting
  pres.complement_mask.resize(poset.layers.size());
  for (std::size_t w = 0; w < poset.layers.size(); ++w) {
    Monomial mask = (Monomial{1} << poset.ambient_rank) - 1;
    const IntMatrix& sub = poset.layers[w].sub;
    for (std::size_t r = 0; r < sub.rows(); ++r)
      for (std::size_t c = 0; c < sub.cols(); ++c)
        if (sub.at(r, c) != 0) {
          mask &= ~(Monomial{1} << c);
          break;
        }
    pres.complement_mask[w] = mask;
  }

  pres.generator_is_nbc.assign(pres.generators.size(), 0);
  for (std::size_t w = 0; w < poset.layers.size(); ++w)
    for (const auto& cert : arimat::nbc_sets(ground, poset, w))
      pres.generator_is_nbc[*pres.find_generator(w, cert.set)] = 1;
  return pres;
}

std::pair<int, std::vector<std::size_t>> product_of_generators(const Presentation& pres,
                                                               std::size_t g1,
                                                               std::size_t g2) {
  if (g1 >= pres.generators.size() || g2 >= pres.generators.size())
    fail(errc::invalid_argument, "generator index out of range");
  const GeneratorIndex& a = pres.generators[g1];
  const GeneratorIndex& b = pres.generators[g2];
  if (intersects(a.set, b.set)) return {0, {}};
  const IndexSet u = sorted_union(a.set, b.set);
  if (arimat::rank_of(pres.ground, u) != u.size()) return {0, {}};

  auto eqs = layer_equations(pres.poset.layers[a.layer]);
  for (const auto& e : layer_equations(pres.poset.layers[b.layer])) eqs.push_back(e);
  auto comps = arrangement::try_layer_components(pres.ambient_rank(), eqs);
  if (!comps) return {0, {}};  // translated pieces never meet

  std::vector<std::size_t> gens;
  for (const Layer& L : *comps) {
    auto li = pres.poset.find(L);
    if (!li) fail(errc::invalid_argument, "internal: component missing from the poset");
    auto gi = pres.find_generator(*li, u);
    if (!gi) fail(errc::invalid_argument, "internal: component generator not enumerated");
    gens.push_back(*gi);
  }
  std::sort(gens.begin(), gens.end());
  return {concat_sign(a.set, b.set), gens};
}

std::vector<ProductRule> product_relations(const Presentation& pres) {
  std::vector<ProductRule> out;
  for (std::size_t i = 0; i < pres.generators.size(); ++i)
    for (std::size_t j = i; j < pres.generators.size(); ++j) {
      auto [sign, comps] = product_of_generators(pres, i, j);
      out.push_back(ProductRule{i, j, sign, std::move(comps)});
    }
  return out;
}

ModuleElement make_element(std::size_t gen, const ExteriorElement& form) {
  ModuleElement e;
  for (const auto& [m, c] : form.terms) e[{gen, m}] = c;
  return e;
}

ModuleElement scale_element(const ModuleElement& e, const Rat& s) {
  ModuleElement out;
  if (s == 0) return out;
  for (const auto& [k, c] : e) out[k] = c * s;
  return out;
}

ModuleElement add_elements(const ModuleElement& a, const ModuleElement& b) {
  ModuleElement out = a;
  for (const auto& [k, c] : b) {
    auto it = out.find(k);
    if (it == out.end()) {
      if (c != 0) out.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

std::vector<Relation> restriction_relations(const Presentation& pres) {
  std::vector<Relation> out;
  for (std::size_t g = 0; g < pres.generators.size(); ++g) {
    const Layer& w = pres.poset.layers[pres.generators[g].layer];
    for (std::size_t r = 0; r < w.sub.rows(); ++r) {
      Relation rel;
      rel.kind = Relation::Kind::restriction;
      rel.degree = pres.generators[g].degree() + 1;
      rel.element = make_element(g, ExteriorElement::character_form(w.sub.row(r)));
      rel.label = "restrict e" + std::to_string(g) + " row " + std::to_string(r);
      out.push_back(std::move(rel));
    }
  }
  return out;
}

namespace {

// one corank-1 subset together with its circuit and intersection components
struct CircuitContext {
  IndexSet x;
  arimat::OrientedCircuit circuit;
  std::vector<std::size_t> component_layers;
};

std::vector<CircuitContext> circuit_contexts(const Presentation& pres) {
  std::vector<CircuitContext> out;
  IndexSet all(pres.ground.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  const std::size_t top = arimat::rank_of(pres.ground, all) + 1;
  for (std::size_t s = 2; s <= top && s <= all.size(); ++s)
    for (const IndexSet& x : arimat::combinations(all, s)) {
      if (arimat::rank_of(pres.ground, x) != s - 1) continue;
      auto comps =
          arrangement::try_layer_components(pres.ambient_rank(), pres.ground.equations_of(x));
      if (!comps) continue;  // inconsistent translates: nothing to relate
      CircuitContext ctx;
      ctx.x = x;
      ctx.circuit = arimat::fundamental_circuit(pres.ground, x);
      for (const Layer& l : *comps) {
        auto li = pres.poset.find(l);
        if (!li) fail(errc::invalid_argument, "internal: component missing from the poset");
        ctx.component_layers.push_back(*li);
      }
      out.push_back(std::move(ctx));
    }
  return out;
}

struct CircuitTerm {
  std::size_t gen = 0;
  int sign = 1;
  IndexSet a;
  IndexSet b;      // circuit minus a and the anchor
  Rat coefficient; // m(A)/m(X minus anchor)
};

std::vector<CircuitTerm> circuit_terms(const Presentation& pres, const CircuitContext& ctx,
                                       std::size_t layer_idx) {
  const IndexSet& x = ctx.x;
  const IndexSet& c = ctx.circuit.support;
  const IndexSet fixed = sorted_difference(x, c);
  std::vector<CircuitTerm> out;
  for (std::size_t sz = 0; sz < c.size(); ++sz)
    for (const IndexSet& s : arimat::combinations(c, sz)) {
      IndexSet a = sorted_union(fixed, s);
      if (!arimat::is_positroid(ctx.circuit, a)) continue;
      const IndexSet rest = sorted_difference(c, a);
      const std::size_t j =
          pres.j_convention == JConvention::min ? rest.front() : rest.back();
      IndexSet b;
      for (std::size_t e : rest)
        if (e != j) b.push_back(e);

      // the component of the a-system that contains the given layer
      auto wcomps =
          arrangement::try_layer_components(pres.ambient_rank(), pres.ground.equations_of(a));
      std::optional<std::size_t> gen;
      for (const Layer& w : *wcomps) {
        auto wi = pres.poset.find(w);
        if (wi && pres.poset.leq(*wi, layer_idx)) {
          gen = pres.find_generator(*wi, a);
          break;
        }
      }
      if (!gen) fail(errc::invalid_argument, "internal: containing component not found");

      std::size_t below = 0;
      for (std::size_t e : x)
        if (e < j) ++below;
      CircuitTerm t;
      t.gen = *gen;
      t.sign = (below % 2 == 0 ? 1 : -1) * concat_sign(a, b);
      t.a = std::move(a);
      t.b = std::move(b);
      IndexSet xj = x;
      xj.erase(std::find(xj.begin(), xj.end(), j));
      t.coefficient = Rat(arimat::multiplicity(pres.ground, t.a)) /
                      Rat(arimat::multiplicity(pres.ground, xj));
      out.push_back(std::move(t));
    }
  return out;
}

// Integral stand-in for the scaled form: wedge of a basis of the quotient of
// the circuit's saturated span by that of a's part, oriented like the ordered
// b-characters.  Lift ambiguity dies against the restriction rows.
ExteriorElement oriented_quotient_form(const GroundSet& g, const IndexSet& c,
                                       const IndexSet& a, const IndexSet& b) {
  if (b.empty()) return ExteriorElement::one();
  IndexSet ac;
  std::set_intersection(a.begin(), a.end(), c.begin(), c.end(), std::back_inserter(ac));
  const IntMatrix sat_c = intlat::kernel_and_saturation(g.matrix_of(c)).second;
  const IntMatrix sat_a = intlat::kernel_and_saturation(g.matrix_of(ac)).second;
  const std::size_t k = sat_c.rows(), r0 = sat_a.rows();
  if (k != r0 + b.size())
    fail(errc::invalid_argument, "internal: quotient rank mismatch");

  // adapted basis of the circuit span: first r0 rows span the a-part
  IntMatrix v = IntMatrix::identity(k);
  if (r0 > 0) {
    IntMatrix coords(r0, k);
    for (std::size_t r = 0; r < r0; ++r) {
      auto cs = intlat::row_coordinates(sat_c, sat_a.row(r));
      if (!cs) fail(errc::invalid_argument, "internal: sublattice escapes the circuit span");
      for (std::size_t i = 0; i < k; ++i) coords.at(r, i) = (*cs)[i];
    }
    v = intlat::smith_normal_form(coords).v;
  }
  IntMatrix adapted = intlat::hermite_row_form(v).u * sat_c;  // v^{-1} * sat_c

  // orientation against the images of the ordered b-characters
  IntMatrix q(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto cs = intlat::row_coordinates(sat_c, g.characters[b[i]]);
    if (!cs) fail(errc::invalid_argument, "internal: circuit member escapes the span");
    for (std::size_t col = r0; col < k; ++col) {
      Int acc = 0;
      for (std::size_t t = 0; t < k; ++t) acc += (*cs)[t] * v.at(t, col);
      q.at(i, col - r0) = acc;
    }
  }
  const Int det = intlat::determinant(q);
  if (det == 0) fail(errc::invalid_argument, "internal: degenerate orientation matrix");
  if (det < 0) adapted.negate_row(r0);

  std::vector<Character> rows;
  for (std::size_t r = r0; r < k; ++r) rows.push_back(adapted.row(r));
  return wedge_of_characters(rows);
}

std::vector<Relation> circuit_relations_impl(const Presentation& pres, bool integral) {
  std::vector<Relation> out;
  for (const CircuitContext& ctx : circuit_contexts(pres))
    for (std::size_t li : ctx.component_layers) {
      Relation rel;
      rel.kind = Relation::Kind::circuit;
      rel.degree = ctx.x.size() - 1;
      for (const CircuitTerm& t : circuit_terms(pres, ctx, li)) {
        ExteriorElement psi;
        if (integral)
          psi = oriented_quotient_form(pres.ground, ctx.circuit.support, t.a, t.b)
                    .scaled(Rat(t.sign));
        else {
          std::vector<Character> chars;
          for (std::size_t e : t.b) chars.push_back(pres.ground.characters[e]);
          psi = wedge_of_characters(chars).scaled(Rat(t.sign) * t.coefficient);
        }
        rel.element = add_elements(rel.element, make_element(t.gen, psi));
      }
      rel.label = std::string("circuit X=") + set_str(ctx.x) + " layer " +
                  std::to_string(li) +
                  (pres.j_convention == JConvention::min ? " j=min" : " j=max") +
                  (integral ? " integral" : "");
      out.push_back(std::move(rel));
    }
  return out;
}

}  // namespace

std::vector<Relation> circuit_relations(const Presentation& pres) {
  return circuit_relations_impl(pres, false);
}

std::vector<Relation> module_relations(const Presentation& pres) {
  std::vector<Relation> rels = restriction_relations(pres);
  for (Relation& r : circuit_relations_impl(pres, false)) rels.push_back(std::move(r));
  return rels;
}

NbcBasis nbc_basis(const Presentation& pres) {
  NbcBasis basis;
  basis.dimensions.assign(pres.top_degree() + 1, Int(0));
  for (std::size_t g = 0; g < pres.generators.size(); ++g) {
    if (!pres.generator_is_nbc[g]) continue;
    const std::size_t w = pres.generators[g].layer;
    const std::size_t cd = pres.poset.codim(w);
    const std::size_t dim = pres.poset.dim(w);
    // all monomials over the complement coordinates of the layer
    IndexSet coords;
    for (std::size_t i = 0; i < pres.ambient_rank(); ++i)
      if (pres.complement_mask[w] & (Monomial{1} << i)) coords.push_back(i);
    for (std::size_t sz = 0; sz <= dim; ++sz)
      for (const IndexSet& pick : arimat::combinations(coords, sz)) {
        Monomial m = 0;
        for (std::size_t i : pick) m |= Monomial{1} << i;
        basis.elements.push_back({g, m});
        basis.dimensions[cd + sz] += 1;
      }
  }
  std::sort(basis.elements.begin(), basis.elements.end());
  return basis;
}

namespace {

// spanning columns of one total degree, non-basis block first
struct GradedColumns {
  std::vector<SpanKey> keys;
  std::map<SpanKey, std::size_t> index;
  std::size_t basis_start = 0;
};

GradedColumns graded_columns(const Presentation& pres, std::size_t degree) {
  std::vector<SpanKey> non_basis, basis;
  IndexSet coords(pres.ambient_rank());
  std::iota(coords.begin(), coords.end(), std::size_t{0});
  for (std::size_t g = 0; g < pres.generators.size(); ++g) {
    const std::size_t gd = pres.generators[g].degree();
    if (gd > degree || degree - gd > pres.ambient_rank()) continue;
    for (const IndexSet& pick : arimat::combinations(coords, degree - gd)) {
      Monomial m = 0;
      for (std::size_t i : pick) m |= Monomial{1} << i;
      SpanKey key{g, m};
      (pres.is_basis_key(key) ? basis : non_basis).push_back(key);
    }
  }
  std::sort(non_basis.begin(), non_basis.end());
  std::sort(basis.begin(), basis.end());
  GradedColumns cols;
  cols.basis_start = non_basis.size();
  cols.keys = std::move(non_basis);
  cols.keys.insert(cols.keys.end(), basis.begin(), basis.end());
  for (std::size_t i = 0; i < cols.keys.size(); ++i) cols.index.emplace(cols.keys[i], i);
  return cols;
}

using SparseRow = std::map<std::size_t, Rat>;

// expansions of every relation multiplied into the given degree
std::vector<SparseRow> rows_for_degree(const Presentation& pres,
                                       const std::vector<Relation>& rels,
                                       const GradedColumns& cols, std::size_t degree) {
  std::vector<SparseRow> rows;
  IndexSet coords(pres.ambient_rank());
  std::iota(coords.begin(), coords.end(), std::size_t{0});
  for (const Relation& rel : rels) {
    if (rel.degree > degree || degree - rel.degree > pres.ambient_rank()) continue;
    for (const IndexSet& pick : arimat::combinations(coords, degree - rel.degree)) {
      Monomial m = 0;
      for (std::size_t i : pick) m |= Monomial{1} << i;
      SparseRow row;
      for (const auto& [key, coeff] : rel.element) {
        const int s = wedge_sign(m, key.second);
        if (s == 0) continue;
        const std::size_t col = cols.index.at({key.first, m | key.second});
        auto it = row.find(col);
        const Rat add = s > 0 ? coeff : -coeff;
        if (it == row.end()) {
          if (add != 0) row.emplace(col, add);
        } else {
          it->second += add;
          if (it->second == 0) row.erase(it);
        }
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  return rows;
}

// sparse row-echelon elimination over Q; pivots keyed by leading column
struct Eliminator {
  std::map<std::size_t, SparseRow> pivots;

  // f by value: callers pass coefficients living inside row, which this loop erases
  static void axpy(SparseRow& row, const Rat f, const SparseRow& src) {
    for (const auto& [c, v] : src) {
      auto it = row.find(c);
      if (it == row.end()) {
        Rat nv = -f * v;
        if (nv != 0) row.emplace(c, std::move(nv));
      } else {
        it->second -= f * v;
        if (it->second == 0) row.erase(it);
      }
    }
  }

  void add_row(SparseRow row) {
    while (!row.empty()) {
      const std::size_t lead = row.begin()->first;
      auto p = pivots.find(lead);
      if (p == pivots.end()) {
        const Rat inv = row.begin()->second;
        for (auto& [c, v] : row) v /= inv;
        pivots.emplace(lead, std::move(row));
        return;
      }
      axpy(row, row.begin()->second, p->second);
    }
  }

  SparseRow reduce(SparseRow row) const {
    while (true) {
      auto hit = row.end();
      for (auto it = row.begin(); it != row.end(); ++it)
        if (pivots.count(it->first)) {
          hit = it;
          break;
        }
      if (hit == row.end()) return row;
      axpy(row, hit->second, pivots.at(hit->first));
    }
  }
};

}  // namespace

std::vector<std::size_t> quotient_dimensions(const Presentation& pres) {
  return quotient_dimensions(pres, pres.top_degree());
}

std::vector<std::size_t> quotient_dimensions(const Presentation& pres,
                                             std::size_t max_degree) {
  const std::vector<Relation> rels = module_relations(pres);
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k <= std::min(max_degree, pres.top_degree()); ++k) {
    GradedColumns cols = graded_columns(pres, k);
    Eliminator elim;
    for (SparseRow& row : rows_for_degree(pres, rels, cols, k)) elim.add_row(std::move(row));
    dims.push_back(cols.keys.size() - elim.pivots.size());
  }
  return dims;
}

ModuleElement multiply(const Presentation& pres, const ModuleElement& a,
                       const ModuleElement& b) {
  ModuleElement out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      const int ws = wedge_sign(ka.second, kb.second);
      if (ws == 0) continue;
      auto [ps, comps] = product_of_generators(pres, ka.first, kb.first);
      if (ps == 0) continue;
      // move the left monomial across the right generator
      const int cross =
          (std::popcount(ka.second) * pres.generators[kb.first].degree()) % 2 == 0 ? 1 : -1;
      const Rat coeff = ca * cb * ws * ps * cross;
      for (std::size_t gl : comps) {
        SpanKey key{gl, ka.second | kb.second};
        auto it = out.find(key);
        if (it == out.end()) {
          if (coeff != 0) out.emplace(key, coeff);
        } else {
          it->second += coeff;
          if (it->second == 0) out.erase(it);
        }
      }
    }
  return out;
}

std::map<SpanKey, Rat> reduce_to_basis(const Presentation& pres, const ModuleElement& e) {
  if (e.empty()) return {};
  std::optional<std::size_t> deg;
  for (const auto& [key, c] : e) {
    const std::size_t kd = key_degree(pres, key);
    if (deg && *deg != kd)
      fail(errc::degree_mixed, "element spans degrees " + std::to_string(*deg) + " and " +
                                   std::to_string(kd));
    deg = kd;
  }

  GradedColumns cols = graded_columns(pres, *deg);
  Eliminator elim;
  for (SparseRow& row : rows_for_degree(pres, module_relations(pres), cols, *deg))
    elim.add_row(std::move(row));

  // the relation rows must complement the basis block exactly
  for (const auto& [col, row] : elim.pivots)
    if (col >= cols.basis_start)
      fail(errc::basis_defect, "relation pivot lands on basis column " +
                                   std::to_string(col) + " in degree " + std::to_string(*deg));
  if (elim.pivots.size() != cols.basis_start)
    fail(errc::basis_defect,
         "degree " + std::to_string(*deg) + ": relation rank " +
             std::to_string(elim.pivots.size()) + " does not cover the " +
             std::to_string(cols.basis_start) + " non-basis columns");

  SparseRow vec;
  for (const auto& [key, c] : e) vec[cols.index.at(key)] = c;
  SparseRow red = elim.reduce(std::move(vec));
  std::map<SpanKey, Rat> out;
  for (const auto& [col, v] : red) out[cols.keys[col]] = v;
  return out;
}

bool is_unimodular(const GroundSet& ground) {
  IndexSet all(ground.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  const std::size_t top = ground.size();
  for (std::size_t s = 1; s <= top; ++s)
    for (const IndexSet& a : arimat::combinations(all, s)) {
      if (arimat::rank_of(ground, a) != s) continue;
      if (arimat::multiplicity_trivial(ground, a) != 1) return false;
    }
  return true;
}

bool ConjectureReport::all_match() const {
  for (const auto& d : degrees)
    if (!d.match) return false;
  return true;
}

ConjectureReport integral_conjecture_check(const Presentation& pres,
                                           const addcoh::BettiTable& betti) {
  ConjectureReport rep;
  rep.unimodular = is_unimodular(pres.ground);

  std::vector<Relation> rels = restriction_relations(pres);
  for (Relation& r : circuit_relations_impl(pres, true)) rels.push_back(std::move(r));

  for (std::size_t k = 0; k <= pres.top_degree(); ++k) {
    GradedColumns cols = graded_columns(pres, k);
    std::vector<SparseRow> rows = rows_for_degree(pres, rels, cols, k);
    IntMatrix mat(rows.size(), cols.keys.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [col, v] : rows[r]) {
        if (boost::multiprecision::denominator(v) != 1)
          fail(errc::invalid_argument, "internal: integral row has a denominator");
        mat.at(r, col) = boost::multiprecision::numerator(v);
      }
    DegreeComparison cmp;
    cmp.degree = k;
    cmp.presentation_group = intlat::quotient_invariants(cols.keys.size(), mat);
    cmp.cohomology_group =
        k < betti.by_degree.size() ? betti.by_degree[k] : TorsionData{};
    cmp.match = cmp.presentation_group == cmp.cohomology_group;
    rep.degrees.push_back(std::move(cmp));
  }
  return rep;
}

}  // namespace torarr::ospres

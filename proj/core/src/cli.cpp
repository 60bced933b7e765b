#include <torarr/addcoh.hpp>
#include <torarr/cli.hpp>
#include <torarr/error.hpp>
#include <torarr/topo.hpp>

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

namespace torarr::cli {

using arimat::GroundSet;
using arimat::IndexSet;
using arrangement::AtomSpec;
using arrangement::Character;
using arrangement::LayerPoset;
using arrangement::UnityRoot;
using intlat::IntMatrix;
using intlat::TorsionData;
using ojson = nlohmann::ordered_json;

namespace {

// error message with the "Name: " prefix removed, for re-wrapping
std::string strip_error_name(const Error& e) {
  const std::string w = e.what();
  const auto pos = w.find(": ");
  return pos == std::string::npos ? w : w.substr(pos + 2);
}

ojson json_int(const Int& x) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (x >= lo && x <= hi) return x.convert_to<long long>();
  return x.str();
}

ojson json_character(const Character& chi) {
  ojson a = ojson::array();
  for (const Int& e : chi) a.push_back(json_int(e));
  return a;
}

ojson json_matrix(const IntMatrix& m) {
  ojson rows = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(json_character(m.row(r)));
  return rows;
}

ojson json_group(const TorsionData& g) {
  ojson o;
  o["free_rank"] = g.free_rank;
  ojson f = ojson::array();
  for (const Int& d : g.invariant_factors) f.push_back(d.str());
  o["invariant_factors"] = f;
  return o;
}

std::string rat_str(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

std::string character_str(const Character& chi) {
  std::string s = "[";
  for (std::size_t i = 0; i < chi.size(); ++i) s += (i ? " " : "") + chi[i].str();
  return s + "]";
}

std::string indices_str(const std::vector<std::size_t>& v) {
  if (v.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string render_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string term_str(const ospres::SpanKey& key, const Rat& coeff, std::size_t rank) {
  std::string s = "(" + rat_str(coeff) + ")e" + std::to_string(key.first);
  for (std::size_t i = 0; i < rank; ++i)
    if (key.second & (ospres::Monomial{1} << i)) s += "*x" + std::to_string(i + 1);
  return s;
}

ojson json_monomial(ospres::Monomial m, std::size_t rank) {
  ojson a = ojson::array();
  for (std::size_t i = 0; i < rank; ++i)
    if (m & (ospres::Monomial{1} << i)) a.push_back(i);
  return a;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace

ArrangementFile parse_input(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(errc::parse_error, "top level must be an object");
  if (!doc.contains("ambient_rank") || !doc["ambient_rank"].is_number_integer() ||
      doc["ambient_rank"].get<long long>() < 0)
    fail(errc::parse_error, "field 'ambient_rank' must be a nonnegative integer");

  ArrangementFile file;
  file.ambient_rank = doc["ambient_rank"].get<std::size_t>();
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail(errc::parse_error, "field 'name' must be a string");
    file.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("atoms") || !doc["atoms"].is_array())
    fail(errc::parse_error, "field 'atoms' must be an array");

  for (std::size_t i = 0; i < doc["atoms"].size(); ++i) {
    const auto& ja = doc["atoms"][i];
    const std::string at = "atom " + std::to_string(i) + ": ";
    if (!ja.is_object() || !ja.contains("characters") || !ja.contains("constants") ||
        !ja["characters"].is_array() || !ja["constants"].is_array())
      fail(errc::parse_error, at + "expected object with 'characters' and 'constants' arrays");

    AtomSpec atom;
    for (const auto& jc : ja["characters"]) {
      if (!jc.is_array()) fail(errc::parse_error, at + "each character must be an array");
      Character chi;
      for (const auto& je : jc) {
        if (!je.is_number_integer())
          fail(errc::parse_error, at + "character entries must be integers");
        chi.push_back(Int(je.get<long long>()));
      }
      atom.characters.push_back(std::move(chi));
    }
    for (const auto& jv : ja["constants"]) {
      if (!jv.is_string()) fail(errc::parse_error, at + "constants must be strings");
      const std::string s = jv.get<std::string>();
      auto root = UnityRoot::parse(s);
      if (!root)
        fail(errc::parse_error,
             at + "constant '" + s + "' is not canonical (reduced p/q with 0 <= p < q, or 0)");
      atom.constants.push_back(*root);
    }
    try {
      arrangement::validate_atom(file.ambient_rank, atom);
    } catch (const Error& e) {
      fail(e.code(), at + strip_error_name(e));
    }
    file.atoms.push_back(std::move(atom));
  }
  return file;
}

std::string serialize(const ArrangementFile& file) {
  ojson doc;
  doc["ambient_rank"] = file.ambient_rank;
  if (!file.name.empty()) doc["name"] = file.name;
  ojson atoms = ojson::array();
  for (const AtomSpec& a : file.atoms) {
    ojson ja;
    ojson chars = ojson::array();
    for (const Character& chi : a.characters) chars.push_back(json_character(chi));
    ja["characters"] = chars;
    ojson consts = ojson::array();
    for (const UnityRoot& c : a.constants) consts.push_back(c.str());
    ja["constants"] = consts;
    atoms.push_back(ja);
  }
  doc["atoms"] = atoms;
  return dump(doc);
}

namespace {

std::string layer_equations_str(const arrangement::Layer& w) {
  if (w.sub.rows() == 0) return "-";
  std::string s;
  for (std::size_t r = 0; r < w.sub.rows(); ++r) {
    if (r) s += "; ";
    s += character_str(w.sub.row(r)) + "=" + w.point[r].str();
  }
  return s;
}

CommandResult cmd_poset(const ArrangementFile& file, const Options& opt) {
  LayerPoset poset = build_layer_poset(file.ambient_rank, file.atoms);
  if (opt.format == Format::json) {
    ojson doc;
    doc["command"] = "poset";
    if (!file.name.empty()) doc["name"] = file.name;
    doc["ambient_rank"] = poset.ambient_rank;
    doc["atom_count"] = poset.atom_count;
    doc["layer_count"] = poset.layers.size();
    doc["cover_count"] = poset.cover_pairs.size();
    ojson layers = ojson::array();
    for (std::size_t i = 0; i < poset.layers.size(); ++i) {
      ojson l;
      l["index"] = i;
      l["codim"] = poset.codim(i);
      l["dim"] = poset.dim(i);
      l["atoms"] = poset.atoms_below[i];
      ojson eqs = ojson::array();
      const auto& w = poset.layers[i];
      for (std::size_t r = 0; r < w.sub.rows(); ++r) {
        ojson e;
        e["character"] = json_character(w.sub.row(r));
        e["value"] = w.point[r].str();
        eqs.push_back(e);
      }
      l["equations"] = eqs;
      layers.push_back(l);
    }
    doc["layers"] = layers;
    ojson covers = ojson::array();
    for (const auto& [a, b] : poset.cover_pairs) covers.push_back(ojson::array({a, b}));
    doc["cover_relations"] = covers;
    return {0, dump(doc)};
  }
  std::vector<std::vector<std::string>> rows = {{"index", "codim", "dim", "atoms", "equations"}};
  for (std::size_t i = 0; i < poset.layers.size(); ++i)
    rows.push_back({std::to_string(i), std::to_string(poset.codim(i)),
                    std::to_string(poset.dim(i)), indices_str(poset.atoms_below[i]),
                    layer_equations_str(poset.layers[i])});
  std::string covers = "covers:";
  for (const auto& [a, b] : poset.cover_pairs)
    covers += " " + std::to_string(a) + "<" + std::to_string(b);
  std::string head = "layers " + std::to_string(poset.layers.size()) + ", cover relations " +
                     std::to_string(poset.cover_pairs.size()) + "\n";
  return {0, head + render_rows(rows) + covers + "\n"};
}

CommandResult cmd_betti(const ArrangementFile& file, const Options& opt) {
  LayerPoset poset = build_layer_poset(file.ambient_rank, file.atoms);
  addcoh::BettiTable betti = addcoh::cohomology_groups(poset);
  if (opt.format == Format::json) {
    ojson doc;
    doc["command"] = "betti";
    if (!file.name.empty()) doc["name"] = file.name;
    doc["ambient_rank"] = betti.ambient_rank;
    doc["poincare"] = betti.poincare_str();
    doc["euler_characteristic"] = json_int(betti.euler_characteristic());
    ojson deg = ojson::array();
    for (std::size_t k = 0; k < betti.by_degree.size(); ++k) {
      ojson d;
      d["degree"] = k;
      d["free_rank"] = betti.by_degree[k].free_rank;
      ojson f = ojson::array();
      for (const Int& v : betti.by_degree[k].invariant_factors) f.push_back(v.str());
      d["invariant_factors"] = f;
      deg.push_back(d);
    }
    doc["by_degree"] = deg;
    ojson sums = ojson::array();
    for (const auto& sm : betti.summands) {
      ojson s;
      s["layer"] = sm.layer;
      s["p"] = sm.p;
      s["q"] = sm.q;
      s["degree"] = sm.degree;
      s["group"] = json_group(sm.group);
      sums.push_back(s);
    }
    doc["summands"] = sums;
    return {0, dump(doc)};
  }
  std::string head = "poincare  " + betti.poincare_str() + "\neuler     " +
                     betti.euler_characteristic().str() + "\n\n";
  std::vector<std::vector<std::string>> rows = {{"degree", "group"}};
  for (std::size_t k = 0; k < betti.by_degree.size(); ++k)
    rows.push_back({std::to_string(k), betti.by_degree[k].str()});
  std::vector<std::vector<std::string>> sums = {{"layer", "p", "q", "degree", "group"}};
  for (const auto& sm : betti.summands)
    sums.push_back({std::to_string(sm.layer), std::to_string(sm.p), std::to_string(sm.q),
                    std::to_string(sm.degree), sm.group.str()});
  return {0, head + render_rows(rows) + "\n" + render_rows(sums)};
}

CommandResult cmd_e2(const ArrangementFile& file, const Options& opt) {
  LayerPoset poset = build_layer_poset(file.ambient_rank, file.atoms);
  addcoh::E2Table table = addcoh::e2_page(poset);
  if (opt.format == Format::json) {
    ojson doc;
    doc["command"] = "e2";
    if (!file.name.empty()) doc["name"] = file.name;
    doc["ambient_rank"] = table.ambient_rank;
    ojson entries = ojson::array();
    for (const auto& e : table.entries) {
      ojson o;
      o["p"] = e.p;
      o["q"] = e.q;
      o["filtration"] = e.filtration();
      o["group"] = json_group(e.group);
      ojson layers = ojson::array();
      for (const auto& sm : e.summands) layers.push_back(sm.layer);
      o["layers"] = layers;
      entries.push_back(o);
    }
    doc["entries"] = entries;
    return {0, dump(doc)};
  }
  std::vector<std::vector<std::string>> rows = {{"p", "q", "filtration", "group"}};
  for (const auto& e : table.entries)
    rows.push_back({std::to_string(e.p), std::to_string(e.q), std::to_string(e.filtration()),
                    e.group.str()});
  return {0, render_rows(rows)};
}

CommandResult cmd_matroid(const ArrangementFile& file, const Options& opt) {
  GroundSet ground = arimat::make_ground_set(file.ambient_rank, file.atoms);
  IndexSet all(ground.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const std::size_t rank = arimat::rank_of(ground, all);
  const auto circuits = arimat::all_circuits(ground);
  const bool uni = ospres::is_unimodular(ground);

  if (opt.format == Format::json) {
    ojson doc;
    doc["command"] = "matroid";
    if (!file.name.empty()) doc["name"] = file.name;
    doc["ambient_rank"] = ground.ambient_rank;
    doc["rank"] = rank;
    doc["unimodular"] = uni;
    ojson gs = ojson::array();
    for (std::size_t i = 0; i < ground.size(); ++i) {
      ojson a;
      a["atom"] = i;
      a["character"] = json_character(ground.characters[i]);
      a["constant"] = ground.constants[i].str();
      a["multiplicity"] = arimat::multiplicity_trivial(ground, {i});
      gs.push_back(a);
    }
    doc["ground_set"] = gs;
    ojson cs = ojson::array();
    for (const auto& c : circuits) {
      ojson o;
      o["support"] = c.support;
      ojson rel = ojson::array();
      for (const Int& r : c.relation) rel.push_back(r.str());
      o["relation"] = rel;
      o["multiplicity"] = arimat::multiplicity_trivial(ground, c.support);
      ojson dels = ojson::array();
      for (std::size_t i = 0; i < c.support.size(); ++i) {
        IndexSet d = c.support;
        d.erase(d.begin() + static_cast<std::ptrdiff_t>(i));
        ojson e;
        e["drop"] = c.support[i];
        e["multiplicity"] = arimat::multiplicity_trivial(ground, d);
        dels.push_back(e);
      }
      o["deletions"] = dels;
      cs.push_back(o);
    }
    doc["circuits"] = cs;
    return {0, dump(doc)};
  }
  std::string head = "rank " + std::to_string(rank) + ", unimodular " +
                     (uni ? "yes" : "no") + "\n";
  std::vector<std::vector<std::string>> rows = {{"atom", "character", "constant", "m"}};
  for (std::size_t i = 0; i < ground.size(); ++i)
    rows.push_back({std::to_string(i), character_str(ground.characters[i]),
                    ground.constants[i].str(),
                    std::to_string(arimat::multiplicity_trivial(ground, {i}))});
  std::vector<std::vector<std::string>> crows = {{"circuit", "relation", "m"}};
  for (const auto& c : circuits) {
    std::string rel;
    for (std::size_t i = 0; i < c.relation.size(); ++i)
      rel += (i ? "," : "") + c.relation[i].str();
    crows.push_back({indices_str(c.support), rel,
                     std::to_string(arimat::multiplicity_trivial(ground, c.support))});
  }
  return {0, head + render_rows(rows) + "\n" + render_rows(crows)};
}

CommandResult cmd_presentation(const ArrangementFile& file, const Options& opt) {
  GroundSet ground = arimat::make_ground_set(file.ambient_rank, file.atoms);
  LayerPoset poset = build_layer_poset(file.ambient_rank, file.atoms);
  ospres::Presentation pres = ospres::make_presentation(ground, poset, opt.j_convention);
  const std::size_t cap = std::min(opt.degree.value_or(pres.top_degree()), pres.top_degree());
  const auto rels = ospres::module_relations(pres);
  const auto dims = ospres::quotient_dimensions(pres, cap);
  const auto nbc = ospres::nbc_basis(pres);
  const char* jname = pres.j_convention == ospres::JConvention::min ? "min" : "max";

  auto span_dim = [&](std::size_t k) {
    Int total = 0;
    for (const auto& g : pres.generators)
      if (g.degree() <= k) total += binomial(pres.ambient_rank(), k - g.degree());
    return total;
  };

  if (opt.format == Format::json) {
    ojson doc;
    doc["command"] = "presentation";
    if (!file.name.empty()) doc["name"] = file.name;
    doc["ambient_rank"] = pres.ambient_rank();
    doc["j_convention"] = jname;
    doc["degree_cap"] = cap;
    doc["generator_count"] = pres.generators.size();
    ojson gens = ojson::array();
    for (std::size_t i = 0; i < pres.generators.size(); ++i) {
      ojson g;
      g["index"] = i;
      g["layer"] = pres.generators[i].layer;
      g["atoms"] = pres.generators[i].set;
      g["degree"] = pres.generators[i].degree();
      g["nbc"] = pres.generator_is_nbc[i] != 0;
      gens.push_back(g);
    }
    doc["generators"] = gens;
    doc["relation_count"] = rels.size();
    ojson jrels = ojson::array();
    for (const auto& r : rels) {
      ojson o;
      o["kind"] = r.kind == ospres::Relation::Kind::restriction ? "restriction" : "circuit";
      o["degree"] = r.degree;
      o["label"] = r.label;
      ojson terms = ojson::array();
      for (const auto& [key, coeff] : r.element) {
        ojson t;
        t["generator"] = key.first;
        t["monomial"] = json_monomial(key.second, pres.ambient_rank());
        t["coefficient"] = rat_str(coeff);
        terms.push_back(t);
      }
      o["terms"] = terms;
      jrels.push_back(o);
    }
    doc["relations"] = jrels;
    ojson jd = ojson::array();
    for (std::size_t k = 0; k < dims.size(); ++k) {
      ojson d;
      d["degree"] = k;
      d["span"] = json_int(span_dim(k));
      d["quotient"] = dims[k];
      d["nbc"] = json_int(nbc.dimensions[k]);
      jd.push_back(d);
    }
    doc["dimensions"] = jd;
    return {0, dump(doc)};
  }
  std::string head = std::string("j convention ") + jname + ", generators " +
                     std::to_string(pres.generators.size()) + ", relations " +
                     std::to_string(rels.size()) + "\n\n";
  std::vector<std::vector<std::string>> grows = {{"index", "layer", "atoms", "degree", "nbc"}};
  for (std::size_t i = 0; i < pres.generators.size(); ++i)
    grows.push_back({std::to_string(i), std::to_string(pres.generators[i].layer),
                     indices_str(pres.generators[i].set),
                     std::to_string(pres.generators[i].degree()),
                     pres.generator_is_nbc[i] ? "yes" : "no"});
  std::vector<std::vector<std::string>> rrows = {{"kind", "degree", "terms", "label"}};
  for (const auto& r : rels) {
    std::string terms;
    for (const auto& [key, coeff] : r.element) {
      if (!terms.empty()) terms += " + ";
      terms += term_str(key, coeff, pres.ambient_rank());
    }
    rrows.push_back({r.kind == ospres::Relation::Kind::restriction ? "restriction" : "circuit",
                     std::to_string(r.degree), terms, r.label});
  }
  std::vector<std::vector<std::string>> drows = {{"degree", "span", "quotient", "nbc"}};
  for (std::size_t k = 0; k < dims.size(); ++k)
    drows.push_back({std::to_string(k), span_dim(k).str(), std::to_string(dims[k]),
                     nbc.dimensions[k].str()});
  return {0, head + render_rows(grows) + "\n" + render_rows(rrows) + "\n" + render_rows(drows)};
}

CommandResult cmd_positive_system(const ArrangementFile& file, const Options& opt) {
  arrangement::PositiveSystem ps = arrangement::positive_system(file.ambient_rank, file.atoms);
  if (opt.format == Format::json) {
    ojson doc;
    doc["command"] = "positive-system";
    if (!file.name.empty()) doc["name"] = file.name;
    doc["ambient_rank"] = file.ambient_rank;
    doc["u"] = json_matrix(ps.u);
    doc["columns"] = json_matrix(ps.columns);
    ojson owners = ojson::array();
    for (const auto& [atom, row] : ps.column_owner) owners.push_back(ojson::array({atom, row}));
    doc["column_owner"] = owners;
    doc["flipped_columns"] = ps.flipped_columns;
    doc["has_zero_entry"] = ps.has_zero_entry;
    return {0, dump(doc)};
  }
  std::string out = "u:\n" + ps.u.str() + "columns (u * chosen basis vectors):\n" +
                    ps.columns.str();
  out += "flipped: " + indices_str(ps.flipped_columns) + "\n";
  out += std::string("zero entries: ") + (ps.has_zero_entry ? "yes" : "no") + "\n";
  return {0, out};
}

CommandResult cmd_conjecture(const ArrangementFile& file, const Options& opt) {
  GroundSet ground = arimat::make_ground_set(file.ambient_rank, file.atoms);
  LayerPoset poset = build_layer_poset(file.ambient_rank, file.atoms);
  ospres::Presentation pres = ospres::make_presentation(ground, poset, opt.j_convention);
  addcoh::BettiTable betti = addcoh::cohomology_groups(poset);
  ospres::ConjectureReport rep = ospres::integral_conjecture_check(pres, betti);
  const char* jname = pres.j_convention == ospres::JConvention::min ? "min" : "max";

  if (opt.format == Format::json) {
    ojson doc;
    doc["command"] = "conjecture-check";
    if (!file.name.empty()) doc["name"] = file.name;
    doc["ambient_rank"] = pres.ambient_rank();
    doc["j_convention"] = jname;
    doc["unimodular"] = rep.unimodular;
    ojson degs = ojson::array();
    for (const auto& d : rep.degrees) {
      ojson o;
      o["degree"] = d.degree;
      o["presentation"] = json_group(d.presentation_group);
      o["cohomology"] = json_group(d.cohomology_group);
      o["match"] = d.match;
      degs.push_back(o);
    }
    doc["degrees"] = degs;
    doc["all_match"] = rep.all_match();
    return {0, dump(doc)};
  }
  std::string head = std::string("unimodular ") + (rep.unimodular ? "yes" : "no") +
                     ", all degrees match " + (rep.all_match() ? "yes" : "no") + "\n";
  std::vector<std::vector<std::string>> rows = {
      {"degree", "presentation", "cohomology", "match"}};
  for (const auto& d : rep.degrees)
    rows.push_back({std::to_string(d.degree), d.presentation_group.str(),
                    d.cohomology_group.str(), d.match ? "yes" : "no"});
  return {0, head + render_rows(rows)};
}

}  // namespace

bool ValidationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

ArrangementFile random_arrangement(std::uint64_t seed, std::size_t max_rank,
                                   std::size_t max_atoms, long long max_entry) {
  if (max_rank == 0 || max_atoms == 0 || max_entry <= 0)
    fail(errc::invalid_argument, "size caps must be positive");
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  ArrangementFile file;
  file.ambient_rank = 1 + pick(max_rank);
  file.name = "seed-" + std::to_string(seed);
  const std::size_t target = 1 + pick(max_atoms);
  for (std::size_t attempt = 0; file.atoms.size() < target && attempt < 200; ++attempt) {
    Character chi(file.ambient_rank);
    bool nonzero = false;
    for (auto& e : chi) {
      const long long v =
          static_cast<long long>(pick(static_cast<std::size_t>(2 * max_entry + 1))) - max_entry;
      e = v;
      nonzero = nonzero || v != 0;
    }
    if (!nonzero) continue;
    UnityRoot c;
    if (pick(2) == 1) {
      const long long q = 2 + static_cast<long long>(pick(3));
      const long long p = 1 + static_cast<long long>(pick(static_cast<std::size_t>(q - 1)));
      c = UnityRoot(Rat(p, q));
    }
    AtomSpec atom;
    atom.characters.push_back(std::move(chi));
    atom.constants.push_back(c);
    std::vector<AtomSpec> trial = file.atoms;
    trial.push_back(atom);
    try {
      arrangement::build_layer_poset(file.ambient_rank, trial);
    } catch (const Error&) {
      continue;  // nested with an earlier atom: redraw
    }
    file.atoms = std::move(trial);
  }
  return file;
}

namespace {

void check_instance(const std::string& label, const ArrangementFile& file,
                    ValidationReport& rep) {
  auto add = [&](const std::string& check, bool pass, const std::string& witness) {
    rep.checks.push_back({label, check, pass, pass ? std::string() : witness});
  };

  LayerPoset poset;
  try {
    poset = arrangement::build_layer_poset(file.ambient_rank, file.atoms);
  } catch (const std::exception& e) {
    add("poset_build", false, e.what());
    return;
  }

  try {
    bool ok = true;
    std::string wit;
    for (std::size_t a = 0; a < poset.layers.size() && ok; ++a)
      for (std::size_t b = a; b < poset.layers.size() && ok; ++b) {
        if (!poset.leq(a, b)) continue;
        const Int mu = topo::mobius(poset, a, b);
        const Int eu =
            topo::reduced_euler(topo::reduced_homology(topo::order_complex(poset, a, b)));
        if (mu != eu) {
          ok = false;
          wit = "interval (" + std::to_string(a) + "," + std::to_string(b) +
                "): mobius " + mu.str() + " != euler " + eu.str();
        }
      }
    add("mobius_euler", ok, wit);
  } catch (const std::exception& e) {
    add("mobius_euler", false, e.what());
  }

  addcoh::BettiTable betti;
  try {
    betti = addcoh::cohomology_groups(poset);
    const auto mism = addcoh::degeneration_mismatches(betti, addcoh::e2_page(poset));
    std::string wit;
    for (const auto& m : mism) wit += (wit.empty() ? "" : "; ") + m;
    add("degeneration", mism.empty(), wit);
  } catch (const std::exception& e) {
    add("degeneration", false, e.what());
    return;
  }

  GroundSet ground;
  try {
    ground = arimat::make_ground_set(file.ambient_rank, file.atoms);
  } catch (const Error&) {
    return;  // divisorial checks do not apply
  }

  ospres::Presentation pres;
  std::vector<std::size_t> dims;
  try {
    pres = ospres::make_presentation(ground, poset, ospres::JConvention::min);
    dims = ospres::quotient_dimensions(pres);
    const auto nbc = ospres::nbc_basis(pres);
    bool ok = true;
    std::string wit;
    for (std::size_t k = 0; k < dims.size() && ok; ++k) {
      const Int quotient(dims[k]);
      const Int counted = nbc.dimensions[k];
      const Int additive(betti.by_degree[k].free_rank);
      if (quotient != counted || quotient != additive) {
        ok = false;
        wit = "degree " + std::to_string(k) + ": quotient " + quotient.str() + ", nbc " +
              counted.str() + ", additive " + additive.str();
      }
    }
    add("nbc_dimensions", ok, wit);
  } catch (const std::exception& e) {
    add("nbc_dimensions", false, e.what());
    return;
  }

  try {
    const auto dmax = ospres::quotient_dimensions(
        ospres::make_presentation(ground, poset, ospres::JConvention::max));
    std::string wit;
    if (dims != dmax) {
      wit = "min";
      for (auto d : dims) wit += " " + std::to_string(d);
      wit += " vs max";
      for (auto d : dmax) wit += " " + std::to_string(d);
    }
    add("j_convention", dims == dmax, wit);
  } catch (const std::exception& e) {
    add("j_convention", false, e.what());
  }

  try {
    bool ok = true;
    std::string wit;
    for (const auto& c : arimat::all_circuits(ground)) {
      const std::size_t mc = arimat::multiplicity_trivial(ground, c.support);
      for (std::size_t i = 0; i < c.support.size() && ok; ++i) {
        IndexSet d = c.support;
        d.erase(d.begin() + static_cast<std::ptrdiff_t>(i));
        const Int expect = Int(mc) * abs(c.relation[i]);
        const Int got(arimat::multiplicity_trivial(ground, d));
        if (expect != got) {
          ok = false;
          wit = "circuit " + indices_str(c.support) + " drop " +
                std::to_string(c.support[i]) + ": m(C)*|r| " + expect.str() + " != " +
                got.str();
        }
      }
      if (!ok) break;
    }
    add("circuit_coefficients", ok, wit);
  } catch (const std::exception& e) {
    add("circuit_coefficients", false, e.what());
  }

  try {
    bool ok = true;
    std::string wit;
    for (const auto& sm : betti.summands)
      if (sm.q != poset.codim(sm.layer)) {
        ok = false;
        wit = "layer " + std::to_string(sm.layer) + " contributes at q " +
              std::to_string(sm.q) + " != codim " + std::to_string(poset.codim(sm.layer));
        break;
      }
    add("divisorial_concentration", ok, wit);
  } catch (const std::exception& e) {
    add("divisorial_concentration", false, e.what());
  }

  try {
    const auto ps = arrangement::positive_system(file.ambient_rank, file.atoms);
    bool ok = abs(intlat::determinant(ps.u)) == 1;
    std::string wit = ok ? "" : "u is not unimodular";
    for (std::size_t c = 0; c < ps.columns.cols() && ok; ++c) {
      bool zero = true;
      for (std::size_t r = 0; r < ps.columns.rows(); ++r) {
        if (ps.columns.at(r, c) < 0) {
          ok = false;
          wit = "negative entry in column " + std::to_string(c);
        }
        zero = zero && ps.columns.at(r, c) == 0;
      }
      if (ok && zero && ps.columns.rows() > 0) {
        ok = false;
        wit = "zero column " + std::to_string(c);
      }
    }
    add("positive_system", ok, wit);
  } catch (const std::exception& e) {
    add("positive_system", false, e.what());
  }

  try {
    const auto report = ospres::integral_conjecture_check(pres, betti);
    bool ok = true;
    std::string wit;
    if (report.unimodular && !report.all_match()) {
      ok = false;
      for (const auto& d : report.degrees)
        if (!d.match)
          wit += (wit.empty() ? "" : "; ") + ("degree " + std::to_string(d.degree) + ": " +
                                              d.presentation_group.str() + " vs " +
                                              d.cohomology_group.str());
    }
    add("integral_conjecture", ok, wit);
  } catch (const std::exception& e) {
    add("integral_conjecture", false, e.what());
  }
}

CommandResult cmd_validate(const std::optional<ArrangementFile>& file, const Options& opt) {
  ValidationReport rep = validate_suite(file, opt);
  std::size_t failed = 0;
  for (const auto& c : rep.checks)
    if (!c.pass) ++failed;
  const int code = failed == 0 ? 0 : 2;

  if (opt.format == Format::json) {
    ojson doc;
    doc["command"] = "validate";
    doc["seed"] = opt.seed;
    doc["random"] = opt.random;
    ojson checks = ojson::array();
    for (const auto& c : rep.checks) {
      ojson o;
      o["instance"] = c.instance;
      o["check"] = c.check;
      o["status"] = c.pass ? "pass" : "fail";
      if (!c.pass) o["witness"] = c.witness;
      checks.push_back(o);
    }
    doc["checks"] = checks;
    doc["total"] = rep.checks.size();
    doc["failed"] = failed;
    return {code, dump(doc)};
  }
  std::vector<std::vector<std::string>> rows = {{"status", "instance", "check", "witness"}};
  for (const auto& c : rep.checks)
    rows.push_back({c.pass ? "PASS" : "FAIL", c.instance, c.check, c.witness});
  std::string tail = std::to_string(rep.checks.size()) + " checks, " +
                     std::to_string(failed) + " failed\n";
  return {code, render_rows(rows) + tail};
}

}  // namespace

ValidationReport validate_suite(const std::optional<ArrangementFile>& file,
                                const Options& opt) {
  ValidationReport rep;
  if (file) check_instance(file->name.empty() ? "input" : file->name, *file, rep);
  for (std::size_t i = 0; i < opt.random; ++i) {
    const ArrangementFile f =
        random_arrangement(opt.seed + i, opt.max_rank, opt.max_atoms, opt.max_entry);
    check_instance("random-" + std::to_string(i), f, rep);
  }
  return rep;
}

CommandResult run_command(const std::string& command,
                          const std::optional<std::string>& input_text,
                          const Options& opt) {
  if (command == "validate") {
    std::optional<ArrangementFile> file;
    if (input_text) file = parse_input(*input_text);
    if (!file && opt.random == 0)
      fail(errc::invalid_argument, "validate needs an input document or --random N");
    return cmd_validate(file, opt);
  }

  static const std::vector<std::string> known = {
      "poset",        "betti",    "e2",       "matroid",
      "presentation", "positive-system", "validate", "conjecture-check"};
  if (std::find(known.begin(), known.end(), command) == known.end())
    fail(errc::unknown_command, "unknown command '" + command + "'");
  if (!input_text) fail(errc::invalid_argument, command + " requires an input document");
  const ArrangementFile file = parse_input(*input_text);

  if (command == "poset") return cmd_poset(file, opt);
  if (command == "betti") return cmd_betti(file, opt);
  if (command == "e2") return cmd_e2(file, opt);
  if (command == "matroid") return cmd_matroid(file, opt);
  if (command == "presentation") return cmd_presentation(file, opt);
  if (command == "positive-system") return cmd_positive_system(file, opt);
  return cmd_conjecture(file, opt);
}

}  // namespace torarr::cli

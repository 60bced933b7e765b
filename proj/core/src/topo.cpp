#include <torarr/error.hpp>
#include <torarr/topo.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace torarr::topo {

using arrangement::LayerPoset;
using intlat::IntMatrix;
using intlat::SmithForm;
using intlat::TorsionData;

SimplicialComplex SimplicialComplex::void_complex() {
  SimplicialComplex cx;
  cx.is_void = true;
  return cx;
}

SimplicialComplex SimplicialComplex::empty_complex() { return {}; }

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertex_count,
                                                 std::vector<std::vector<int>> faces) {
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f)
      if (v < 0 || static_cast<std::size_t>(v) >= vertex_count)
        fail(errc::invalid_argument, "facet vertex out of range");
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  SimplicialComplex cx;
  cx.vertex_count = vertex_count;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < faces.size() && maximal; ++j)
      if (i != j && faces[i].size() < faces[j].size() &&
          std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(), faces[i].end()))
        maximal = false;
    if (maximal) cx.facets.push_back(faces[i]);
  }
  return cx;
}

long SimplicialComplex::dimension() const {
  if (is_void) return -2;
  long d = -1;
  for (const auto& f : facets) d = std::max(d, static_cast<long>(f.size()) - 1);
  return d;
}

std::string SimplicialComplex::str() const {
  if (is_void) return "void";
  std::ostringstream os;
  os << vertex_count << " vertices; facets:";
  for (const auto& f : facets) {
    os << " {";
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << "}";
  }
  if (facets.empty()) os << " (empty complex)";
  return os.str();
}

SimplicialComplex order_complex(const LayerPoset& poset, std::size_t lower,
                                std::size_t upper) {
  if (lower >= poset.layers.size() || upper >= poset.layers.size())
    fail(errc::invalid_argument, "layer index out of range");
  if (!poset.leq(lower, upper))
    fail(errc::not_comparable, "interval endpoints are not comparable");
  if (lower == upper) return SimplicialComplex::void_complex();

  // Interior layers, relabelled 0..m-1.  Poset indices increase along chains
  // (layers are sorted by codim first), so chains come out sorted.
  const std::vector<std::size_t> interior = poset.open_interval(lower, upper);
  const std::size_t m = interior.size();
  SimplicialComplex cx;
  cx.vertex_count = m;
  if (m == 0) return cx;

  std::vector<std::vector<int>> succ(m);  // covers of the induced subposet
  std::vector<bool> has_pred(m, false);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || !poset.leq(interior[a], interior[b])) continue;
      bool cover = true;
      for (std::size_t c = 0; c < m && cover; ++c)
        if (c != a && c != b && poset.leq(interior[a], interior[c]) &&
            poset.leq(interior[c], interior[b]))
          cover = false;
      if (cover) {
        succ[a].push_back(static_cast<int>(b));
        has_pred[b] = true;
      }
    }

  // Maximal chains = maximal faces: walk covers from the minimal elements.
  std::vector<int> chain;
  std::function<void(int)> extend = [&](int v) {
    chain.push_back(v);
    if (succ[static_cast<std::size_t>(v)].empty())
      cx.facets.push_back(chain);
    else
      for (int w : succ[static_cast<std::size_t>(v)]) extend(w);
    chain.pop_back();
  };
  for (std::size_t v = 0; v < m; ++v)
    if (!has_pred[v]) extend(static_cast<int>(v));
  std::sort(cx.facets.begin(), cx.facets.end());
  return cx;
}

std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& cx) {
  std::vector<HomologyGroup> out;
  if (cx.is_void) {
    out.push_back({-2, TorsionData{1, {}}});
    return out;
  }

  // Faces by dimension, lexicographically ordered; slot 0 holds the empty face.
  const long top = cx.dimension();
  std::vector<std::map<std::vector<int>, std::size_t>> faces(
      static_cast<std::size_t>(top + 2));
  faces[0][{}] = 0;
  for (const auto& f : cx.facets) {
    const std::size_t n = f.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) sub.push_back(f[i]);
      faces[sub.size()].emplace(std::move(sub), 0);
    }
  }
  for (auto& level : faces) {
    std::size_t idx = 0;
    for (auto& [face, slot] : level) slot = idx++;
  }

  // boundary s: rows = faces of dim s-1, cols = faces of dim s-2 (slot shift
  // by one); rank[s] and the invariant factors of boundary s+1 give H_{s-1}.
  const std::size_t levels = faces.size();
  std::vector<std::size_t> rank(levels + 1, 0);
  std::vector<std::vector<Int>> torsion(levels + 1);
  for (std::size_t s = 1; s < levels; ++s) {
    if (faces[s].empty()) continue;
    IntMatrix bd(faces[s].size(), faces[s - 1].size());
    std::size_t r = 0;
    for (const auto& [face, slot] : faces[s]) {
      (void)slot;
      for (std::size_t i = 0; i < face.size(); ++i) {
        std::vector<int> sub = face;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
        bd.at(r, faces[s - 1].at(sub)) = (i % 2 == 0) ? 1 : -1;
      }
      ++r;
    }
    SmithForm sf = intlat::smith_normal_form(bd);
    rank[s] = sf.rank;
    for (const Int& d : sf.diagonal())
      if (d > 1) torsion[s].push_back(d);
  }

  for (std::size_t s = 0; s < levels; ++s) {
    TorsionData h;
    h.free_rank = faces[s].size() - rank[s] - rank[s + 1];
    h.invariant_factors = torsion[s + 1];
    if (!h.is_trivial()) out.push_back({static_cast<long>(s) - 1, std::move(h)});
  }
  return out;
}

Int reduced_euler(const std::vector<HomologyGroup>& groups) {
  Int chi = 0;
  for (const auto& g : groups)
    chi += (g.degree % 2 == 0) ? Int(g.group.free_rank) : -Int(g.group.free_rank);
  return chi;
}

Int mobius(const LayerPoset& poset, std::size_t lower, std::size_t upper) {
  if (lower >= poset.layers.size() || upper >= poset.layers.size())
    fail(errc::invalid_argument, "layer index out of range");
  if (!poset.leq(lower, upper))
    fail(errc::not_comparable, "interval endpoints are not comparable");
  // mu(lower, z) for each z in the closed interval, in increasing poset index
  // (the order along chains), via sum_{lower <= z <= y} mu(lower, z) = 0.
  std::map<std::size_t, Int> mu;
  mu[lower] = 1;
  for (std::size_t z = lower + 1; z <= upper; ++z) {
    if (!poset.leq(lower, z) || !poset.leq(z, upper)) continue;
    Int acc = 0;
    for (const auto& [w, value] : mu)
      if (poset.leq(w, z) && w != z) acc += value;
    mu[z] = -acc;
  }
  return mu.at(upper);
}

}  // namespace torarr::topo

#include <torarr/addcoh.hpp>
#include <torarr/error.hpp>

#include <algorithm>
#include <sstream>

namespace torarr::addcoh {

using arrangement::LayerPoset;
using intlat::TorsionData;

std::vector<Int> BettiTable::free_ranks() const {
  std::vector<Int> r;
  for (const auto& g : by_degree) r.push_back(Int(g.free_rank));
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  return r;
}

Int BettiTable::euler_characteristic() const {
  Int chi = 0;
  bool neg = false;
  for (const auto& g : by_degree) {
    chi += neg ? -Int(g.free_rank) : Int(g.free_rank);
    neg = !neg;
  }
  return chi;
}

std::string BettiTable::poincare_str() const {
  std::vector<Int> r = free_ranks();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k] == 0 && !(k == 0 && r.size() == 1)) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || r[k] != 1) os << r[k];
    if (k == 1) os << "t";
    if (k >= 2) os << "t^" << k;
  }
  if (first) os << "0";
  return os.str();
}

const E2Entry* E2Table::find(std::size_t p, std::size_t q) const {
  for (const auto& e : entries)
    if (e.p == p && e.q == q) return &e;
  return nullptr;
}

std::vector<CohomologySummand> cohomology_summands(const LayerPoset& poset) {
  std::vector<CohomologySummand> out;
  for (std::size_t w = 0; w < poset.layers.size(); ++w) {
    const std::size_t cd = poset.codim(w);
    const std::size_t dim = poset.dim(w);
    const auto homology = topo::reduced_homology(topo::order_complex(poset, 0, w));
    for (const auto& h : homology) {
      // rows 2*cd - 2 - s; chains below W have length < cd, so s <= cd - 2
      // and the row index q is never negative (the torus itself lands at 0)
      const long q = 2 * static_cast<long>(cd) - 2 - h.degree;
      for (std::size_t p = 0; p <= dim; ++p) {
        CohomologySummand sm;
        sm.layer = w;
        sm.p = p;
        sm.s = h.degree;
        sm.q = static_cast<std::size_t>(q);
        sm.degree = p + sm.q;
        sm.group = intlat::power(h.group, binomial_sz(dim, p));
        if (!sm.group.is_trivial()) out.push_back(std::move(sm));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CohomologySummand& a, const CohomologySummand& b) {
    return std::tie(a.degree, a.layer, a.p) < std::tie(b.degree, b.layer, b.p);
  });
  return out;
}

BettiTable cohomology_groups(const LayerPoset& poset) {
  BettiTable t;
  t.ambient_rank = poset.ambient_rank;
  t.by_degree.assign(2 * poset.ambient_rank + 1, TorsionData{});
  t.summands = cohomology_summands(poset);
  for (const auto& sm : t.summands) {
    if (sm.degree >= t.by_degree.size())
      fail(errc::invalid_argument, "summand degree out of range");
    t.by_degree[sm.degree] = intlat::direct_sum(t.by_degree[sm.degree], sm.group);
  }
  return t;
}

std::vector<Int> poincare_polynomial(const LayerPoset& poset) {
  return cohomology_groups(poset).free_ranks();
}

E2Table e2_page(const LayerPoset& poset) {
  E2Table t;
  t.ambient_rank = poset.ambient_rank;
  for (auto& sm : cohomology_summands(poset)) {
    const std::size_t q = sm.q;
    const std::size_t p = sm.p;
    auto it = std::find_if(t.entries.begin(), t.entries.end(),
                           [&](const E2Entry& e) { return e.p == p && e.q == q; });
    if (it == t.entries.end()) {
      t.entries.push_back(E2Entry{p, q, TorsionData{}, {}});
      it = std::prev(t.entries.end());
    }
    it->group = intlat::direct_sum(it->group, sm.group);
    it->summands.push_back(std::move(sm));
  }
  std::sort(t.entries.begin(), t.entries.end(), [](const E2Entry& a, const E2Entry& b) {
    return std::tie(a.q, a.p) < std::tie(b.q, b.p);
  });
  return t;
}

std::vector<std::string> degeneration_mismatches(const BettiTable& betti, const E2Table& e2) {
  std::vector<std::string> bad;
  std::vector<TorsionData> diag(betti.by_degree.size());
  for (const auto& e : e2.entries) {
    const std::size_t k = e.p + e.q;
    if (k >= diag.size()) {
      bad.push_back("entry (" + std::to_string(e.p) + "," + std::to_string(e.q) +
                    ") beyond top degree");
      continue;
    }
    diag[k] = intlat::direct_sum(diag[k], e.group);
  }
  for (std::size_t k = 0; k < diag.size(); ++k)
    if (!(diag[k] == betti.by_degree[k]))
      bad.push_back("degree " + std::to_string(k) + ": page gives " + diag[k].str() +
                    ", assembly gives " + betti.by_degree[k].str());
  return bad;
}

}  // namespace torarr::addcoh

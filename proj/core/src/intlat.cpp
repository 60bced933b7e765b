#include "torarr/intlat.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace torarr::intlat {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols_hint) {
  std::size_t cols = cols_hint;
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(errc::wrong_length, "ragged row list");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> IntMatrix::row(std::size_t r) const {
  return std::vector<Int>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

void IntMatrix::append_row(const std::vector<Int>& v) {
  if (v.size() != cols_) fail(errc::wrong_length, "appended row has wrong length");
  a_.insert(a_.end(), v.begin(), v.end());
  ++rows_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(errc::wrong_length, "matrix product shape mismatch");
  IntMatrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) p.at(i, j) += x * rhs.at(k, j);
    }
  return p;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

bool IntMatrix::row_is_zero(std::size_t r) const {
  for (std::size_t j = 0; j < cols_; ++j)
    if (at(r, j) != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::addmul_row(std::size_t i, std::size_t j, const Int& m) {
  if (m == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) += m * at(j, c);
}

void IntMatrix::addmul_col(std::size_t i, std::size_t j, const Int& m) {
  if (m == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) at(r, i) += m * at(r, j);
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

Xgcd xgcd(const Int& a, const Int& b) {
  // invariant: r0 = x0*a + y0*b, r1 = x1*a + y1*b
  Int r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    r0 = r1, r1 = r2;
    Int x2 = x0 - q * x1;
    x0 = x1, x1 = x2;
    Int y2 = y0 - q * y1;
    y0 = y1, y1 = y2;
  }
  if (r0 < 0) {
    r0 = -r0, x0 = -x0, y0 = -y0;
  }
  return Xgcd{r0, x0, y0};
}

namespace {

// rows (p, i) <- [[x, y], [-b/g, a/g]] applied on the left: det 1, zeroes the
// entry that held b while the pivot entry becomes g.  One transform per line
// keeps intermediate entries polynomial where repeated remainder swaps blow up.
void combine_rows(IntMatrix& m, IntMatrix& u, std::size_t p, std::size_t i, const Xgcd& e,
                  const Int& a, const Int& b) {
  const Int ag = a / e.g, bg = b / e.g;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Int mp = m.at(p, c), mi = m.at(i, c);
    m.at(p, c) = e.x * mp + e.y * mi;
    m.at(i, c) = ag * mi - bg * mp;
  }
  for (std::size_t c = 0; c < u.cols(); ++c) {
    const Int up = u.at(p, c), ui = u.at(i, c);
    u.at(p, c) = e.x * up + e.y * ui;
    u.at(i, c) = ag * ui - bg * up;
  }
}

// columns (p, j), same transform applied on the right
void combine_cols(IntMatrix& m, IntMatrix& v, std::size_t p, std::size_t j, const Xgcd& e,
                  const Int& a, const Int& b) {
  const Int ag = a / e.g, bg = b / e.g;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Int mp = m.at(r, p), mj = m.at(r, j);
    m.at(r, p) = e.x * mp + e.y * mj;
    m.at(r, j) = ag * mj - bg * mp;
  }
  for (std::size_t r = 0; r < v.rows(); ++r) {
    const Int vp = v.at(r, p), vj = v.at(r, j);
    v.at(r, p) = e.x * vp + e.y * vj;
    v.at(r, j) = ag * vj - bg * vp;
  }
}

}  // namespace

HermiteForm hermite_row_form(const IntMatrix& a) {
  HermiteForm hf;
  hf.h = a;
  hf.u = IntMatrix::identity(a.rows());
  IntMatrix& m = hf.h;
  IntMatrix& u = hf.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    // smallest entry as pivot, then one pass of single-shot eliminations
    std::size_t best = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i) {
      if (m.at(i, c) == 0) continue;
      if (best == a.rows() || abs(m.at(i, c)) < abs(m.at(best, c))) best = i;
    }
    if (best == a.rows()) continue;  // column clear, no pivot
    m.swap_rows(r, best);
    u.swap_rows(r, best);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const Int b = m.at(i, c);
      if (b == 0) continue;
      const Int p = m.at(r, c);
      if (b % p == 0) {
        m.addmul_row(i, r, -(b / p));
        u.addmul_row(i, r, -(b / p));
      } else {
        combine_rows(m, u, r, i, xgcd(p, b), p, b);
      }
    }
    if (m.at(r, c) < 0) {
      m.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(m.at(i, c), m.at(r, c));
      m.addmul_row(i, r, -q);
      u.addmul_row(i, r, -q);
    }
    hf.pivot_cols.push_back(c);
    ++r;
  }
  hf.rank = r;
  return hf;
}

namespace {

// move the submatrix entry of smallest |value| (ties: lowest row, then column)
// to position (t, t); false when the submatrix is zero
bool select_pivot(IntMatrix& m, IntMatrix& u, IntMatrix& v, std::size_t t) {
  std::size_t bi = m.rows(), bj = m.cols();
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      if (m.at(i, j) == 0) continue;
      if (bi == m.rows() || abs(m.at(i, j)) < abs(m.at(bi, bj))) {
        bi = i;
        bj = j;
      }
    }
  if (bi == m.rows()) return false;
  m.swap_rows(t, bi);
  u.swap_rows(t, bi);
  m.swap_cols(t, bj);
  v.swap_cols(t, bj);
  return true;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm sf;
  sf.d = a;
  sf.u = IntMatrix::identity(a.rows());
  sf.v = IntMatrix::identity(a.cols());
  IntMatrix& m = sf.d;
  std::size_t t = 0;
  const std::size_t steps = std::min(a.rows(), a.cols());
  while (t < steps && select_pivot(m, sf.u, sf.v, t)) {
    while (true) {
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        const Int b = m.at(i, t);
        if (b == 0) continue;
        const Int p = m.at(t, t);
        if (b % p == 0) {
          m.addmul_row(i, t, -(b / p));
          sf.u.addmul_row(i, t, -(b / p));
        } else {
          combine_rows(m, sf.u, t, i, xgcd(p, b), p, b);
        }
      }
      // plain column eliminations leave the cleared column t untouched; a
      // combine mixes column j back into it below row t, forcing another pass
      bool dirty = false;
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        const Int b = m.at(t, j);
        if (b == 0) continue;
        const Int p = m.at(t, t);
        if (b % p == 0) {
          m.addmul_col(j, t, -(b / p));
          sf.v.addmul_col(j, t, -(b / p));
        } else {
          combine_cols(m, sf.v, t, j, xgcd(p, b), p, b);
          dirty = true;
        }
      }
      if (!dirty) break;
    }
    if (m.at(t, t) < 0) {
      m.negate_row(t);
      sf.u.negate_row(t);
    }
    ++t;
  }
  sf.rank = t;
  // enforce the divisibility chain d_i | d_{i+1}
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < sf.rank; ++i) {
      const Int a_ = m.at(i, i), b_ = m.at(i + 1, i + 1);
      if (b_ % a_ == 0) continue;
      changed = true;
      m.addmul_col(i, i + 1, 1);
      sf.v.addmul_col(i, i + 1, 1);
      // rows (i, i+1) hit with [[x, y], [-b/g, a/g]], det 1
      Xgcd e = xgcd(a_, b_);
      std::vector<Int> ri = m.row(i), rj = m.row(i + 1);
      std::vector<Int> ui = sf.u.row(i), uj = sf.u.row(i + 1);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        m.at(i, c) = e.x * ri[c] + e.y * rj[c];
        m.at(i + 1, c) = -(b_ / e.g) * ri[c] + (a_ / e.g) * rj[c];
      }
      for (std::size_t c = 0; c < sf.u.cols(); ++c) {
        sf.u.at(i, c) = e.x * ui[c] + e.y * uj[c];
        sf.u.at(i + 1, c) = -(b_ / e.g) * ui[c] + (a_ / e.g) * uj[c];
      }
      // clear the fill-in at (i, i+1)
      Int q = m.at(i, i + 1) / e.g;
      m.addmul_col(i + 1, i, -q);
      sf.v.addmul_col(i + 1, i, -q);
    }
  }
  return sf;
}

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> out;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i) out.push_back(d.at(i, i));
  return out;
}

IntMatrix hermite_basis(const IntMatrix& a) {
  HermiteForm hf = hermite_row_form(a);
  IntMatrix b(hf.rank, a.cols());
  for (std::size_t i = 0; i < hf.rank; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) b.at(i, j) = hf.h.at(i, j);
  return b;
}

IntMatrix kernel_rows(const IntMatrix& a) {
  HermiteForm hf = hermite_row_form(a);
  IntMatrix k(a.rows() - hf.rank, a.rows());
  for (std::size_t i = hf.rank; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) k.at(i - hf.rank, j) = hf.u.at(i, j);
  return hermite_basis(k);
}

std::pair<IntMatrix, IntMatrix> kernel_and_saturation(const IntMatrix& a) {
  IntMatrix kernel = kernel_rows(a);
  // saturation = integer vectors orthogonal to the column kernel
  IntMatrix ck = kernel_rows(a.transpose());
  IntMatrix sat = kernel_rows(ck.transpose());
  return {kernel, sat};
}

TorsionData quotient_invariants(std::size_t ambient_rank, const IntMatrix& sub) {
  if (sub.rows() > 0 && sub.cols() != ambient_rank)
    fail(errc::wrong_length, "sublattice rows must have ambient length");
  TorsionData td;
  if (sub.rows() == 0) {
    td.free_rank = ambient_rank;
    return td;
  }
  SmithForm sf = smith_normal_form(sub);
  td.free_rank = ambient_rank - sf.rank;
  for (const Int& d : sf.diagonal())
    if (d > 1) td.invariant_factors.push_back(d);
  return td;
}

std::size_t rank_of(const IntMatrix& a) { return hermite_row_form(a).rank; }

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) fail(errc::wrong_length, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && m.at(s, k) == 0) ++s;
      if (s == n) return 0;
      m.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::optional<std::vector<Int>> row_coordinates(const IntMatrix& echelon, const std::vector<Int>& v) {
  if (v.size() != echelon.cols() && echelon.rows() > 0)
    fail(errc::wrong_length, "vector length does not match lattice ambient");
  std::vector<Int> rest = v;
  std::vector<Int> coords(echelon.rows());
  for (std::size_t i = 0; i < echelon.rows(); ++i) {
    std::size_t p = 0;
    while (p < echelon.cols() && echelon.at(i, p) == 0) ++p;
    if (p == echelon.cols()) fail(errc::invalid_argument, "zero row in echelon basis");
    if (rest[p] % echelon.at(i, p) != 0) return std::nullopt;
    coords[i] = rest[p] / echelon.at(i, p);
    if (coords[i] != 0)
      for (std::size_t j = p; j < echelon.cols(); ++j) rest[j] -= coords[i] * echelon.at(i, j);
  }
  for (const Int& x : rest)
    if (x != 0) return std::nullopt;
  return coords;
}

Int TorsionData::torsion_order() const {
  Int o = 1;
  for (const Int& d : invariant_factors) o *= d;
  return o;
}

std::string TorsionData::str() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const Int& d : invariant_factors) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

namespace {

std::map<Int, std::size_t> factorize(Int n) {
  std::map<Int, std::size_t> f;
  for (Int p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
  return f;
}

}  // namespace

TorsionData direct_sum(const TorsionData& x, const TorsionData& y) {
  TorsionData out;
  out.free_rank = x.free_rank + y.free_rank;
  // primary decomposition, then k-th largest exponents recombine into the
  // k-th invariant factor from the top of the chain
  std::map<Int, std::vector<std::size_t>> primary;
  for (const auto* side : {&x, &y})
    for (const Int& d : side->invariant_factors)
      for (const auto& [p, e] : factorize(d)) primary[p].push_back(e);
  std::size_t chain = 0;
  for (auto& [p, es] : primary) {
    std::sort(es.begin(), es.end(), std::greater<>());
    chain = std::max(chain, es.size());
  }
  std::vector<Int> factors(chain, Int(1));
  for (const auto& [p, es] : primary)
    for (std::size_t k = 0; k < es.size(); ++k) {
      Int pw = 1;
      for (std::size_t e = 0; e < es[k]; ++e) pw *= p;
      factors[chain - 1 - k] *= pw;
    }
  out.invariant_factors = std::move(factors);
  return out;
}

TorsionData power(const TorsionData& x, std::size_t n) {
  TorsionData out;
  if (n == 0) return out;
  out.free_rank = x.free_rank * n;
  for (const Int& d : x.invariant_factors)
    out.invariant_factors.insert(out.invariant_factors.end(), n, d);
  std::sort(out.invariant_factors.begin(), out.invariant_factors.end());
  return out;
}

}  // namespace torarr::intlat

namespace torarr {

const char* errc_name(errc c) {
  switch (c) {
    case errc::wrong_length: return "WrongLength";
    case errc::zero_character: return "ZeroCharacter";
    case errc::empty_character_list: return "EmptyCharacterList";
    case errc::inconsistent_constants: return "InconsistentConstants";
    case errc::nested_atoms: return "NestedAtoms";
    case errc::not_comparable: return "NotComparable";
    case errc::empty_intersection: return "EmptyIntersection";
    case errc::not_corank1: return "NotCorank1";
    case errc::not_divisorial: return "NotDivisorial";
    case errc::degree_mixed: return "DegreeMixed";
    case errc::basis_defect: return "BasisDefect";
    case errc::parse_error: return "ParseError";
    case errc::unknown_command: return "UnknownCommand";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace torarr

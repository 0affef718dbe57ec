#include "bhk/exact.hpp"

#include "bhk/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace bhk {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw Error(ErrorKind::dimension, "ragged matrix rows");
    std::copy(rows[i].begin(), rows[i].end(),
              m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
  return IntVector(first, first + static_cast<std::ptrdiff_t>(cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::scaled(const Integer& k) const {
  IntMatrix out = *this;
  for (auto& x : out.data_) x *= k;
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorKind::dimension, "matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size())
    throw Error(ErrorKind::dimension, "matrix-vector shape mismatch");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << to_string(m.row(i));
  }
  return os << ']';
}

RationalVector RationalVector::canonical() const {
  if (denominator <= 0)
    throw Error(ErrorKind::domain, "rational vector needs a positive denominator");
  Integer g = denominator;
  for (const auto& x : numerators) g = gcd(g, x);
  RationalVector out{numerators, denominator / g};
  for (auto& x : out.numerators) x /= g;
  return out;
}

Rational RationalVector::at(std::size_t i) const {
  return Rational(numerators.at(i), denominator);
}

Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += (m < 0 ? -m : m);
  return r;
}

Integer floor_div(const Integer& a, const Integer& m) {
  Integer q = a / m;
  if ((a % m != 0) && ((a < 0) != (m < 0))) --q;
  return q;
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  Integer l = boost::multiprecision::lcm(a, b);
  return l < 0 ? Integer(-l) : l;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::dimension, "dot product length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r) << '/' << denominator(r);
  return os.str();
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square())
    throw Error(ErrorKind::dimension, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

ScaledInverse scaled_inverse(const IntMatrix& m) {
  if (!m.is_square())
    throw Error(ErrorKind::dimension, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  // Gauss-Jordan over Q on [m | I].
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw Error(ErrorKind::singular_matrix, "matrix is singular");
    std::swap(a[p], a[c]);
    const Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  Integer d = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d = lcm(d, denominator(a[i][n + j]));
  IntMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational x = a[i][n + j] * d;
      b(i, j) = numerator(x);
    }
  return {d, b};
}

namespace {

struct Xgcd {
  Integer g, x, y;  // g = x*a + y*b, g >= 0
};

Xgcd xgcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace

IntMatrix hermite_form(const std::vector<IntVector>& gens,
                       const Integer& modulus, std::size_t dim) {
  if (modulus < 1)
    throw Error(ErrorKind::domain, "lattice modulus must be positive");
  std::vector<IntVector> vecs;
  vecs.reserve(gens.size() + dim);
  for (const auto& g : gens) {
    if (g.size() != dim)
      throw Error(ErrorKind::dimension, "generator length mismatch");
    IntVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = floor_mod(g[i], modulus);
    if (!is_zero(v)) vecs.push_back(std::move(v));
  }

  IntMatrix h(dim, dim);
  for (std::size_t jj = dim; jj-- > 0;) {
    // Earlier columns are reduced mod `modulus`, so modulus * e_jj enters here.
    IntVector me(dim);
    me[jj] = modulus;
    vecs.push_back(std::move(me));
    // Fold every column-jj entry into a single pivot vector.
    std::ptrdiff_t pivot = -1;
    for (std::size_t k = 0; k < vecs.size(); ++k) {
      if (vecs[k][jj] == 0) continue;
      if (pivot < 0) {
        pivot = static_cast<std::ptrdiff_t>(k);
        continue;
      }
      auto& p = vecs[static_cast<std::size_t>(pivot)];
      auto& v = vecs[k];
      const auto [g, x, y] = xgcd(p[jj], v[jj]);
      const Integer pa = p[jj] / g, va = v[jj] / g;
      for (std::size_t c = 0; c <= jj; ++c) {
        Integer np = x * p[c] + y * v[c];
        Integer nv = va * p[c] - pa * v[c];
        p[c] = std::move(np);
        v[c] = std::move(nv);
      }
    }
    IntVector piv = std::move(vecs[static_cast<std::size_t>(pivot)]);
    vecs.erase(vecs.begin() + pivot);
    if (piv[jj] < 0)
      for (auto& x : piv) x = -x;
    for (std::size_t c = 0; c < jj; ++c) piv[c] = floor_mod(piv[c], modulus);
    for (std::size_t c = 0; c < dim; ++c) h(jj, c) = piv[c];

    std::vector<IntVector> rest;
    rest.reserve(vecs.size());
    for (auto& v : vecs) {
      for (std::size_t c = 0; c < jj; ++c) v[c] = floor_mod(v[c], modulus);
      if (!is_zero(v)) rest.push_back(std::move(v));
    }
    vecs = std::move(rest);
  }

  // Reduce below-diagonal entries into [0, h(j, j)).
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j-- > 0;) {
      const Integer q = floor_div(h(i, j), h(j, j));
      if (q == 0) continue;
      for (std::size_t c = 0; c <= j; ++c) h(i, c) -= q * h(j, c);
    }
  return h;
}

bool lattice_contains(const IntMatrix& hnf, IntVector v) {
  const std::size_t n = hnf.rows();
  if (v.size() != n) throw Error(ErrorKind::dimension, "vector length mismatch");
  for (std::size_t j = n; j-- > 0;) {
    if (v[j] % hnf(j, j) != 0) return false;
    const Integer c = v[j] / hnf(j, j);
    if (c == 0) continue;
    for (std::size_t k = 0; k <= j; ++k) v[k] -= c * hnf(j, k);
  }
  return true;
}

Integer lattice_determinant(const IntMatrix& hnf) {
  Integer p = 1;
  for (std::size_t i = 0; i < hnf.rows(); ++i) p *= hnf(i, i);
  return p;
}

IntMatrix congruence_rows(const IntMatrix& hnf, const Integer& modulus) {
  // v = H^T c lies in the lattice iff c = H^{-T} v is integral, i.e. iff
  // modulus * H^{-T} v == 0 (mod modulus). modulus * H^{-1} is integral
  // because modulus * Z^n is contained in the lattice.
  const auto inv = scaled_inverse(hnf);
  IntMatrix k = inv.b.transpose();
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) {
      const Integer num = k(i, j) * modulus;
      if (num % inv.d != 0)
        throw Error(ErrorKind::domain, "lattice does not contain modulus * Z^n");
      k(i, j) = num / inv.d;
    }
  return k;
}

IntMatrix solve_congruences(const std::vector<IntVector>& rows,
                            const Integer& modulus, std::size_t dim) {
  // The solution set is modulus times the dual of span(rows) + modulus*Z^n.
  const IntMatrix span = hermite_form(rows, modulus, dim);
  const IntMatrix dual = congruence_rows(span, modulus);
  return hermite_form(dual.row_list(), modulus, dim);
}

IntMatrix restrict_lattice(const IntMatrix& hnf,
                           const std::vector<IntVector>& rows,
                           const Integer& modulus,
                           const Integer& lattice_modulus) {
  const std::size_t n = hnf.rows();
  // v = sum_i c_i H_i; condition r . v = (H r) . c.
  std::vector<IntVector> coeff_rows;
  coeff_rows.reserve(rows.size());
  for (const auto& r : rows) coeff_rows.push_back(hnf * r);
  const IntMatrix coeffs = solve_congruences(coeff_rows, modulus, n);
  const IntMatrix image = coeffs * hnf;
  return hermite_form(image.row_list(), lattice_modulus, n);
}

bool RankAccumulator::add(SparseRow row) {
  for (auto it = row.begin(); it != row.end();)
    it = it->second == 0 ? row.erase(it) : std::next(it);
  while (!row.empty()) {
    const auto [lead, coeff] = *row.begin();
    auto p = pivots_.find(lead);
    if (p == pivots_.end()) {
      const Rational inv = 1 / coeff;
      for (auto& [c, x] : row) x *= inv;
      pivots_.emplace(lead, std::move(row));
      return true;
    }
    const Rational f = coeff;
    for (const auto& [c, x] : p->second) {
      auto& y = row[c];
      y -= f * x;
      if (y == 0) row.erase(c);
    }
  }
  return false;
}

std::size_t rational_rank(const std::vector<std::vector<Rational>>& m) {
  RankAccumulator acc;
  for (const auto& r : m) {
    RankAccumulator::SparseRow row;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[j] != 0) row.emplace(j, r[j]);
    acc.add(std::move(row));
  }
  return acc.rank();
}

}  // namespace bhk

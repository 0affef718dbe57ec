#pragma once

// Exact integer and rational linear algebra.
//
// Lattice convention used throughout the library: a full-rank lattice
// L in Z^n is stored as an n x n basis whose ROWS are basis vectors, in
// lower-triangular Hermite normal form:
//
//   H(i, j) == 0            for j > i
//   H(i, i) >  0
//   0 <= H(i, j) < H(j, j)  for j < i
//
// Every lattice handled here contains m * Z^n for some modulus m, so the
// diagonal entries divide m.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace bhk {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using IntVector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const IntVector& diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;
  std::vector<IntVector> row_list() const;

  IntMatrix transpose() const;
  IntMatrix scaled(const Integer& k) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// A vector of rationals over one common positive denominator.
struct RationalVector {
  IntVector numerators;
  Integer denominator{1};

  /// Divides out the common gcd of numerators and denominator.
  RationalVector canonical() const;
  Rational at(std::size_t i) const;

  friend bool operator==(const RationalVector& a, const RationalVector& b) {
    auto ca = a.canonical();
    auto cb = b.canonical();
    return ca.numerators == cb.numerators && ca.denominator == cb.denominator;
  }
};

// Small integer helpers.
Integer floor_mod(const Integer& a, const Integer& m);
Integer floor_div(const Integer& a, const Integer& m);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);
std::string to_string(const Rational& r);
std::string to_string(const IntVector& v);

/// Determinant by Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& m);

struct ScaledInverse {
  Integer d;    // smallest positive integer with d * m^{-1} integral
  IntMatrix b;  // d * m^{-1}
};

/// Smallest d > 0 with d * m^{-1} integral, together with b = d * m^{-1}.
ScaledInverse scaled_inverse(const IntMatrix& m);

/// Canonical basis of span(gens) + modulus * Z^dim (see file comment).
IntMatrix hermite_form(const std::vector<IntVector>& gens,
                       const Integer& modulus, std::size_t dim);

/// Canonical basis of { s : rows[k] . s == 0 (mod modulus) for all k }.
IntMatrix solve_congruences(const std::vector<IntVector>& rows,
                            const Integer& modulus, std::size_t dim);

/// Rank over Q.
std::size_t rational_rank(const std::vector<std::vector<Rational>>& m);

// Lattice queries on hermite_form output.
bool lattice_contains(const IntMatrix& hnf, IntVector v);
Integer lattice_determinant(const IntMatrix& hnf);

/// Rows K with lattice == { v : K v == 0 (mod modulus) }. The lattice must
/// contain modulus * Z^n.
IntMatrix congruence_rows(const IntMatrix& hnf, const Integer& modulus);

/// Sublattice { v in lattice : rows . v == 0 (mod modulus) }, canonical at
/// `lattice_modulus` (which must satisfy lattice_modulus * Z^n in result).
IntMatrix restrict_lattice(const IntMatrix& hnf,
                           const std::vector<IntVector>& rows,
                           const Integer& modulus,
                           const Integer& lattice_modulus);

// Incremental sparse Gaussian elimination over Q. Rows are added one at a
// time and reduced against existing pivots; rank() is the number of
// independent rows seen.
class RankAccumulator {
 public:
  using SparseRow = std::map<std::size_t, Rational>;

  /// Returns true when the row was independent of the previous ones.
  bool add(SparseRow row);
  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivots_;  // keyed by leading column
};

}  // namespace bhk

#pragma once

#include "bhk/exact.hpp"

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace bhk {

enum class AtomicKind { fermat, loop, chain };

std::string to_string(AtomicKind kind);

/// One summand of an invertible potential.
///
///   fermat: x^a
///   loop:   x_1^{a_1} x_2 + ... + x_{m-1}^{a_{m-1}} x_m + x_m^{a_m} x_1
///   chain:  x_1^{a_1} x_2 + ... + x_{m-1}^{a_{m-1}} x_m + x_m^{a_m}
///
/// `variables[k]` is the global index of x_{k+1}; `exponents[k]` is a_{k+1}.
struct AtomicPiece {
  AtomicKind kind = AtomicKind::fermat;
  std::vector<std::size_t> variables;
  IntVector exponents;

  /// Order of the diagonal symmetry group of this summand alone.
  Integer aut_order() const;

  friend bool operator==(const AtomicPiece&, const AtomicPiece&) = default;
};

/// An invertible quasihomogeneous polynomial sum_i prod_j x_j^{a_ij}.
///
/// Weights and degree are kept unreduced (q = B e with the minimal d), which
/// is the normalization every group and Hodge computation uses. The reduced
/// pair only labels the weighted projective space.
class InvertiblePotential {
 public:
  const IntMatrix& exponents() const noexcept { return a_; }
  const IntMatrix& scaled_inverse() const noexcept { return b_; }
  const Integer& degree() const noexcept { return d_; }
  const IntVector& weights() const noexcept { return q_; }
  const IntVector& reduced_weights() const noexcept { return reduced_q_; }
  const Integer& reduced_degree() const noexcept { return reduced_d_; }
  std::size_t num_vars() const noexcept { return a_.cols(); }
  bool calabi_yau() const noexcept { return calabi_yau_; }
  bool gorenstein() const noexcept { return gorenstein_; }
  const std::vector<AtomicPiece>& atomic_pieces() const noexcept {
    return pieces_;
  }

  /// Human-readable polynomial, e.g. "x1^8 + x2^8 + x4*x5^4".
  std::string to_string(char var = 'x') const;

  friend bool operator==(const InvertiblePotential& a,
                         const InvertiblePotential& b) {
    return a.a_ == b.a_;
  }

 private:
  friend InvertiblePotential build_potential(const IntMatrix& a);

  IntMatrix a_;
  IntMatrix b_;
  Integer d_;
  IntVector q_;
  IntVector reduced_q_;
  Integer reduced_d_;
  bool calabi_yau_ = false;
  bool gorenstein_ = false;
  std::vector<AtomicPiece> pieces_;
};

/// Validates invertibility, positive weights and the atomic-type
/// decomposition. Throws Error(condition_violation) naming the failed
/// condition.
InvertiblePotential build_potential(const IntMatrix& a);

/// Splits an exponent matrix into Fermat, loop and chain summands ordered by
/// smallest variable index. Throws Error(condition_violation) if the rows do
/// not match those patterns.
std::vector<AtomicPiece> decompose_atomic(const IntMatrix& a);
std::vector<AtomicPiece> decompose_atomic(const InvertiblePotential& p);

InvertiblePotential transpose_potential(const InvertiblePotential& p);

/// sum_i y_i^degree.
InvertiblePotential fermat_potential(const Integer& degree, std::size_t nvars);

/// z^e by repeated squaring; negative e inverts.
std::complex<double> integer_power(std::complex<double> z, long long e);

std::complex<double> evaluate_numeric(const InvertiblePotential& p,
                                      std::span<const std::complex<double>> point);

}  // namespace bhk

#pragma once

#include "bhk/exact.hpp"
#include "bhk/potential.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bhk {

/// A diagonal torsion element: coordinate i is exp(2 pi i * num_i / den).
///
/// Always stored canonically: 0 <= num_i < den and gcd(num..., den) == 1,
/// so the identity is all zeros over denominator 1.
class PhaseVector {
 public:
  PhaseVector() = default;
  PhaseVector(IntVector numerators, Integer denominator);

  static PhaseVector identity(std::size_t n);

  std::size_t size() const noexcept { return num_.size(); }
  const IntVector& numerators() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }
  bool is_identity() const noexcept { return den_ == 1; }

  /// Angle of coordinate i as a rational in [0, 1).
  Rational phase(std::size_t i) const { return Rational(num_.at(i), den_); }

  /// Numerators over a multiple D of denominator().
  IntVector numerators_at(const Integer& d) const;

  /// Group product (angles add).
  PhaseVector operator*(const PhaseVector& other) const;
  PhaseVector inverse() const;
  PhaseVector restricted(std::span<const std::size_t> indices) const;

  /// "(3,3,6,8,4)/24"
  std::string to_string() const;

  friend bool operator==(const PhaseVector&, const PhaseVector&) = default;
  friend bool operator<(const PhaseVector& a, const PhaseVector& b);

 private:
  IntVector num_;
  Integer den_{1};
};

/// A finite subgroup of the diagonal torus (Q/Z)^n.
///
/// Represented by its preimage lattice L = { v in Z^n : v / D in group } at
/// the group exponent D (the smallest D with D * group == 0). L contains
/// D * Z^n and is kept in Hermite normal form, so two groups are equal iff
/// their (D, L) pairs are equal.
class PhaseGroup {
 public:
  PhaseGroup() = default;

  static PhaseGroup trivial(std::size_t dim);
  static PhaseGroup generated_by(std::size_t dim, const std::vector<PhaseVector>& gens);
  /// Group whose preimage at denominator `den` is span(rows) + den * Z^dim.
  static PhaseGroup from_lattice(const std::vector<IntVector>& rows,
                                 const Integer& den, std::size_t dim);

  std::size_t dimension() const noexcept { return dim_; }
  const Integer& denominator() const noexcept { return den_; }
  const IntMatrix& lattice() const noexcept { return lattice_; }
  const Integer& order() const noexcept { return order_; }

  /// Preimage lattice at a multiple of denominator().
  IntMatrix lattice_at(const Integer& d) const;

  bool contains(const PhaseVector& g) const;
  bool contains(const PhaseGroup& h) const;

  /// Nontrivial rows of the canonical lattice basis, as phases.
  std::vector<PhaseVector> generators() const;

  PhaseGroup join(const PhaseGroup& other) const;

  /// All elements, sorted. Throws Error(resource_limit) above `limit`.
  std::vector<PhaseVector> elements(std::uint64_t limit = 100000) const;

  std::string to_string() const;

  friend bool operator==(const PhaseGroup&, const PhaseGroup&) = default;

 private:
  std::size_t dim_ = 0;
  Integer den_{1};
  IntMatrix lattice_;
  Integer order_{1};
};

/// A potential with a group J <= G <= SL. The quotient G/J is implicit.
struct OrbifoldDescriptor {
  InvertiblePotential potential;
  PhaseGroup group;
  PhaseGroup j;
  Integer quotient_order;  // |G| / |J|
};

PhaseGroup aut_group(const InvertiblePotential& p);
PhaseGroup j_group(const InvertiblePotential& p);
PhaseGroup sl_group(const InvertiblePotential& p);

/// Explicit generators of the symmetry group of one atomic summand, over the
/// summand's own variables in piece order.
std::vector<PhaseVector> atomic_generators(const AtomicPiece& piece);

/// G = span(gens, J). Throws Error(invalid_symmetry) if a generator does not
/// preserve every monomial, Error(sl_violation) if G is not inside SL.
OrbifoldDescriptor build_orbifold(const InvertiblePotential& p,
                                  const std::vector<PhaseVector>& gens);

/// sum_i exps_i * phase_i (mod 1); zero iff the monomial is invariant.
Rational monomial_character(const PhaseVector& g, std::span<const Integer> exps);

/// Dual group on the transposed potential: words prod (rho_i^T)^{s_i} over
/// all G-invariant monomials prod x_i^{s_i}.
PhaseGroup dual_group(const OrbifoldDescriptor& orb);

/// (A^T, G^T).
OrbifoldDescriptor mirror_orbifold(const OrbifoldDescriptor& orb);

}  // namespace bhk

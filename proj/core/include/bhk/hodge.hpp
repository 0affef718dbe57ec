#pragma once

#include "bhk/exact.hpp"
#include "bhk/potential.hpp"
#include "bhk/symmetry.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace bhk {

enum class RestrictionKind {
  zero,          // every monomial vanishes: the whole coordinate stratum
  empty,         // one surviving variable and a nonzero form: no zeros
  points,        // two surviving variables
  hypersurface,  // three or more
};

std::string to_string(RestrictionKind kind);

/// F restricted to the coordinate subspace {x_j = 0 for j not in I}.
struct RestrictedPotential {
  std::vector<std::size_t> variables;  // I, sorted
  std::vector<IntVector> monomials;    // rows of A supported in I, over I
  IntVector weights;                   // q_i for i in I (unreduced)
  Integer degree;
  RestrictionKind kind = RestrictionKind::zero;

  std::size_t size() const noexcept { return variables.size(); }
};

RestrictedPotential restrict_potential(const InvertiblePotential& p,
                                       std::span<const std::size_t> fixed);

/// A torsion element of G * C^* whose fixed locus meets the hypersurface.
struct Sector {
  PhaseVector gamma;
  std::vector<std::size_t> fixed_indices;
  RestrictedPotential restriction;
  Rational age;  // on X: the ambient age, less the normal angle when F|_I = 0
};

/// Sum of the angles of g in [0, 1).
Rational age(const PhaseVector& g);

/// Sectors of [X_A / G], sorted by gamma (identity first). Throws
/// Error(resource_limit) when |G| exceeds `limit`.
std::vector<Sector> enumerate_sectors(const OrbifoldDescriptor& orb,
                                      std::uint64_t limit = 100000);

/// Admissible characters: a monomial x^s over the restricted variables is
/// kept iff sum_i s_i * characters[k][i] == targets[k] (mod modulus) for
/// every k.
struct CharacterConstraint {
  Integer modulus{1};
  std::vector<IntVector> characters;
  IntVector targets;

  static CharacterConstraint trivial();

  /// Invariance of monomial * Omega restricted to `fixed`, for every
  /// canonical generator of g.
  static CharacterConstraint twisted(const PhaseGroup& g,
                                     std::span<const std::size_t> fixed);

  bool admits(std::span<const Integer> exps) const;
  /// Target of generator k as a rational in [0, 1).
  Rational target(std::size_t k) const { return Rational(targets.at(k), modulus); }
};

/// Dimension of the weighted-degree `delta` piece of the Jacobian ring of the
/// restricted potential, cut down to the admissible characters.
Integer graded_jacobian_dim(const RestrictedPotential& r, const Integer& delta,
                            const CharacterConstraint& c);

class HodgeDiamond {
 public:
  using Bidegree = std::pair<Rational, Rational>;
  using Entry = std::tuple<Rational, Rational, Integer>;

  HodgeDiamond() = default;
  explicit HodgeDiamond(Integer dimension) : dimension_(std::move(dimension)) {}

  const Integer& dimension() const noexcept { return dimension_; }
  const std::map<Bidegree, Integer>& entries() const noexcept { return h_; }

  void add(const Rational& p, const Rational& q, const Integer& h);
  Integer at(const Rational& p, const Rational& q) const;

  /// Entries sorted by (p + q, p).
  std::vector<Entry> ordered() const;
  /// Dimensions of total degree p + q.
  std::map<Rational, Integer> total_degrees() const;

  HodgeDiamond shifted(const Rational& s, const Integer& dimension) const;
  HodgeDiamond& operator+=(const HodgeDiamond& other);

  bool conjugation_symmetric() const;
  /// h^{p,q} == h^{D-p,D-q}.
  bool serre_symmetric() const;

  /// Rhombus layout for integral diamonds, a flat list otherwise.
  std::string to_string() const;

  friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;

 private:
  Integer dimension_{0};
  std::map<Bidegree, Integer> h_;
};

/// G-invariant cohomology of the sector's fixed locus (unshifted).
HodgeDiamond invariant_hypersurface_diamond(const Sector& sector,
                                            const OrbifoldDescriptor& orb);

/// Chen-Ruan diamond: sum over sectors of invariant diamonds shifted by age.
HodgeDiamond cr_diamond(const OrbifoldDescriptor& orb, std::uint64_t limit = 100000);

struct MirrorCheck {
  HodgeDiamond diamond;
  HodgeDiamond mirror_diamond;
  bool passed = false;
  std::vector<std::string> mismatches;
};

/// Compares h^{p,q} of orb against h^{D-p,q} of its BHK mirror.
MirrorCheck mirror_check(const OrbifoldDescriptor& orb, std::uint64_t limit = 100000);

}  // namespace bhk

#pragma once

#include "bhk/exact.hpp"
#include "bhk/potential.hpp"
#include "bhk/symmetry.hpp"

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace bhk {

/// A monomial rational map from the degree-`source_degree` Fermat
/// hypersurface: x_j = prod_k y_k^{exponents(j, k)}. Entries may be negative.
struct MonomialMap {
  IntMatrix exponents;
  Integer source_degree;
  InvertiblePotential target;
};

/// phi_{scale B} (or phi_{scale B^T} onto the transposed potential).
MonomialMap shioda_map(const InvertiblePotential& p, bool transposed,
                       const Integer& scale = 1);

/// Exponent matrix of x = outer(inner(y)).
IntMatrix compose_exponents(const IntMatrix& outer, const IntMatrix& inner);

PhaseVector pushforward(const MonomialMap& map, const PhaseVector& g);
PhaseGroup pushforward(const MonomialMap& map, const PhaseGroup& g);

/// All source phases h/N (N = source degree) whose pushforward lies in g.
PhaseGroup preimage_group(const MonomialMap& map, const PhaseGroup& g);

/// s^T B h.
Integer pairing(std::span<const Integer> s, std::span<const Integer> h,
                const IntMatrix& b);

/// pr of { s : <s, h>_B in modulus * Z for every h in pr^{-1}(h_group) },
/// where pr(v) = v / modulus.
PhaseGroup perp_group(const PhaseGroup& h_group, const IntMatrix& b,
                      const Integer& modulus);

/// A Fermat quotient X_{N I} / (H / J_{F_{N I}}), recorded by (N, H).
struct BirationalModel {
  Integer fermat_degree;
  PhaseGroup quotient_group;

  /// The same quotient presented over the smallest Fermat degree: if H
  /// contains all of mu_c^n, X_{NI}/H equals X_{(N/c)I}/(phi_{cI})_* H.
  BirationalModel reduced() const;

  /// Generators of H modulo J_{F_{NI}}, i.e. the canonical generators with
  /// the diagonal (1,...,1)/N generator factored out where possible.
  std::vector<PhaseVector> effective_generators() const;

  friend bool operator==(const BirationalModel&, const BirationalModel&) = default;
};

enum class ModelSide { direct, mirror };

BirationalModel birational_model(const OrbifoldDescriptor& orb, ModelSide side,
                                 const Integer& scale = 1);

struct ComparisonReport {
  bool groups_equal = false;
  bool same_weights = false;       // both potentials live in one weighted space
  bool models_equal = false;       // mirror-side models agree at degree d*d'
  bool outside_exemplified_regime = false;  // equal groups, different spaces
  BirationalModel mirror_a;        // at Fermat degree d*d'
  BirationalModel mirror_b;
  std::optional<BirationalModel> certificate;  // reduced common model
};

/// Mirror-side comparison of two orbifolds on the same number of variables.
ComparisonReport compare_mirrors(const OrbifoldDescriptor& a,
                                 const OrbifoldDescriptor& b);

/// Coordinate-wise monomial evaluation. Throws Error(domain) when a zero
/// coordinate is raised to a negative power.
std::vector<std::complex<double>> evaluate_map_numeric(
    const MonomialMap& map, std::span<const std::complex<double>> point);

}  // namespace bhk

#include "bhk/shioda.hpp"

#include "bhk/error.hpp"

namespace bhk {

MonomialMap shioda_map(const InvertiblePotential& p, bool transposed, const Integer& scale) {
  if (scale < 1) throw Error(ErrorKind::domain, "Shioda scale must be positive");
  const IntMatrix& b = p.scaled_inverse();
  if (transposed)
    return {b.transpose().scaled(scale), p.degree() * scale, transpose_potential(p)};
  return {b.scaled(scale), p.degree() * scale, p};
}

IntMatrix compose_exponents(const IntMatrix& outer, const IntMatrix& inner) {
  return outer * inner;
}

PhaseVector pushforward(const MonomialMap& map, const PhaseVector& g) {
  if (g.size() != map.exponents.cols())
    throw Error(ErrorKind::dimension, "phase vector does not live on the map's source");
  return PhaseVector(map.exponents * g.numerators(), g.denominator());
}

PhaseGroup pushforward(const MonomialMap& map, const PhaseGroup& g) {
  if (g.dimension() != map.exponents.cols())
    throw Error(ErrorKind::dimension, "group does not live on the map's source");
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < g.dimension(); ++i)
    rows.push_back(map.exponents * g.lattice().row(i));
  return PhaseGroup::from_lattice(rows, g.denominator(), map.exponents.rows());
}

PhaseGroup preimage_group(const MonomialMap& map, const PhaseGroup& g) {
  const std::size_t n = map.exponents.cols();
  if (g.dimension() != map.exponents.rows())
    throw Error(ErrorKind::dimension, "group does not live on the map's target");
  const Integer& src = map.source_degree;
  const Integer l = lcm(src, g.denominator());
  // h/src maps into g  <=>  K * (l/src) * M * h == 0 (mod l).
  const IntMatrix k = congruence_rows(g.lattice_at(l), l);
  const IntMatrix r = (k * map.exponents).scaled(l / src);
  const IntMatrix sol = solve_congruences(r.row_list(), l, n);
  return PhaseGroup::from_lattice(sol.row_list(), src, n);
}

Integer pairing(std::span<const Integer> s, std::span<const Integer> h, const IntMatrix& b) {
  if (s.size() != b.rows() || h.size() != b.cols())
    throw Error(ErrorKind::dimension, "pairing shape mismatch");
  const IntVector bh = b * IntVector(h.begin(), h.end());
  return dot(s, bh);
}

PhaseGroup perp_group(const PhaseGroup& h_group, const IntMatrix& b, const Integer& modulus) {
  const std::size_t n = h_group.dimension();
  if (b.rows() != n || b.cols() != n)
    throw Error(ErrorKind::dimension, "pairing matrix shape mismatch");
  const IntMatrix lifted = h_group.lattice_at(modulus);
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(b * lifted.row(i));
  const IntMatrix sol = solve_congruences(rows, modulus, n);
  return PhaseGroup::from_lattice(sol.row_list(), modulus, n);
}

BirationalModel BirationalModel::reduced() const {
  const std::size_t n = quotient_group.dimension();
  const Integer& big = fermat_degree;
  const IntMatrix lat = quotient_group.lattice_at(big);
  const IntMatrix k = congruence_rows(lat, big);
  // Smallest t_i with t_i e_i in the lattice; mu_c^n lies in H iff
  // lcm(t_i) divides N / c.
  Integer small = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer t = 1;
    for (std::size_t r = 0; r < k.rows(); ++r) t = lcm(t, big / gcd(big, k(r, i)));
    small = lcm(small, t);
  }
  if (small == big) return *this;
  return {small, PhaseGroup::from_lattice(lat.row_list(), small, n)};
}

std::vector<PhaseVector> BirationalModel::effective_generators() const {
  const std::size_t n = quotient_group.dimension();
  const PhaseVector diag(IntVector(n, 1), fermat_degree);
  if (!quotient_group.contains(diag) || quotient_group.denominator() != fermat_degree)
    return quotient_group.generators();
  // With (1,...,1)/N in H, the elements with trivial last coordinate form a
  // complement of J; the leading n-1 Hermite rows generate it.
  const IntMatrix& lat = quotient_group.lattice();
  std::vector<PhaseVector> out;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    PhaseVector g(lat.row(i), fermat_degree);
    if (!g.is_identity()) out.push_back(std::move(g));
  }
  return out;
}

BirationalModel birational_model(const OrbifoldDescriptor& orb, ModelSide side,
                                 const Integer& scale) {
  const MonomialMap map = shioda_map(orb.potential, false, scale);
  PhaseGroup h = preimage_group(map, orb.group);
  if (side == ModelSide::direct) return {map.source_degree, std::move(h)};
  return {map.source_degree, perp_group(h, map.exponents, map.source_degree)};
}

ComparisonReport compare_mirrors(const OrbifoldDescriptor& a, const OrbifoldDescriptor& b) {
  if (a.potential.num_vars() != b.potential.num_vars())
    throw Error(ErrorKind::dimension, "orbifolds have different numbers of variables");
  ComparisonReport rep;
  rep.groups_equal = a.group == b.group;
  rep.same_weights = a.potential.reduced_weights() == b.potential.reduced_weights();
  rep.outside_exemplified_regime = rep.groups_equal && !rep.same_weights;
  // Common root of the Shioda tree: degree d * d'.
  rep.mirror_a = birational_model(a, ModelSide::mirror, b.potential.degree());
  rep.mirror_b = birational_model(b, ModelSide::mirror, a.potential.degree());
  rep.models_equal = rep.mirror_a == rep.mirror_b;
  if (rep.groups_equal && rep.models_equal) rep.certificate = rep.mirror_a.reduced();
  return rep;
}

std::vector<std::complex<double>> evaluate_map_numeric(const MonomialMap& map,
                                                       std::span<const std::complex<double>> point) {
  const auto& m = map.exponents;
  if (point.size() != m.cols())
    throw Error(ErrorKind::dimension, "point has the wrong number of coordinates");
  std::vector<std::complex<double>> out(m.rows(), 1.0);
  for (std::size_t j = 0; j < m.rows(); ++j)
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (m(j, k) == 0) continue;
      if (point[k] == 0.0 && m(j, k) < 0)
        throw Error(ErrorKind::domain, "point lies outside the domain of the rational map");
      out[j] *= integer_power(point[k], m(j, k).convert_to<long long>());
    }
  return out;
}

}  // namespace bhk

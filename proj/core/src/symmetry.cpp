#include "bhk/symmetry.hpp"

#include "bhk/error.hpp"

#include <algorithm>
#include <sstream>

namespace bhk {

PhaseVector::PhaseVector(IntVector numerators, Integer denominator)
    : num_(std::move(numerators)), den_(std::move(denominator)) {
  if (den_ < 1) throw Error(ErrorKind::domain, "phase denominator must be positive");
  Integer g = den_;
  for (auto& x : num_) {
    x = floor_mod(x, den_);
    g = gcd(g, x);
  }
  den_ /= g;
  for (auto& x : num_) x /= g;
}

PhaseVector PhaseVector::identity(std::size_t n) { return PhaseVector(IntVector(n), 1); }

IntVector PhaseVector::numerators_at(const Integer& d) const {
  if (d % den_ != 0)
    throw Error(ErrorKind::domain, "denominator " + d.str() + " is not a multiple of " + den_.str());
  const Integer k = d / den_;
  IntVector out = num_;
  for (auto& x : out) x *= k;
  return out;
}

PhaseVector PhaseVector::operator*(const PhaseVector& other) const {
  if (size() != other.size()) throw Error(ErrorKind::dimension, "phase vector length mismatch");
  const Integer d = lcm(den_, other.den_);
  IntVector a = numerators_at(d);
  const IntVector b = other.numerators_at(d);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return PhaseVector(std::move(a), d);
}

PhaseVector PhaseVector::inverse() const {
  IntVector a = num_;
  for (auto& x : a) x = -x;
  return PhaseVector(std::move(a), den_);
}

PhaseVector PhaseVector::restricted(std::span<const std::size_t> indices) const {
  IntVector a;
  a.reserve(indices.size());
  for (auto i : indices) a.push_back(num_.at(i));
  return PhaseVector(std::move(a), den_);
}

std::string PhaseVector::to_string() const {
  return bhk::to_string(num_) + "/" + den_.str();
}

bool operator<(const PhaseVector& a, const PhaseVector& b) {
  if (a.den_ != b.den_) return a.den_ < b.den_;
  return std::lexicographical_compare(a.num_.begin(), a.num_.end(), b.num_.begin(),
                                      b.num_.end());
}

PhaseGroup PhaseGroup::trivial(std::size_t dim) { return from_lattice({}, 1, dim); }

PhaseGroup PhaseGroup::generated_by(std::size_t dim, const std::vector<PhaseVector>& gens) {
  Integer d = 1;
  for (const auto& g : gens) {
    if (g.size() != dim) throw Error(ErrorKind::dimension, "generator length mismatch");
    d = lcm(d, g.denominator());
  }
  std::vector<IntVector> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) rows.push_back(g.numerators_at(d));
  return from_lattice(rows, d, dim);
}

PhaseGroup PhaseGroup::from_lattice(const std::vector<IntVector>& rows, const Integer& den,
                                    std::size_t dim) {
  IntMatrix h = hermite_form(rows, den, dim);
  // Shrink to the group exponent.
  Integer e = 1;
  for (std::size_t i = 0; i < dim; ++i) e = lcm(e, PhaseVector(h.row(i), den).denominator());
  if (e != den) {
    const Integer k = den / e;
    std::vector<IntVector> scaled = h.row_list();
    for (auto& r : scaled)
      for (auto& x : r) x /= k;
    h = hermite_form(scaled, e, dim);
  }
  PhaseGroup g;
  g.dim_ = dim;
  g.den_ = e;
  g.lattice_ = std::move(h);
  Integer full = 1;
  for (std::size_t i = 0; i < dim; ++i) full *= e;
  g.order_ = full / lattice_determinant(g.lattice_);
  return g;
}

IntMatrix PhaseGroup::lattice_at(const Integer& d) const {
  if (d % den_ != 0)
    throw Error(ErrorKind::domain, "denominator " + d.str() + " is not a multiple of the group exponent " + den_.str());
  if (d == den_) return lattice_;
  return hermite_form(lattice_.scaled(d / den_).row_list(), d, dim_);
}

bool PhaseGroup::contains(const PhaseVector& g) const {
  if (g.size() != dim_) throw Error(ErrorKind::dimension, "phase vector length mismatch");
  if (den_ % g.denominator() != 0) return false;
  return lattice_contains(lattice_, g.numerators_at(den_));
}

bool PhaseGroup::contains(const PhaseGroup& h) const {
  const auto gens = h.generators();
  return std::all_of(gens.begin(), gens.end(), [&](const auto& g) { return contains(g); });
}

std::vector<PhaseVector> PhaseGroup::generators() const {
  std::vector<PhaseVector> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    PhaseVector g(lattice_.row(i), den_);
    if (!g.is_identity()) out.push_back(std::move(g));
  }
  return out;
}

PhaseGroup PhaseGroup::join(const PhaseGroup& other) const {
  auto gens = generators();
  auto more = other.generators();
  gens.insert(gens.end(), more.begin(), more.end());
  return generated_by(dim_, gens);
}

std::vector<PhaseVector> PhaseGroup::elements(std::uint64_t limit) const {
  if (order_ > limit)
    throw Error(ErrorKind::resource_limit,
                "group of order " + order_.str() + " exceeds the enumeration bound " +
                    std::to_string(limit));
  // Every element is uniquely sum_i c_i H_i (mod D) with 0 <= c_i < D / H_ii.
  std::vector<Integer> radix(dim_);
  for (std::size_t i = 0; i < dim_; ++i) radix[i] = den_ / lattice_(i, i);
  std::vector<Integer> c(dim_, 0);
  IntVector acc(dim_, 0);
  std::vector<PhaseVector> out;
  out.reserve(order_.convert_to<std::size_t>());
  while (true) {
    out.emplace_back(acc, den_);
    std::size_t i = 0;
    for (; i < dim_; ++i) {
      c[i] += 1;
      for (std::size_t k = 0; k < dim_; ++k) acc[k] += lattice_(i, k);
      if (c[i] < radix[i]) break;
      for (std::size_t k = 0; k < dim_; ++k) acc[k] -= radix[i] * lattice_(i, k);
      c[i] = 0;
    }
    if (i == dim_) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string PhaseGroup::to_string() const {
  std::ostringstream os;
  os << '<';
  const auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << gens[i].to_string();
  os << "> (order " << order_ << ')';
  return os.str();
}

PhaseGroup aut_group(const InvertiblePotential& p) {
  const auto& b = p.scaled_inverse();
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < b.cols(); ++j) cols.push_back(b.col(j));
  return PhaseGroup::from_lattice(cols, p.degree(), p.num_vars());
}

PhaseGroup j_group(const InvertiblePotential& p) {
  return PhaseGroup::generated_by(p.num_vars(), {PhaseVector(p.weights(), p.degree())});
}

PhaseGroup sl_group(const InvertiblePotential& p) {
  const PhaseGroup aut = aut_group(p);
  const Integer& d = aut.denominator();
  const IntMatrix sl = restrict_lattice(aut.lattice(), {IntVector(p.num_vars(), 1)}, d, d);
  return PhaseGroup::from_lattice(sl.row_list(), d, p.num_vars());
}

std::vector<PhaseVector> atomic_generators(const AtomicPiece& piece) {
  const auto& a = piece.exponents;
  const std::size_t m = a.size();
  auto sign = [](std::size_t k) { return k % 2 == 0 ? 1 : -1; };
  switch (piece.kind) {
    case AtomicKind::fermat:
      return {PhaseVector({Integer(1)}, a.at(0))};
    case AtomicKind::loop: {
      const Integer gamma = piece.aut_order();
      IntVector num(m);
      num[0] = sign(m);
      Integer prefix = 1;
      for (std::size_t i = 2; i <= m; ++i) {
        prefix *= a[i - 2];
        num[i - 1] = sign(m + 1 - i) * prefix;
      }
      return {PhaseVector(std::move(num), gamma)};
    }
    case AtomicKind::chain: {
      // phi_i = (-1)^{m+i} / (a_i ... a_m); all share the denominator a_1...a_m.
      Integer total = 1;
      for (const auto& x : a) total *= x;
      IntVector num(m);
      Integer prefix = 1;  // a_1 ... a_{i-1}
      for (std::size_t i = 1; i <= m; ++i) {
        num[i - 1] = sign(m + i) * prefix;
        prefix *= a[i - 1];
      }
      return {PhaseVector(std::move(num), total)};
    }
  }
  return {};
}

OrbifoldDescriptor build_orbifold(const InvertiblePotential& p,
                                  const std::vector<PhaseVector>& gens) {
  const std::size_t n = p.num_vars();
  const auto& a = p.exponents();
  for (const auto& g : gens) {
    if (g.size() != n) throw Error(ErrorKind::dimension, "generator length mismatch");
    const IntVector image = a * g.numerators();
    for (const auto& x : image)
      if (x % g.denominator() != 0)
        throw Error(ErrorKind::invalid_symmetry,
                    "generator " + g.to_string() + " does not preserve every monomial");
  }
  OrbifoldDescriptor orb{p, {}, j_group(p), 0};
  auto all = gens;
  auto jg = orb.j.generators();
  all.insert(all.end(), jg.begin(), jg.end());
  orb.group = PhaseGroup::generated_by(n, all);
  for (const auto& g : orb.group.generators()) {
    Integer s = 0;
    for (const auto& x : g.numerators()) s += x;
    if (s % g.denominator() != 0)
      throw Error(ErrorKind::sl_violation,
                  "SL violation: element " + g.to_string() + " has determinant != 1");
  }
  orb.quotient_order = orb.group.order() / orb.j.order();
  return orb;
}

Rational monomial_character(const PhaseVector& g, std::span<const Integer> exps) {
  const Integer s = dot(g.numerators(), exps);
  return Rational(floor_mod(s, g.denominator()), g.denominator());
}

PhaseGroup dual_group(const OrbifoldDescriptor& orb) {
  const auto& p = orb.potential;
  const std::size_t n = p.num_vars();
  const Integer& dg = orb.group.denominator();
  std::vector<IntVector> rows;
  for (const auto& g : orb.group.generators()) rows.push_back(g.numerators_at(dg));
  // Exponent vectors of all G-invariant monomials.
  const IntMatrix invariant = solve_congruences(rows, dg, n);
  const IntMatrix bt = p.scaled_inverse().transpose();
  std::vector<IntVector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(bt * invariant.row(i));
  return PhaseGroup::from_lattice(images, p.degree(), n);
}

OrbifoldDescriptor mirror_orbifold(const OrbifoldDescriptor& orb) {
  return build_orbifold(transpose_potential(orb.potential), dual_group(orb).generators());
}

}  // namespace bhk

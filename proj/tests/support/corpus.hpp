#pragma once

// Shared fixtures and independent oracles for the test programs.

#include <bhk/error.hpp>
#include <bhk/exact.hpp>
#include <bhk/potential.hpp>
#include <bhk/symmetry.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <vector>

namespace bhk {

// Readable gtest failure messages.
inline void PrintTo(const PhaseVector& v, std::ostream* os) { *os << v.to_string(); }
inline void PrintTo(const PhaseGroup& g, std::ostream* os) { *os << g.to_string(); }

}  // namespace bhk

namespace bhk::testing {

inline PhaseVector phase(std::initializer_list<long> num, long den) {
  IntVector v;
  for (long x : num) v.emplace_back(x);
  return PhaseVector(std::move(v), den);
}

inline IntMatrix matrix(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> out;
  for (const auto& r : rows) {
    IntVector v;
    for (long x : r) v.emplace_back(x);
    out.push_back(std::move(v));
  }
  return IntMatrix::from_rows(out);
}

// The worked pair: a Fermat quintic-type potential and its chain variant in
// WP(3,3,6,8,4), with one shared group.
inline InvertiblePotential fermat_24() {
  return build_potential(matrix({{8, 0, 0, 0, 0}, {0, 8, 0, 0, 0}, {0, 0, 4, 0, 0},
                                 {0, 0, 0, 3, 0}, {0, 0, 0, 0, 6}}));
}
inline InvertiblePotential chain_24() {
  return build_potential(matrix({{8, 0, 0, 0, 0}, {0, 8, 0, 0, 0}, {0, 0, 4, 0, 0},
                                 {0, 0, 0, 3, 0}, {0, 0, 0, 1, 4}}));
}
inline std::vector<PhaseVector> shared_generators() {
  return {phase({3, 3, 6, 8, 4}, 24), phase({18, 0, 6, 0, 0}, 24), phase({0, 0, 12, 0, 12}, 24)};
}
inline OrbifoldDescriptor fermat_24_orbifold() { return build_orbifold(fermat_24(), shared_generators()); }
inline OrbifoldDescriptor chain_24_orbifold() { return build_orbifold(chain_24(), shared_generators()); }

inline PhaseGroup group_of(std::size_t dim, std::vector<PhaseVector> gens) {
  return PhaseGroup::generated_by(dim, gens);
}

// ---------------------------------------------------------------------------
// Random generation.

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Random sum of atomic pieces on `nvars` variables (shuffled), exponents in
// [2, max_exp]. Returns nullopt when |det| exceeds max_det.
inline std::optional<InvertiblePotential> random_potential(Rng& rng, std::size_t nvars,
                                                           long max_exp = 6, long max_det = 200) {
  std::vector<std::size_t> perm(nvars);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  IntMatrix a(nvars, nvars);
  std::size_t start = 0;
  while (start < nvars) {
    const std::size_t size = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(nvars - start)));
    const bool loop = size >= 2 && uniform(rng, 0, 1) == 1;
    for (std::size_t k = 0; k < size; ++k) {
      const std::size_t row = perm[start + k];
      a(row, perm[start + k]) = uniform(rng, 2, max_exp);
      if (k + 1 < size)
        a(row, perm[start + k + 1]) = 1;
      else if (loop)
        a(row, perm[start]) = 1;
    }
    start += size;
  }
  if (abs(determinant(a)) > max_det) return std::nullopt;
  try {
    return build_potential(a);
  } catch (const Error&) {
    return std::nullopt;
  }
}

// A random element of `g`, as an integer combination of its lattice rows.
inline PhaseVector random_element(Rng& rng, const PhaseGroup& g) {
  const auto& h = g.lattice();
  const Integer& d = g.denominator();
  IntVector v(g.dimension(), 0);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    const long c = uniform(rng, 0, 1000);
    for (std::size_t k = 0; k < h.cols(); ++k) v[k] += c * h(i, k);
  }
  return PhaseVector(std::move(v), d);
}

// J together with up to `extra` random SL elements; requires J <= SL.
inline std::optional<OrbifoldDescriptor> random_orbifold(Rng& rng, std::size_t nvars,
                                                         bool calabi_yau, int extra = 2,
                                                         long max_group = 200) {
  for (int attempt = 0; attempt < 20000; ++attempt) {
    auto p = random_potential(rng, nvars);
    if (!p) continue;
    if (calabi_yau && !p->calabi_yau()) continue;
    const PhaseGroup sl = sl_group(*p);
    if (!sl.contains(j_group(*p))) continue;
    std::vector<PhaseVector> gens;
    const int k = static_cast<int>(uniform(rng, 0, extra));
    for (int i = 0; i < k; ++i) gens.push_back(random_element(rng, sl));
    auto orb = build_orbifold(*p, gens);
    if (orb.group.order() > max_group) continue;
    return orb;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Oracles.

// Laplace expansion along the first row.
inline Integer cofactor_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    const Integer term = m(0, c) * cofactor_determinant(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

// All points of Z_m^n, in lexicographic order.
inline std::vector<IntVector> box(std::size_t n, long m) {
  std::vector<IntVector> out;
  IntVector v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++v[i] < m) break;
      v[i] = 0;
    }
    if (i == n) break;
  }
  return out;
}

// Closure of `gens` under addition in Z_m^n (breadth first).
inline std::set<IntVector> span_mod(const std::vector<IntVector>& gens, std::size_t n, long m) {
  std::set<IntVector> seen{IntVector(n, 0)};
  std::vector<IntVector> frontier{IntVector(n, 0)};
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        IntVector w(n);
        for (std::size_t k = 0; k < n; ++k) w[k] = floor_mod(v[k] + g[k], Integer(m));
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return seen;
}

// Coefficients of prod_i (1 - t^{d - w_i}) / (1 - t^{w_i}) up to t^upto.
// Each factor is a polynomial when w_i divides d.
inline std::vector<Integer> poincare_coefficients(const IntVector& w, const Integer& d, long upto) {
  std::vector<Integer> poly(static_cast<std::size_t>(upto) + 1, 0);
  poly[0] = 1;
  for (const auto& wi : w) {
    const long step = wi.convert_to<long>();
    const long top = (d - wi).convert_to<long>();  // exclusive bound on the exponent
    std::vector<Integer> next(poly.size(), 0);
    for (std::size_t e = 0; e < poly.size(); ++e) {
      if (poly[e] == 0) continue;
      for (long k = 0; k < top; k += step) {
        const std::size_t t = e + static_cast<std::size_t>(k);
        if (t >= next.size()) break;
        next[t] += poly[e];
      }
    }
    poly = std::move(next);
  }
  return poly;
}

// mu = prod (d / w_i - 1), as a rational that must come out integral.
inline Rational milnor_number(const IntVector& w, const Integer& d) {
  Rational mu = 1;
  for (const auto& wi : w) mu *= Rational(d, wi) - 1;
  return mu;
}

}  // namespace bhk::testing

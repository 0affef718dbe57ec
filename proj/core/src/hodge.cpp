#include "bhk/hodge.hpp"

#include "bhk/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bhk {

namespace {

constexpr std::size_t kMonomialLimit = 2000000;

// All exponent vectors s >= 0 with sum s_i w_i == delta.
std::vector<IntVector> monomials_of_degree(const IntVector& w, const Integer& delta) {
  std::vector<IntVector> out;
  if (delta < 0) return out;
  IntVector cur(w.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, const Integer& rest) -> void {
    if (i + 1 == w.size()) {
      if (rest % w[i] == 0) {
        cur[i] = rest / w[i];
        out.push_back(cur);
        if (out.size() > kMonomialLimit)
          throw Error(ErrorKind::resource_limit,
                      "graded piece of degree " + delta.str() + " has too many monomials");
      }
      return;
    }
    for (Integer e = 0; e * w[i] <= rest; ++e) {
      cur[i] = e;
      self(self, i + 1, rest - e * w[i]);
    }
    cur[i] = 0;
  };
  if (w.empty()) {
    if (delta == 0) out.emplace_back();
    return out;
  }
  rec(rec, 0, delta);
  return out;
}

Integer character_of(const IntVector& chars, std::span<const Integer> exps, const Integer& m) {
  return floor_mod(dot(chars, exps), m);
}

void check_quasi_smooth(const RestrictedPotential& r, const PhaseVector& gamma) {
  const std::string where = "sector " + gamma.to_string() + " restricted to " +
                            std::to_string(r.size()) + " variables";
  if (r.monomials.size() != r.size())
    throw Error(ErrorKind::sector_diagnostic,
                where + " has " + std::to_string(r.monomials.size()) +
                    " monomials; cannot certify quasi-smoothness");
  const IntMatrix a = IntMatrix::from_rows(r.monomials);
  if (determinant(a) == 0)
    throw Error(ErrorKind::sector_diagnostic, where + " is not invertible");
  try {
    (void)decompose_atomic(a);
  } catch (const Error& e) {
    throw Error(ErrorKind::sector_diagnostic, where + " is not of atomic type: " + e.what());
  }
}

}  // namespace

std::string to_string(RestrictionKind kind) {
  switch (kind) {
    case RestrictionKind::zero: return "zero";
    case RestrictionKind::empty: return "empty";
    case RestrictionKind::points: return "points";
    case RestrictionKind::hypersurface: return "hypersurface";
  }
  return "?";
}

RestrictedPotential restrict_potential(const InvertiblePotential& p,
                                       std::span<const std::size_t> fixed) {
  RestrictedPotential r;
  r.variables.assign(fixed.begin(), fixed.end());
  std::sort(r.variables.begin(), r.variables.end());
  r.variables.erase(std::unique(r.variables.begin(), r.variables.end()), r.variables.end());
  const std::size_t n = p.num_vars();
  std::vector<bool> inside(n, false);
  for (auto i : r.variables) {
    if (i >= n) throw Error(ErrorKind::dimension, "fixed index out of range");
    inside[i] = true;
  }
  const auto& a = p.exponents();
  for (std::size_t row = 0; row < a.rows(); ++row) {
    bool supported = true;
    for (std::size_t j = 0; j < n && supported; ++j)
      if (a(row, j) != 0 && !inside[j]) supported = false;
    if (!supported) continue;
    IntVector m;
    for (auto j : r.variables) m.push_back(a(row, j));
    r.monomials.push_back(std::move(m));
  }
  for (auto i : r.variables) r.weights.push_back(p.weights()[i]);
  r.degree = p.degree();
  if (r.monomials.empty())
    r.kind = RestrictionKind::zero;
  else if (r.size() == 1)
    r.kind = RestrictionKind::empty;
  else if (r.size() == 2)
    r.kind = RestrictionKind::points;
  else
    r.kind = RestrictionKind::hypersurface;
  return r;
}

Rational age(const PhaseVector& g) {
  Integer s = 0;
  for (const auto& x : g.numerators()) s += x;
  return Rational(s, g.denominator());
}

std::vector<Sector> enumerate_sectors(const OrbifoldDescriptor& orb, std::uint64_t limit) {
  const auto& p = orb.potential;
  const std::size_t n = p.num_vars();
  const IntVector& w = p.reduced_weights();
  std::set<PhaseVector> seen;
  for (const auto& g : orb.group.elements(limit)) {
    const Integer& dg = g.denominator();
    const IntVector& gn = g.numerators();
    for (std::size_t i = 0; i < n; ++i) {
      // u = exp(2 pi i t) with t = (k D - g_i) / (D w_i), so that u^{w_i} g_i = 1.
      const Integer den = dg * w[i];
      for (Integer k = 0; k < w[i]; ++k) {
        const Integer t = k * dg - gn[i];
        IntVector num(n);
        for (std::size_t j = 0; j < n; ++j) num[j] = gn[j] * w[i] + w[j] * t;
        seen.insert(PhaseVector(std::move(num), den));
      }
    }
  }
  std::vector<Sector> out;
  for (const auto& gamma : seen) {
    std::vector<std::size_t> fixed;
    for (std::size_t j = 0; j < n; ++j)
      if (gamma.numerators()[j] == 0) fixed.push_back(j);
    RestrictedPotential r = restrict_potential(p, fixed);
    if (r.kind == RestrictionKind::empty) continue;
    Rational a = age(gamma);
    if (r.kind == RestrictionKind::zero)
      a -= monomial_character(gamma, p.exponents().row(0));  // normal direction of X moves
    else
      check_quasi_smooth(r, gamma);
    out.push_back({gamma, std::move(fixed), std::move(r), a});
  }
  return out;
}

CharacterConstraint CharacterConstraint::trivial() { return {}; }

CharacterConstraint CharacterConstraint::twisted(const PhaseGroup& g,
                                                 std::span<const std::size_t> fixed) {
  CharacterConstraint c;
  c.modulus = g.denominator();
  for (const auto& gen : g.generators()) {
    const IntVector num = gen.numerators_at(c.modulus);
    IntVector chars;
    Integer omega = 0;
    for (auto i : fixed) {
      chars.push_back(num.at(i));
      omega += num.at(i);
    }
    c.characters.push_back(std::move(chars));
    c.targets.push_back(floor_mod(-omega, c.modulus));
  }
  return c;
}

bool CharacterConstraint::admits(std::span<const Integer> exps) const {
  for (std::size_t k = 0; k < characters.size(); ++k)
    if (character_of(characters[k], exps, modulus) != targets[k]) return false;
  return true;
}

Integer graded_jacobian_dim(const RestrictedPotential& r, const Integer& delta,
                            const CharacterConstraint& c) {
  if (delta < 0 || r.monomials.empty()) return 0;
  const std::size_t m = r.size();
  std::map<IntVector, std::size_t> column;
  for (auto& mono : monomials_of_degree(r.weights, delta))
    if (c.admits(mono)) column.emplace(std::move(mono), column.size());
  if (column.empty()) return 0;

  RankAccumulator acc;
  for (std::size_t i = 0; i < m; ++i) {
    // d F / d x_i as (coefficient, exponent) terms.
    std::vector<std::pair<Integer, IntVector>> terms;
    for (const auto& mono : r.monomials) {
      if (mono[i] == 0) continue;
      IntVector e = mono;
      e[i] -= 1;
      terms.emplace_back(mono[i], std::move(e));
    }
    if (terms.empty()) continue;
    for (const auto& mono : monomials_of_degree(r.weights, delta - (r.degree - r.weights[i]))) {
      RankAccumulator::SparseRow row;
      bool inside = true;
      for (const auto& [coef, e] : terms) {
        IntVector prod = mono;
        for (std::size_t j = 0; j < m; ++j) prod[j] += e[j];
        auto it = column.find(prod);
        if (it == column.end()) {
          inside = false;  // whole row lies in another character class
          break;
        }
        row[it->second] += Rational(coef);
      }
      if (inside) acc.add(std::move(row));
    }
  }
  return Integer(column.size() - acc.rank());
}

void HodgeDiamond::add(const Rational& p, const Rational& q, const Integer& h) {
  if (h == 0) return;
  auto& slot = h_[{p, q}];
  slot += h;
  if (slot == 0) h_.erase({p, q});
}

Integer HodgeDiamond::at(const Rational& p, const Rational& q) const {
  auto it = h_.find({p, q});
  return it == h_.end() ? Integer(0) : it->second;
}

std::vector<HodgeDiamond::Entry> HodgeDiamond::ordered() const {
  std::vector<Entry> out;
  for (const auto& [pq, h] : h_) out.emplace_back(pq.first, pq.second, h);
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
    const Rational sa = std::get<0>(a) + std::get<1>(a);
    const Rational sb = std::get<0>(b) + std::get<1>(b);
    if (sa != sb) return sa < sb;
    return std::get<0>(a) < std::get<0>(b);
  });
  return out;
}

std::map<Rational, Integer> HodgeDiamond::total_degrees() const {
  std::map<Rational, Integer> out;
  for (const auto& [pq, h] : h_) out[pq.first + pq.second] += h;
  return out;
}

HodgeDiamond HodgeDiamond::shifted(const Rational& s, const Integer& dimension) const {
  HodgeDiamond out(dimension);
  for (const auto& [pq, h] : h_) out.add(pq.first + s, pq.second + s, h);
  return out;
}

HodgeDiamond& HodgeDiamond::operator+=(const HodgeDiamond& other) {
  dimension_ = std::max(dimension_, other.dimension_);
  for (const auto& [pq, h] : other.h_) add(pq.first, pq.second, h);
  return *this;
}

bool HodgeDiamond::conjugation_symmetric() const {
  return std::all_of(h_.begin(), h_.end(),
                     [&](const auto& e) { return at(e.first.second, e.first.first) == e.second; });
}

bool HodgeDiamond::serre_symmetric() const {
  const Rational d(dimension_);
  return std::all_of(h_.begin(), h_.end(), [&](const auto& e) {
    return at(d - e.first.first, d - e.first.second) == e.second;
  });
}

namespace {
std::string bidegree(const Rational& x) {
  return denominator(x) == 1 ? numerator(x).str() : bhk::to_string(x);
}
}  // namespace

std::string HodgeDiamond::to_string() const {
  std::ostringstream os;
  const bool integral = std::all_of(h_.begin(), h_.end(), [](const auto& e) {
    return denominator(e.first.first) == 1 && denominator(e.first.second) == 1;
  });
  if (!integral || dimension_ > 64) {
    for (const auto& [p, q, h] : ordered())
      os << "h^{" << bidegree(p) << "," << bidegree(q) << "} = " << h << '\n';
    return os.str();
  }
  const long dim = dimension_.convert_to<long>();
  std::size_t width = 1;
  for (const auto& [pq, h] : h_) width = std::max(width, h.str().size());
  width += 2;
  for (long s = 2 * dim; s >= 0; --s) {
    const long hi = std::min(s, dim);
    const long lo = std::max(0L, s - dim);
    const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
    os << std::string((static_cast<std::size_t>(dim) + 1 - count) * width / 2, ' ');
    for (long p = hi; p >= lo; --p) {
      const std::string cell = at(p, s - p).str();
      os << std::string(width - cell.size(), ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

HodgeDiamond invariant_hypersurface_diamond(const Sector& sector,
                                            const OrbifoldDescriptor& orb) {
  const auto& r = sector.restriction;
  const long size = static_cast<long>(r.size());
  if (r.kind == RestrictionKind::zero) {
    HodgeDiamond out(size - 1);
    for (long p = 0; p < size; ++p) out.add(p, p, 1);
    return out;
  }
  if (r.kind == RestrictionKind::empty) return HodgeDiamond(0);
  const long m = size - 1;  // the locus has dimension m - 1
  HodgeDiamond out(m - 1);
  for (long p = 0; p <= m - 1; ++p) out.add(p, p, 1);
  const auto constraint = CharacterConstraint::twisted(orb.group, r.variables);
  Integer wsum = 0;
  for (const auto& x : r.weights) wsum += x;
  for (long k = 0; k <= m - 1; ++k) {
    const Integer delta = (k + 1) * r.degree - wsum;
    out.add(m - 1 - k, k, graded_jacobian_dim(r, delta, constraint));
  }
  return out;
}

HodgeDiamond cr_diamond(const OrbifoldDescriptor& orb, std::uint64_t limit) {
  const Integer dim = static_cast<long>(orb.potential.num_vars()) - 2;
  HodgeDiamond total(dim);
  for (const auto& s : enumerate_sectors(orb, limit))
    total += invariant_hypersurface_diamond(s, orb).shifted(s.age, dim);
  return total;
}

MirrorCheck mirror_check(const OrbifoldDescriptor& orb, std::uint64_t limit) {
  MirrorCheck out;
  out.diamond = cr_diamond(orb, limit);
  out.mirror_diamond = cr_diamond(mirror_orbifold(orb), limit);
  const Rational dim(out.diamond.dimension());
  std::set<HodgeDiamond::Bidegree> keys;
  for (const auto& [pq, h] : out.diamond.entries()) keys.insert(pq);
  for (const auto& [pq, h] : out.mirror_diamond.entries()) keys.insert({dim - pq.first, pq.second});
  for (const auto& [p, q] : keys) {
    const Integer a = out.diamond.at(p, q);
    const Integer b = out.mirror_diamond.at(dim - p, q);
    if (a != b)
      out.mismatches.push_back("h^{" + to_string(p) + "," + to_string(q) + "} = " + a.str() +
                               " but mirror h^{" + to_string(Rational(dim - p)) + "," +
                               to_string(q) + "} = " + b.str());
  }
  out.passed = out.mismatches.empty();
  return out;
}

}  // namespace bhk

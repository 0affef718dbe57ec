// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "support/corpus.hpp"

#include <bhk/hodge.hpp>
#include <bhk/shioda.hpp>

#include <complex>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace bhk;
using namespace bhk::testing;

namespace {

using Index = std::vector<std::size_t>;

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) why << "; ";
      ok = false;
      why << what;
    }
  }
};

OrbifoldDescriptor fermat_mirror() { return mirror_orbifold(fermat_24_orbifold()); }
OrbifoldDescriptor chain_mirror() { return mirror_orbifold(chain_24_orbifold()); }

const Sector* find_sector(const std::vector<Sector>& ss, const PhaseVector& g) {
  for (const auto& s : ss)
    if (s.gamma == g) return &s;
  return nullptr;
}

bool fixed_at(const std::vector<Sector>& ss, const PhaseVector& g, const Index& want) {
  const auto* s = find_sector(ss, g);
  return s && s->fixed_indices == want;
}

void weights_and_degree(Check& c) {
  for (const auto& p : {fermat_24(), chain_24()}) {
    c.expect(p.weights() == IntVector{3, 3, 6, 8, 4}, "weights of " + p.to_string());
    c.expect(p.degree() == 24, "degree of " + p.to_string());
    c.expect(p.calabi_yau() && p.gorenstein(), "flags of " + p.to_string());
  }
}

void transpose_weights(Check& c) {
  const auto t = transpose_potential(chain_24());
  c.expect(t.reduced_weights() == IntVector{1, 1, 2, 2, 2}, "got " + to_string(t.reduced_weights()));
}

void dual_groups(Check& c) {
  c.expect(dual_group(fermat_24_orbifold()) == j_group(transpose_potential(fermat_24())),
           "dual of the Fermat side");
  const auto m = chain_mirror();
  c.expect(m.group == group_of(5, {phase({3, 3, 6, 6, 6}, 24), phase({0, 0, 0, 12, 12}, 24)}),
           "dual of the chain side is " + m.group.to_string());
  c.expect(m.quotient_order == 2, "quotient order " + m.quotient_order.str());
}

void group_transport(Check& c) {
  const auto h = group_of(5, {phase({1, 1, 1, 1, 1}, 24), phase({8, 0, 0, 0, 0}, 24),
                              phase({2, 0, -1, 0, 0}, 24), phase({0, 0, 2, 0, 3}, 24),
                              phase({0, 0, 0, 1, 4}, 24)});
  const auto h_prime = group_of(5, {phase({1, 1, 1, 1, 1}, 24), phase({8, 0, 0, 0, 0}, 24),
                                    phase({2, 0, -1, 0, 0}, 24), phase({0, 0, 2, 0, 2}, 24),
                                    phase({0, 0, 0, 1, 3}, 24)});
  // Swapping the last generator to (1,1,1,z^3,z) spans only an
  // index-3 subgroup of the preimage.
  const auto swapped = group_of(5, {phase({1, 1, 1, 1, 1}, 24), phase({8, 0, 0, 0, 0}, 24),
                                    phase({2, 0, -1, 0, 0}, 24), phase({0, 0, 2, 0, 2}, 24),
                                    phase({0, 0, 0, 3, 1}, 24)});
  c.expect(h_prime.contains(swapped) && h_prime.order() == 3 * swapped.order(),
           "swapped H' list is not index 3");
  const auto perp = group_of(5, {phase({1, 1, 1, 1, 1}, 24), phase({8, 0, 0, 0, 0}, 24),
                                 phase({0, 0, 4, 0, 0}, 24), phase({2, 2, 2, 0, 0}, 24),
                                 phase({0, 0, 0, 1, 4}, 24)});
  const auto a = fermat_24_orbifold();
  const auto b = chain_24_orbifold();
  c.expect(birational_model(a, ModelSide::direct).quotient_group == h, "H");
  c.expect(birational_model(b, ModelSide::direct).quotient_group == h_prime, "H'");
  c.expect(birational_model(a, ModelSide::mirror).quotient_group == perp, "perp of H");
  c.expect(birational_model(b, ModelSide::mirror).quotient_group == perp, "perp of H'");
  const auto rep = compare_mirrors(a, b);
  c.expect(rep.certificate.has_value(), "no certificate");
}

void bridge_identity(Check& c) {
  std::vector<OrbifoldDescriptor> cases{fermat_24_orbifold(), chain_24_orbifold()};
  Rng rng(101);
  while (cases.size() < 24)
    if (auto orb = random_orbifold(rng, static_cast<std::size_t>(uniform(rng, 2, 5)), false))
      cases.push_back(std::move(*orb));
  for (const auto& orb : cases) {
    const auto perp = birational_model(orb, ModelSide::mirror).quotient_group;
    c.expect(pushforward(shioda_map(orb.potential, true), perp) == dual_group(orb),
             orb.potential.to_string());
  }
}

void sector_tables(Check& c) {
  const auto f = enumerate_sectors(fermat_mirror());
  c.expect(f.size() == 6, std::to_string(f.size()) + " sectors on the Fermat mirror");
  c.expect(fixed_at(f, PhaseVector::identity(5), {0, 1, 2, 3, 4}), "untwisted");
  c.expect(fixed_at(f, phase({18, 18, 12, 0, 0}, 24), {3, 4}), "(18,18,12,0,0)/24");
  c.expect(fixed_at(f, phase({6, 6, 12, 0, 0}, 24), {3, 4}), "(6,6,12,0,0)/24");
  c.expect(fixed_at(f, phase({0, 0, 0, 16, 8}, 24), {0, 1, 2}), "(0,0,0,16,8)/24");
  c.expect(fixed_at(f, phase({0, 0, 0, 8, 16}, 24), {0, 1, 2}), "(0,0,0,8,16)/24");
  c.expect(fixed_at(f, phase({12, 12, 0, 0, 0}, 24), {2, 3, 4}), "(12,12,0,0,0)/24");
  const auto g = enumerate_sectors(chain_mirror());
  c.expect(g.size() == 5, std::to_string(g.size()) + " sectors on the chain mirror");
  c.expect(fixed_at(g, PhaseVector::identity(5), {0, 1, 2, 3, 4}), "untwisted");
  c.expect(fixed_at(g, phase({12, 12, 0, 0, 0}, 24), {2, 3, 4}), "(12,12,0,0,0)/24");
  c.expect(fixed_at(g, phase({0, 0, 0, 12, 12}, 24), {0, 1, 2}), "(0,0,0,12,12)/24");
  c.expect(fixed_at(g, phase({6, 6, 12, 0, 0}, 24), {3, 4}), "(6,6,12,0,0)/24");
  c.expect(fixed_at(g, phase({18, 18, 12, 0, 0}, 24), {3, 4}), "(18,18,12,0,0)/24");
}

void invariant_diamonds(Check& c) {
  const auto fm = fermat_mirror();
  const auto fs = enumerate_sectors(fm);
  const auto u = invariant_hypersurface_diamond(fs.front(), fm);
  c.expect(u.at(2, 1) == 36 && u.at(1, 1) == 1, "untwisted Fermat mirror");
  const auto* curve = find_sector(fs, phase({0, 0, 0, 16, 8}, 24));
  c.expect(curve && invariant_hypersurface_diamond(*curve, fm).at(1, 0) == 9, "genus nine");
  const auto* elliptic = find_sector(fs, phase({12, 12, 0, 0, 0}, 24));
  c.expect(elliptic && invariant_hypersurface_diamond(*elliptic, fm).at(1, 0) == 1, "genus one");
  const auto* points = find_sector(fs, phase({6, 6, 12, 0, 0}, 24));
  c.expect(points && invariant_hypersurface_diamond(*points, fm).at(0, 0) == 3, "three points");
  const auto cm = chain_mirror();
  const auto cs = enumerate_sectors(cm);
  c.expect(invariant_hypersurface_diamond(cs.front(), cm).at(2, 1) == 45, "untwisted chain mirror");
}

void cr_diamonds(Check& c) {
  for (const auto& orb : {fermat_mirror(), chain_mirror()}) {
    const auto d = cr_diamond(orb);
    c.expect(d.at(1, 1) == 7 && d.at(2, 1) == 55, "mirror of " + orb.potential.to_string());
  }
  for (const auto& orb : {fermat_24_orbifold(), chain_24_orbifold()}) {
    const auto mc = mirror_check(orb);
    c.expect(mc.diamond.at(1, 1) == 55 && mc.diamond.at(2, 1) == 7, "direct " + orb.potential.to_string());
    c.expect(mc.passed, "mirror check on " + orb.potential.to_string());
  }
}

void property_suite(Check& c) {
  Rng rng(102);
  int aut = 0;
  while (aut < 50) {
    auto p = random_potential(rng, static_cast<std::size_t>(uniform(rng, 2, 5)));
    if (!p) continue;
    ++aut;
    c.expect(aut_group(*p).order() == abs(determinant(p->exponents())), "|Aut| of " + p->to_string());
  }
  for (int k = 0; k < 25; ++k) {
    auto orb = random_orbifold(rng, static_cast<std::size_t>(uniform(rng, 2, 5)), false);
    if (!orb) continue;
    const auto t = transpose_potential(orb->potential);
    const auto dual = dual_group(*orb);
    c.expect(dual.contains(j_group(t)) && sl_group(t).contains(dual), "J <= G^T <= SL");
    const auto h = orb->group.lattice_at(orb->potential.degree() * 3);
    c.expect(hermite_form(h.row_list(), orb->potential.degree() * 3, h.cols()) == h, "HNF idempotence");
    for (auto side : {ModelSide::direct, ModelSide::mirror})
      c.expect(birational_model(*orb, side, 4).reduced() == birational_model(*orb, side).reduced(),
               "scale invariance on " + orb->potential.to_string());
    c.expect(PhaseGroup::generated_by(orb->group.dimension(), orb->group.generators()) == orb->group,
             "presentation independence");
  }
  // Perp against brute force on every potential with d <= 4 and at most 3 variables.
  for (const auto& a : {matrix({{2, 0}, {0, 2}}), matrix({{4, 0}, {0, 2}}), matrix({{3, 1}, {0, 2}}),
                        matrix({{2, 1}, {1, 2}}), matrix({{2, 0, 0}, {0, 2, 0}, {0, 0, 4}}),
                        matrix({{4, 0, 0}, {0, 4, 0}, {0, 0, 4}}), matrix({{2, 1, 0}, {0, 2, 0}, {0, 0, 4}})}) {
    const auto p = build_potential(a);
    const Integer& d = p.degree();
    if (d > 4) continue;
    const auto& b = p.scaled_inverse();
    const std::size_t n = p.num_vars();
    for (const auto& hv : box(n, d.convert_to<long>())) {
      const auto hg = PhaseGroup::generated_by(n, {PhaseVector(hv, d)});
      const auto perp = perp_group(hg, b, d);
      for (const auto& s : box(n, d.convert_to<long>())) {
        bool orthogonal = true;
        for (const auto& e : hg.elements())
          orthogonal = orthogonal && floor_mod(pairing(s, e.numerators_at(d), b), d) == 0;
        c.expect(perp.contains(PhaseVector(s, d)) == orthogonal, "perp on " + p.to_string());
      }
    }
  }
}

void numeric_shioda(Check& c) {
  using cd = std::complex<double>;
  Rng rng(103);
  std::uniform_real_distribution<double> radius(0.5, 1.5), angle(0.0, 6.283185307179586);
  for (const auto& p : {fermat_24(), chain_24()}) {
    const auto map = shioda_map(p, false);
    double worst = 0.0;
    for (int trial = 0; trial < 120; ++trial) {
      std::vector<cd> y(5);
      cd sum = 0.0;
      for (std::size_t i = 0; i < 4; ++i) {
        y[i] = std::polar(radius(rng), angle(rng));
        sum += integer_power(y[i], 24);
      }
      y[4] = std::pow(-sum, 1.0 / 24.0);
      const auto x = evaluate_map_numeric(map, y);
      double scale = 0.0;
      for (std::size_t r = 0; r < 5; ++r) {
        cd term = 1.0;
        for (std::size_t k = 0; k < 5; ++k)
          term *= integer_power(x[k], p.exponents()(r, k).convert_to<long long>());
        scale += std::abs(term);
      }
      worst = std::max(worst, std::abs(evaluate_numeric(p, x)) / scale);
    }
    c.expect(worst <= 1e-9, "relative error " + std::to_string(worst));
    for (long s : {2, 3, 7})
      c.expect(compose_exponents(map.exponents, IntMatrix::identity(5).scaled(s)) ==
                   shioda_map(p, false, s).exponents,
               "composition with scale " + std::to_string(s));
  }
}

void poincare_oracle(Check& c) {
  for (const auto& orb : {fermat_mirror(), chain_mirror()}) {
    const long top = 3 * orb.potential.degree().convert_to<long>();
    for (const auto& s : enumerate_sectors(orb)) {
      const auto& r = s.restriction;
      if (r.kind == RestrictionKind::zero) continue;
      bool fermat = true;
      for (const auto& m : r.monomials)
        fermat = fermat && std::count_if(m.begin(), m.end(), [](const Integer& x) { return x != 0; }) == 1;
      if (!fermat) continue;
      const auto series = poincare_coefficients(r.weights, r.degree, top);
      for (long delta = 0; delta <= top; ++delta)
        c.expect(graded_jacobian_dim(r, delta, CharacterConstraint::trivial()) ==
                     series[static_cast<std::size_t>(delta)],
                 "stratum " + s.gamma.to_string() + " delta " + std::to_string(delta));
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
      {"weights and degree of the worked pair", weights_and_degree},
      {"reduced weights of the transposed chain", transpose_weights},
      {"dual groups", dual_groups},
      {"group transport and birationality certificate", group_transport},
      {"bridge identity", bridge_identity},
      {"sector tables", sector_tables},
      {"invariant diamonds", invariant_diamonds},
      {"Chen-Ruan diamonds and mirror check", cr_diamonds},
      {"property suite", property_suite},
      {"numeric Shioda maps", numeric_shioda},
      {"Poincare series oracle", poincare_oracle},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << ": " << (c.ok ? "PASS" : "FAIL") << " - "
              << criteria[i].first;
    if (!c.ok) std::cout << " (" << c.why.str() << ')';
    std::cout << '\n';
    if (!c.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

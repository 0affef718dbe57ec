#include "cli/report.hpp"

namespace bhk::cli {

using nlohmann::json;
using nlohmann::ordered_json;

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  const Integer d = integer_from_json(json(den), "rational denominator");
  if (d == 0) throw InputError("rational with zero denominator: " + s);
  return Rational(integer_from_json(json(num), "rational numerator"), d);
}

PotentialSummary summarize(const InvertiblePotential& p, std::string label) {
  PotentialSummary s;
  s.label = std::move(label);
  s.polynomial = p.to_string();
  s.matrix = p.exponents().row_list();
  s.weights = p.weights();
  s.degree = p.degree();
  s.reduced_weights = p.reduced_weights();
  s.reduced_degree = p.reduced_degree();
  s.calabi_yau = p.calabi_yau();
  s.gorenstein = p.gorenstein();
  s.aut_order = abs(determinant(p.exponents()));
  for (const auto& piece : p.atomic_pieces())
    s.pieces.push_back({to_string(piece.kind), piece.variables, piece.exponents});
  return s;
}

GroupSummary summarize(const PhaseGroup& g, std::string label) {
  return {std::move(label), g.order(), g.generators()};
}

ModelSummary summarize(const BirationalModel& m, std::string label) {
  return {std::move(label), m.fermat_degree, m.quotient_group.order(),
          m.quotient_group.generators(), m.effective_generators()};
}

namespace {

std::vector<DiamondEntry> entries_of(const HodgeDiamond& d) {
  std::vector<DiamondEntry> out;
  for (const auto& [p, q, h] : d.ordered()) out.push_back({p, q, h});
  return out;
}

ordered_json phase_json(const PhaseVector& g) {
  ordered_json num = ordered_json::array();
  for (const auto& x : g.numerators()) num.push_back(integer_json(x));
  ordered_json out;
  out["num"] = std::move(num);
  out["den"] = integer_json(g.denominator());
  return out;
}

PhaseVector phase_from(const json& j) {
  IntVector num;
  for (const auto& x : j.at("num")) num.push_back(integer_from_json(x, "num"));
  return PhaseVector(std::move(num), integer_from_json(j.at("den"), "den"));
}

ordered_json phases_json(const std::vector<PhaseVector>& gs) {
  ordered_json out = ordered_json::array();
  for (const auto& g : gs) out.push_back(phase_json(g));
  return out;
}

std::vector<PhaseVector> phases_from(const json& j) {
  std::vector<PhaseVector> out;
  for (const auto& x : j) out.push_back(phase_from(x));
  return out;
}

ordered_json ints_json(const IntVector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

IntVector ints_from(const json& j) {
  IntVector out;
  for (const auto& x : j) out.push_back(integer_from_json(x, "integer"));
  return out;
}

ordered_json entries_json(const std::vector<DiamondEntry>& es) {
  ordered_json out = ordered_json::array();
  for (const auto& e : es) {
    ordered_json x;
    x["p"] = to_string(e.p);
    x["q"] = to_string(e.q);
    x["h"] = integer_json(e.h);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<DiamondEntry> entries_from(const json& j) {
  std::vector<DiamondEntry> out;
  for (const auto& x : j)
    out.push_back({parse_rational(x.at("p").get<std::string>()),
                   parse_rational(x.at("q").get<std::string>()),
                   integer_from_json(x.at("h"), "h")});
  return out;
}

}  // namespace

DiamondSummary summarize(const HodgeDiamond& d, std::string label) {
  return {std::move(label), d.dimension(), entries_of(d)};
}

SectorSummary summarize(const Sector& s, const HodgeDiamond& contribution) {
  return {s.gamma, s.fixed_indices, s.age, to_string(s.restriction.kind),
          entries_of(contribution)};
}

ordered_json to_json(const ReportDocument& r) {
  ordered_json out;
  out["command"] = r.command;
  out["inputs"] = r.inputs;
  out["status"] = r.status;
  out["exit_code"] = r.exit_code;

  ordered_json pots = ordered_json::array();
  for (const auto& p : r.potentials) {
    ordered_json x;
    x["label"] = p.label;
    x["polynomial"] = p.polynomial;
    ordered_json rows = ordered_json::array();
    for (const auto& row : p.matrix) rows.push_back(ints_json(row));
    x["matrix"] = std::move(rows);
    x["weights"] = ints_json(p.weights);
    x["degree"] = integer_json(p.degree);
    x["reduced_weights"] = ints_json(p.reduced_weights);
    x["reduced_degree"] = integer_json(p.reduced_degree);
    x["calabi_yau"] = p.calabi_yau;
    x["gorenstein"] = p.gorenstein;
    x["aut_order"] = integer_json(p.aut_order);
    ordered_json pieces = ordered_json::array();
    for (const auto& piece : p.pieces) {
      ordered_json y;
      y["kind"] = piece.kind;
      y["variables"] = piece.variables;
      y["exponents"] = ints_json(piece.exponents);
      pieces.push_back(std::move(y));
    }
    x["pieces"] = std::move(pieces);
    pots.push_back(std::move(x));
  }
  out["potentials"] = std::move(pots);

  ordered_json groups = ordered_json::array();
  for (const auto& g : r.groups) {
    ordered_json x;
    x["label"] = g.label;
    x["order"] = integer_json(g.order);
    x["generators"] = phases_json(g.generators);
    groups.push_back(std::move(x));
  }
  out["groups"] = std::move(groups);

  ordered_json models = ordered_json::array();
  for (const auto& m : r.models) {
    ordered_json x;
    x["label"] = m.label;
    x["fermat_degree"] = integer_json(m.fermat_degree);
    x["group_order"] = integer_json(m.group_order);
    x["generators"] = phases_json(m.generators);
    x["effective_generators"] = phases_json(m.effective_generators);
    models.push_back(std::move(x));
  }
  out["models"] = std::move(models);

  ordered_json sectors = ordered_json::array();
  for (const auto& s : r.sectors) {
    ordered_json x;
    x["gamma"] = phase_json(s.gamma);
    x["fixed_indices"] = s.fixed_indices;
    x["age"] = to_string(s.age);
    x["kind"] = s.kind;
    x["contribution"] = entries_json(s.contribution);
    sectors.push_back(std::move(x));
  }
  out["sectors"] = std::move(sectors);

  ordered_json diamonds = ordered_json::array();
  for (const auto& d : r.diamonds) {
    ordered_json x;
    x["label"] = d.label;
    x["dimension"] = integer_json(d.dimension);
    x["entries"] = entries_json(d.entries);
    diamonds.push_back(std::move(x));
  }
  out["diamonds"] = std::move(diamonds);

  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json x;
    x["name"] = c.name;
    x["passed"] = c.passed;
    x["detail"] = c.detail;
    checks.push_back(std::move(x));
  }
  out["checks"] = std::move(checks);
  out["messages"] = r.messages;
  if (r.emitted) out["emitted"] = to_json(*r.emitted);
  return out;
}

ReportDocument report_from_json(const json& j) {
  ReportDocument r;
  try {
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs").get<std::vector<std::string>>();
    r.status = j.at("status").get<std::string>();
    r.exit_code = j.at("exit_code").get<int>();
    for (const auto& x : j.at("potentials")) {
      PotentialSummary p;
      p.label = x.at("label").get<std::string>();
      p.polynomial = x.at("polynomial").get<std::string>();
      for (const auto& row : x.at("matrix")) p.matrix.push_back(ints_from(row));
      p.weights = ints_from(x.at("weights"));
      p.degree = integer_from_json(x.at("degree"), "degree");
      p.reduced_weights = ints_from(x.at("reduced_weights"));
      p.reduced_degree = integer_from_json(x.at("reduced_degree"), "reduced_degree");
      p.calabi_yau = x.at("calabi_yau").get<bool>();
      p.gorenstein = x.at("gorenstein").get<bool>();
      p.aut_order = integer_from_json(x.at("aut_order"), "aut_order");
      for (const auto& y : x.at("pieces"))
        p.pieces.push_back({y.at("kind").get<std::string>(),
                            y.at("variables").get<std::vector<std::size_t>>(),
                            ints_from(y.at("exponents"))});
      r.potentials.push_back(std::move(p));
    }
    for (const auto& x : j.at("groups"))
      r.groups.push_back({x.at("label").get<std::string>(), integer_from_json(x.at("order"), "order"),
                          phases_from(x.at("generators"))});
    for (const auto& x : j.at("models"))
      r.models.push_back({x.at("label").get<std::string>(),
                          integer_from_json(x.at("fermat_degree"), "fermat_degree"),
                          integer_from_json(x.at("group_order"), "group_order"),
                          phases_from(x.at("generators")),
                          phases_from(x.at("effective_generators"))});
    for (const auto& x : j.at("sectors"))
      r.sectors.push_back({phase_from(x.at("gamma")),
                           x.at("fixed_indices").get<std::vector<std::size_t>>(),
                           parse_rational(x.at("age").get<std::string>()),
                           x.at("kind").get<std::string>(), entries_from(x.at("contribution"))});
    for (const auto& x : j.at("diamonds"))
      r.diamonds.push_back({x.at("label").get<std::string>(),
                            integer_from_json(x.at("dimension"), "dimension"),
                            entries_from(x.at("entries"))});
    for (const auto& x : j.at("checks"))
      r.checks.push_back({x.at("name").get<std::string>(), x.at("passed").get<bool>(),
                          x.at("detail").get<std::string>()});
    r.messages = j.at("messages").get<std::vector<std::string>>();
    if (auto it = j.find("emitted"); it != j.end()) r.emitted = parse_input(*it);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  return r;
}

}  // namespace bhk::cli

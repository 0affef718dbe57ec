#pragma once

#include "cli/input.hpp"

#include <bhk/hodge.hpp>
#include <bhk/potential.hpp>
#include <bhk/shioda.hpp>
#include <bhk/symmetry.hpp>

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bhk::cli {

struct PieceSummary {
  std::string kind;
  std::vector<std::size_t> variables;
  IntVector exponents;
  friend bool operator==(const PieceSummary&, const PieceSummary&) = default;
};

struct PotentialSummary {
  std::string label;
  std::string polynomial;
  std::vector<IntVector> matrix;
  IntVector weights;
  Integer degree;
  IntVector reduced_weights;
  Integer reduced_degree;
  bool calabi_yau = false;
  bool gorenstein = false;
  Integer aut_order;
  std::vector<PieceSummary> pieces;
  friend bool operator==(const PotentialSummary&, const PotentialSummary&) = default;
};

struct GroupSummary {
  std::string label;
  Integer order;
  std::vector<PhaseVector> generators;
  friend bool operator==(const GroupSummary&, const GroupSummary&) = default;
};

struct ModelSummary {
  std::string label;
  Integer fermat_degree;
  Integer group_order;
  std::vector<PhaseVector> generators;
  std::vector<PhaseVector> effective_generators;
  friend bool operator==(const ModelSummary&, const ModelSummary&) = default;
};

struct DiamondEntry {
  Rational p;
  Rational q;
  Integer h;
  friend bool operator==(const DiamondEntry&, const DiamondEntry&) = default;
};

struct DiamondSummary {
  std::string label;
  Integer dimension;
  std::vector<DiamondEntry> entries;  // ordered by (p + q, p)
  friend bool operator==(const DiamondSummary&, const DiamondSummary&) = default;
};

struct SectorSummary {
  PhaseVector gamma;
  std::vector<std::size_t> fixed_indices;
  Rational age;
  std::string kind;
  std::vector<DiamondEntry> contribution;  // unshifted invariant diamond
  friend bool operator==(const SectorSummary&, const SectorSummary&) = default;
};

struct CheckSummary {
  std::string name;
  bool passed = false;
  std::string detail;
  friend bool operator==(const CheckSummary&, const CheckSummary&) = default;
};

struct ReportDocument {
  std::string command;
  std::vector<std::string> inputs;
  std::string status = "ok";
  int exit_code = 0;
  std::vector<PotentialSummary> potentials;
  std::vector<GroupSummary> groups;
  std::vector<ModelSummary> models;
  std::vector<SectorSummary> sectors;
  std::vector<DiamondSummary> diamonds;
  std::vector<CheckSummary> checks;
  std::vector<std::string> messages;
  std::optional<InputDocument> emitted;
  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

PotentialSummary summarize(const InvertiblePotential& p, std::string label);
GroupSummary summarize(const PhaseGroup& g, std::string label);
ModelSummary summarize(const BirationalModel& m, std::string label);
DiamondSummary summarize(const HodgeDiamond& d, std::string label);
SectorSummary summarize(const Sector& s, const HodgeDiamond& contribution);

nlohmann::ordered_json to_json(const ReportDocument& r);
ReportDocument report_from_json(const nlohmann::json& j);

/// Reads "a/b" (or a bare integer).
Rational parse_rational(const std::string& s);

}  // namespace bhk::cli

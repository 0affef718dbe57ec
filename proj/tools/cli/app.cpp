#include "cli/app.hpp"

#include "cli/input.hpp"
#include "cli/report.hpp"

#include <bhk/hodge.hpp>
#include <bhk/potential.hpp>
#include <bhk/shioda.hpp>
#include <bhk/symmetry.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

namespace bhk::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension:
    case ErrorKind::domain:
      return exit_input;
    case ErrorKind::singular_matrix:
    case ErrorKind::condition_violation:
    case ErrorKind::invalid_symmetry:
    case ErrorKind::sl_violation:
    case ErrorKind::sector_diagnostic:
      return exit_precondition;
    case ErrorKind::resource_limit:
      return exit_resource;
  }
  return exit_input;
}

namespace {

struct Options {
  bool json = false;
  std::string file;
  std::string file_b;
  std::string output;
  std::string side = "direct";
  std::string scale;
  bool cr = false;
  bool invariant = false;
  bool check_mirror = false;
  std::uint64_t limit = 100000;
};

struct Job {
  ReportDocument report;
  std::ostringstream text;
};

OrbifoldDescriptor load_orbifold(const InputDocument& doc) {
  return build_orbifold(build_potential(doc.matrix), doc.generators);
}

std::string join_phases(const std::vector<PhaseVector>& gs) {
  if (gs.empty()) return "(trivial)";
  std::string s;
  for (std::size_t i = 0; i < gs.size(); ++i) s += (i ? ", " : "") + gs[i].to_string();
  return s;
}

std::string indices(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

void describe_potential(std::ostream& os, const PotentialSummary& p) {
  os << p.label << ": " << p.polynomial << '\n'
     << "  weights " << to_string(p.weights) << " degree " << p.degree << "  (reduced "
     << to_string(p.reduced_weights) << " / " << p.reduced_degree << ")\n"
     << "  Calabi-Yau " << (p.calabi_yau ? "yes" : "no") << ", Gorenstein "
     << (p.gorenstein ? "yes" : "no") << ", |Aut| = " << p.aut_order << '\n';
  for (const auto& piece : p.pieces)
    os << "  " << piece.kind << " on " << indices(piece.variables) << " exponents "
       << to_string(piece.exponents) << '\n';
}

void describe_group(std::ostream& os, const GroupSummary& g) {
  os << g.label << ": order " << g.order << ", generators " << join_phases(g.generators) << '\n';
}

void describe_model(std::ostream& os, const ModelSummary& m) {
  os << m.label << ": X_{" << m.fermat_degree << "I} / <" << join_phases(m.effective_generators)
     << ">  (|H| = " << m.group_order << ")\n";
}

void add_check(Job& job, std::string name, bool passed, std::string detail) {
  job.text << (passed ? "  ok    " : "  FAIL  ") << name;
  if (!detail.empty()) job.text << "  (" << detail << ')';
  job.text << '\n';
  job.report.checks.push_back({std::move(name), passed, std::move(detail)});
}

void cmd_validate(const Options& o, Job& job) {
  const auto doc = load_input(o.file);
  const auto orb = load_orbifold(doc);
  const auto& p = orb.potential;
  job.report.potentials.push_back(summarize(p, "potential"));
  const PhaseGroup aut = aut_group(p);
  const PhaseGroup sl = sl_group(p);
  job.report.groups.push_back(summarize(orb.j, "J"));
  job.report.groups.push_back(summarize(orb.group, "G"));
  job.report.groups.push_back(summarize(sl, "SL"));
  job.report.groups.push_back(summarize(aut, "Aut"));

  describe_potential(job.text, job.report.potentials.back());
  for (const auto& g : job.report.groups) describe_group(job.text, g);
  job.text << "|G/J| = " << orb.quotient_order << '\n';
  const Integer det = abs(determinant(p.exponents()));
  add_check(job, "aut_order", aut.order() == det,
            "|Aut| = " + aut.order().str() + ", |det A| = " + det.str());
  add_check(job, "J_in_G", orb.group.contains(orb.j), "");
  add_check(job, "G_in_SL", sl.contains(orb.group), "");
}

void cmd_mirror(const Options& o, Job& job) {
  const auto doc = load_input(o.file);
  const auto orb = load_orbifold(doc);
  const auto mirror = mirror_orbifold(orb);
  job.report.potentials.push_back(summarize(orb.potential, "potential"));
  job.report.potentials.push_back(summarize(mirror.potential, "transpose"));
  job.report.groups.push_back(summarize(orb.group, "G"));
  job.report.groups.push_back(summarize(mirror.group, "dual"));
  job.report.groups.push_back(summarize(mirror.j, "J_transpose"));

  InputDocument out_doc;
  out_doc.n = doc.n;
  out_doc.matrix = mirror.potential.exponents();
  out_doc.generators = mirror.group.generators();
  job.report.emitted = out_doc;

  describe_potential(job.text, job.report.potentials.back());
  for (const auto& g : job.report.groups) describe_group(job.text, g);
  job.text << "mirror quotient order |G^T/J| = " << mirror.quotient_order << '\n';
  job.report.messages.push_back("mirror quotient order " + mirror.quotient_order.str());

  const std::string body = to_json(out_doc).dump(2) + "\n";
  if (!o.output.empty()) {
    std::ofstream f(o.output);
    if (!f) throw InputError("cannot write " + o.output);
    f << body;
    job.text << "wrote " << o.output << '\n';
  } else {
    job.text << body;
  }
}

Integer parse_scale(const Options& o, const InputDocument& doc) {
  if (o.scale.empty()) return doc.scale.value_or(Integer(1));
  const Integer s = integer_from_json(nlohmann::json(o.scale), "--scale");
  if (s < 1) throw InputError("--scale must be positive");
  return s;
}

void cmd_model(const Options& o, Job& job) {
  const auto doc = load_input(o.file);
  const auto orb = load_orbifold(doc);
  const auto side = o.side == "mirror" ? ModelSide::mirror : ModelSide::direct;
  const auto model = birational_model(orb, side, parse_scale(o, doc));
  job.report.potentials.push_back(summarize(orb.potential, "potential"));
  job.report.models.push_back(summarize(model, o.side));
  job.report.models.push_back(summarize(model.reduced(), o.side + "_reduced"));
  for (const auto& m : job.report.models) describe_model(job.text, m);
}

void cmd_compare(const Options& o, Job& job) {
  const auto a = load_orbifold(load_input(o.file));
  const auto b = load_orbifold(load_input(o.file_b));
  const auto rep = compare_mirrors(a, b);
  job.report.potentials.push_back(summarize(a.potential, "first"));
  job.report.potentials.push_back(summarize(b.potential, "second"));
  job.report.groups.push_back(summarize(a.group, "G_first"));
  job.report.groups.push_back(summarize(b.group, "G_second"));
  job.report.models.push_back(summarize(rep.mirror_a, "mirror_first"));
  job.report.models.push_back(summarize(rep.mirror_b, "mirror_second"));
  if (rep.certificate) job.report.models.push_back(summarize(*rep.certificate, "certificate"));

  for (const auto& m : job.report.models) describe_model(job.text, m);
  add_check(job, "groups_equal", rep.groups_equal, "");
  add_check(job, "models_equal", rep.models_equal, "");
  add_check(job, "same_weights", rep.same_weights, "");
  if (rep.outside_exemplified_regime) {
    const std::string note = "equal groups on different weighted projective spaces";
    job.report.messages.push_back(note);
    job.text << "note: " << note << '\n';
  }
  if (rep.certificate) {
    job.text << "mirrors are birational\n";
  } else {
    job.report.exit_code = exit_mismatch;
    job.report.status = "mismatch";
    job.text << (rep.groups_equal ? "mirror models differ\n"
                                   : "groups differ; no certificate\n");
  }
}

std::string show(const Rational& r) {
  return denominator(r) == 1 ? numerator(r).str() : to_string(r);
}

std::string entries_text(const std::vector<DiamondEntry>& es) {
  std::string s;
  for (const auto& e : es) {
    if (!s.empty()) s += ' ';
    s += "h^{" + show(e.p) + "," + show(e.q) + "}=" + e.h.str();
  }
  return s;
}

void cmd_hodge(const Options& o, Job& job) {
  const auto orb = load_orbifold(load_input(o.file));
  job.report.potentials.push_back(summarize(orb.potential, "potential"));
  job.report.groups.push_back(summarize(orb.group, "G"));
  const auto sectors = enumerate_sectors(orb, o.limit);

  job.text << std::left << std::setw(28) << "element" << std::setw(14) << "fixed"
           << std::setw(8) << "age" << std::setw(14) << "locus" << "invariant cohomology\n";
  for (const auto& s : sectors) {
    const auto contribution = invariant_hypersurface_diamond(s, orb);
    job.report.sectors.push_back(summarize(s, contribution));
    const auto& row = job.report.sectors.back();
    job.text << std::left << std::setw(28) << s.gamma.to_string() << std::setw(14)
             << indices(s.fixed_indices) << std::setw(8) << show(s.age) << std::setw(14)
             << row.kind << entries_text(row.contribution) << '\n';
  }
  job.text << std::right;

  if (o.invariant) {
    const auto d = invariant_hypersurface_diamond(sectors.front(), orb);
    job.report.diamonds.push_back(summarize(d, "invariant"));
    job.text << "\ninvariant diamond\n" << d.to_string();
  }
  if (o.cr || !o.invariant) {
    HodgeDiamond cr(static_cast<long>(orb.potential.num_vars()) - 2);
    for (std::size_t i = 0; i < sectors.size(); ++i)
      cr += invariant_hypersurface_diamond(sectors[i], orb).shifted(sectors[i].age, cr.dimension());
    job.report.diamonds.push_back(summarize(cr, "chen_ruan"));
    job.text << "\nChen-Ruan diamond\n" << cr.to_string();
    add_check(job, "conjugation_symmetry", cr.conjugation_symmetric(), "");
  }
  if (o.check_mirror) {
    const auto mc = mirror_check(orb, o.limit);
    job.report.diamonds.push_back(summarize(mc.mirror_diamond, "mirror_chen_ruan"));
    job.text << "\nmirror Chen-Ruan diamond\n" << mc.mirror_diamond.to_string();
    std::string detail;
    for (const auto& m : mc.mismatches) detail += (detail.empty() ? "" : "; ") + m;
    add_check(job, "mirror_symmetry", mc.passed, detail);
    job.text << "mirror check: " << (mc.passed ? "PASS" : "FAIL") << '\n';
    if (!mc.passed) {
      job.report.exit_code = exit_mismatch;
      job.report.status = "mismatch";
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Invertible-potential orbifolds: mirrors, Fermat quotient models and Hodge numbers", "bhk"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Print a JSON report instead of text");

  auto* validate = app.add_subcommand("validate", "Check an orbifold description");
  validate->add_option("file", o.file, "Input JSON")->required();

  auto* mirror = app.add_subcommand("mirror", "Construct the BHK mirror");
  mirror->add_option("file", o.file, "Input JSON")->required();
  mirror->add_option("-o,--output", o.output, "Write the mirror description here");

  auto* model = app.add_subcommand("model", "Fermat quotient model via the Shioda map");
  model->add_option("file", o.file, "Input JSON")->required();
  model->add_option("--side", o.side, "direct or mirror")
      ->check(CLI::IsMember({"direct", "mirror"}));
  model->add_option("--scale", o.scale, "Use Fermat degree scale * d");

  auto* compare = app.add_subcommand("compare", "Compare the mirrors of two orbifolds");
  compare->add_option("first", o.file, "Input JSON")->required();
  compare->add_option("second", o.file_b, "Input JSON")->required();

  auto* hodge = app.add_subcommand("hodge", "Twisted sectors and Hodge diamonds");
  hodge->add_option("file", o.file, "Input JSON")->required();
  auto* cr = hodge->add_flag("--cr", o.cr, "Chen-Ruan diamond (default)");
  hodge->add_flag("--invariant", o.invariant, "Invariant diamond of the untwisted sector")
      ->excludes(cr);
  hodge->add_flag("--check-mirror", o.check_mirror, "Compare against the BHK mirror");
  hodge->add_option("--limit", o.limit, "Refuse groups larger than this");

  for (auto* sub : {validate, mirror, model, compare, hodge}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return exit_ok;
    }
    err << "error: " << e.what() << '\n';
    return exit_input;
  }

  Job job;
  const auto* sub = app.get_subcommands().front();
  job.report.command = sub->get_name();
  job.report.inputs.push_back(o.file);
  if (!o.file_b.empty()) job.report.inputs.push_back(o.file_b);

  const std::map<std::string, std::function<void(const Options&, Job&)>> table{
      {"validate", cmd_validate}, {"mirror", cmd_mirror}, {"model", cmd_model},
      {"compare", cmd_compare},   {"hodge", cmd_hodge}};
  auto fail = [&](int code, const std::string& what) {
    job.report.exit_code = code;
    job.report.status = "error";
    job.report.messages.push_back(what);
    err << "error: " << what << '\n';
  };
  try {
    table.at(job.report.command)(o, job);
  } catch (const InputError& e) {
    fail(exit_input, e.what());
  } catch (const Error& e) {
    fail(exit_code_for(e.kind()), e.what());
  } catch (const std::exception& e) {
    fail(exit_input, e.what());
  }

  if (o.json)
    out << to_json(job.report).dump(2) << '\n';
  else if (job.report.status != "error")
    out << job.text.str();
  return job.report.exit_code;
}

}  // namespace bhk::cli

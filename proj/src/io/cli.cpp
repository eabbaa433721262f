#include "degen/io/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <future>
#include <iostream>

#include "degen/error.hpp"
#include "degen/exactalg/decomposition.hpp"
#include "degen/io/json_io.hpp"

namespace degen::io {

namespace {

namespace fs = std::filesystem;

void print(std::ostream& os, const Json& j) { os << j.dump(2) << "\n"; }

Json error_json(const char* kind, const std::string& path, const std::string& reason) {
  Json j{{"error", kind}, {"reason", reason}};
  if (!path.empty()) j["path"] = path;
  return j;
}

// Maps library exceptions to an error payload and exit code.
template <typename F>
int guarded(std::ostream& err, F&& f) {
  try {
    return f();
  } catch (const ValidationError& e) {
    print(err, error_json("validation", e.path().empty() ? "/" : e.path(), e.reason()));
    return kValidation;
  } catch (const InvalidMonodromy& e) {
    Json j = error_json("validation", "/matrix", e.what());
    if (!e.factor().empty()) j["factor"] = e.factor();
    print(err, j);
    return kValidation;
  } catch (const InconsistencyError& e) {
    print(err, error_json("inconsistency", "", e.what()));
    return kInconsistency;
  } catch (const Error& e) {
    print(err, error_json("validation", "", e.what()));
    return kValidation;
  } catch (const std::exception& e) {
    print(err, error_json("io", "", e.what()));
    return kUsage;
  }
}

int analyze_one(const fs::path& file, const PresetResolver& presets, bool strict, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const Descriptor d = parse_descriptor(read_json_file(file), presets);
    const Analysis a = analyze(d);
    print(out, to_json(a, d));
    if (!a.consistent()) return int(kInconsistency);
    if (strict && a.report.has_violation()) return int(kLintViolation);
    return int(kOk);
  });
}

int analyze_batch(const fs::path& dir, const fs::path& out_dir, const PresetResolver& presets, bool strict,
                  std::ostream& out, std::ostream& err) {
  if (!fs::is_directory(dir)) {
    print(err, error_json("io", "", "not a directory: " + dir.string()));
    return kUsage;
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  fs::create_directories(out_dir);

  struct Result {
    int code;
    fs::path output;
  };
  std::vector<std::future<Result>> jobs;
  for (const auto& f : files)
    jobs.push_back(std::async(std::launch::async, [&, f] {
      std::ostringstream o, e;
      const int code = analyze_one(f, presets, strict, o, e);
      const fs::path target = out_dir / (f.stem().string() + (o.str().empty() ? ".error.json" : ".report.json"));
      std::ofstream(target) << (o.str().empty() ? e.str() : o.str());
      return Result{code, target};
    }));
  Json summary = Json::object();
  int worst = kOk;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const Result r = jobs[i].get();
    worst = std::max(worst, r.code);
    summary[files[i].filename().string()] = Json{{"exit", r.code}, {"output", r.output.string()}};
  }
  print(out, Json{{"reports", summary}});
  return worst;
}

Json rotations_json(const exactalg::RotationMultiset& r) {
  Json j = Json::array();
  for (const auto& x : r) j.push_back(to_json(x.value()));
  return j;
}

int monodromy_cmd(const fs::path& file, const std::optional<std::string>& branch, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const Json in = read_json_file(file);
    if (!in.is_object() || !in.contains("matrix")) throw ValidationError("/matrix", "missing required field");
    const RationalMatrix t = matrix_from_json(in["matrix"], "/matrix");
    if (t.rows() != t.cols()) throw ValidationError("/matrix", "expected a square matrix");
    long center = 0;
    if (in.contains("center")) {
      if (!in["center"].is_number_integer()) throw ValidationError("/center", "expected an integer");
      center = in["center"].get<long>();
    }
    const unsigned long ell = exactalg::quasi_unipotence_order(t);
    const auto cd = exactalg::chevalley_decompose(t);
    const RationalMatrix n = exactalg::nilpotent_log(cd.unipotent);
    const auto w = exactalg::weight_filtration(n, center);
    Json j;
    j["ell"] = ell;
    j["T_s"] = to_json(cd.semisimple);
    j["T_u"] = to_json(cd.unipotent);
    j["N"] = to_json(n);
    Json rot = Json::object();
    for (auto b : {monodromy::Branch::Lower, monodromy::Branch::Upper})
      if (!branch || monodromy::parse_branch(*branch) == b)
        rot[monodromy::to_string(b)] = rotations_json(monodromy::residue_rotations(t, b));
    j["rotations"] = rot;
    j["center"] = center;
    Json g = Json::object();
    for (const auto& [wt, dim] : w.graded) g[std::to_string(wt)] = dim;
    j["weight_graded"] = g;
    print(out, j);
    return int(kOk);
  });
}

Json section_json(const monodromy::TwistedFrameSection& s) {
  Json j = Json::array();
  for (const auto& f : s.coefficients()) {
    Json c = Json::array();
    for (const auto& x : f.coefficients()) c.push_back(to_json(x));
    j.push_back(c);
  }
  return j;
}

int exponents_cmd(const fs::path& file, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Json in = read_json_file(file);
    const auto need = [&](const char* k) -> const Json& {
      if (!in.is_object() || !in.contains(k)) throw ValidationError(std::string("/") + k, "missing required field");
      return in[k];
    };
    const auto integer = [&](const char* k) {
      if (!need(k).is_number_integer()) throw ValidationError(std::string("/") + k, "expected an integer");
      return need(k).get<long>();
    };
    const long ell = integer("ell");
    const long trunc = integer("truncation");
    std::vector<long> labels;
    for (std::size_t i = 0; i < need("labels").size(); ++i) {
      if (!in["labels"][i].is_number_integer()) throw ValidationError("/labels/" + std::to_string(i), "expected an integer");
      labels.push_back(in["labels"][i].get<long>());
    }
    const monodromy::TwistedFrame frame(ell, labels);
    std::vector<monodromy::TwistedFrameSection> sections;
    const Json& ss = need("sections");
    for (std::size_t s = 0; s < ss.size(); ++s) {
      const std::string at = "/sections/" + std::to_string(s);
      if (!ss[s].is_array() || ss[s].size() != labels.size())
        throw ValidationError(at, "expected one coefficient list per frame element");
      std::vector<exactalg::PolynomialQ> f;
      for (std::size_t c = 0; c < ss[s].size(); ++c) {
        std::vector<Rational> co;
        for (std::size_t d = 0; d < ss[s][c].size(); ++d)
          co.push_back(rational_from_json(ss[s][c][d], at + "/" + std::to_string(c) + "/" + std::to_string(d)));
        f.emplace_back(co);
      }
      sections.emplace_back(f, trunc);
    }
    const auto rep = monodromy::adapt_basis(sections, frame);
    Json j;
    j["exponents"] = rotations_json(rep.exponents);
    j["per_section"] = rotations_json(rep.per_section);
    Json basis = Json::array();
    for (const auto& b : rep.basis) basis.push_back(section_json(b));
    j["basis"] = basis;
    if (in.contains("grF_rotations")) {
      exactalg::RotationMultiset r;
      for (std::size_t i = 0; i < in["grF_rotations"].size(); ++i)
        r.emplace_back(rational_from_json(in["grF_rotations"][i], "/grF_rotations/" + std::to_string(i)));
      j["eigenvalue_check"] = monodromy::exponents_vs_eigenvalues_check(rep, r);
    }
    print(out, j);
    return int(kOk);
  });
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boundary asymptotics of BCOV invariants for one-parameter degenerations"};
  app.name("degen");
  app.require_subcommand(1);

  std::optional<std::string> presets_dir;
  bool strict = false;
  std::string input, batch_dir, out_dir = "reports";
  auto* an = app.add_subcommand("analyze", "Analyze a degeneration descriptor");
  an->add_option("descriptor", input, "Descriptor JSON");
  an->add_option("--batch", batch_dir, "Analyze every *.json in a directory");
  an->add_option("--out", out_dir, "Output directory for --batch")->capture_default_str();
  an->add_option("--presets-dir", presets_dir, "MHS preset directory (overrides BCOV_PRESETS)");
  an->add_flag("--strict", strict, "Exit 4 when a lint reports a violation");

  std::optional<std::string> branch;
  std::string mono_file;
  auto* mo = app.add_subcommand("monodromy", "Decompose a monodromy matrix");
  mo->add_option("matrix", mono_file, "JSON {matrix, center}")->required();
  mo->add_option("--branch", branch, "Only this branch of log")->check(CLI::IsMember({"upper", "lower"}));

  std::string exp_file;
  auto* ex = app.add_subcommand("exponents", "Elementary exponents of a twisted frame");
  ex->add_option("sections", exp_file, "JSON {ell, labels, truncation, sections, grF_rotations?}")->required();

  std::string csv, model = "hodge";
  auto* fi = app.add_subcommand("fit", "Fit log-norm samples to a log t^2 + b log log t^-1 + C");
  fi->add_option("csv", csv, "CSV with columns t, value")->required();
  fi->add_option("--model", model, "Coefficient naming")->check(CLI::IsMember({"bcov", "hodge"}))->capture_default_str();

  std::string torus_file;
  auto* to = app.add_subcommand("torus", "L2 covolumes and B-factor of a flat torus");
  to->add_option("descriptor", torus_file, "JSON {n, J, omega}")->required();

  std::string canon_file;
  auto* ca = app.add_subcommand("canonicalize", "Print the canonical form of a descriptor");
  ca->add_option("descriptor", canon_file, "Descriptor JSON")->required();
  ca->add_option("--presets-dir", presets_dir, "MHS preset directory (overrides BCOV_PRESETS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int(kOk) : int(kUsage);
  }

  if (an->parsed()) {
    const auto presets = PresetResolver::from(presets_dir);
    if (!batch_dir.empty()) return analyze_batch(batch_dir, out_dir, presets, strict, out, err);
    if (input.empty()) {
      err << "analyze: a descriptor or --batch DIR is required\n";
      return kUsage;
    }
    return analyze_one(input, presets, strict, out, err);
  }
  if (mo->parsed()) return monodromy_cmd(mono_file, branch, out, err);
  if (ex->parsed()) return exponents_cmd(exp_file, out, err);
  if (fi->parsed())
    return guarded(err, [&] {
      std::ifstream in(csv);
      if (!in) throw std::runtime_error("cannot read " + csv);
      print(out, to_json(periods::fit_asymptotics(periods::read_csv(in)), model));
      return int(kOk);
    });
  if (to->parsed())
    return guarded(err, [&] {
      print(out, to_json(hodgemetrics::covolume_report(torus_from_json(read_json_file(torus_file)))));
      return int(kOk);
    });
  if (ca->parsed())
    return guarded(err, [&] {
      print(out, serialize(parse_descriptor(read_json_file(canon_file), PresetResolver::from(presets_dir))));
      return int(kOk);
    });
  return kUsage;
}

}  // namespace degen::io

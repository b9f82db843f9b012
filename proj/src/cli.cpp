#include "homlie/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "homlie/dsl.hpp"
#include "homlie/json_io.hpp"

namespace homlie {

namespace {

/// Usage and IO problems detected by the front end itself.
struct UsageError {
  std::string kind;
  std::string message;
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

struct Run {
  Json inputs = Json::array();
  Json outputs = Json::object();
  VerificationReport report;

  Document load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError{"IOError", "cannot read '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    inputs.push_back({{"path", path}, {"sha256", sha256_hex(text)}});
    return parse_document(text);
  }

  void add_prefixed(const VerificationReport& sub, const std::string& prefix) {
    for (Check c : sub.checks()) {
      c.name = prefix + "/" + c.name;
      report.add(std::move(c));
    }
  }
};

Scalar scalar_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_scalar(text);
  } catch (const Error& e) {
    throw UsageError{"UsageError", "--" + flag + ": " + e.what()};
  }
}

std::pair<long, long> window_arg(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument("no colon");
    std::size_t used_lo = 0, used_hi = 0;
    const long lo = std::stol(text.substr(0, colon), &used_lo);
    const long hi = std::stol(text.substr(colon + 1), &used_hi);
    if (used_lo != colon || used_hi != text.size() - colon - 1) throw std::invalid_argument("trailing text");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError{"UsageError", "--window expects LO:HI, got '" + text + "'"};
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) out.push_back(part);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

Vector basis_vector(const std::vector<std::string>& names, const std::string& name) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return unit_vector(names.size(), i);
  throw UsageError{"UsageError", "unknown basis element '" + name + "'"};
}

Check equality_check(std::string name, bool equal, std::string note) {
  Check c;
  c.name = std::move(name);
  if (!equal) {
    c.status = CheckStatus::Fail;
    c.note = std::move(note);
  }
  return c;
}

Json rep_json(const std::vector<std::string>& names, const std::vector<Matrix>& maps) {
  Json out = Json::object();
  for (std::size_t i = 0; i < maps.size(); ++i) out[names[i]] = to_json(maps[i]);
  return out;
}

struct Options {
  std::string file;
  std::string hom, lie, morphism, sigma, rep, reps, cartan, candidates, kind, window;
  std::string lambda, b0, eta0, nu0, mu1, gamma0;
  bool induced = false, verify = false, json = true;
  long n = 0, tau = 0, mu = 0;
  std::size_t trials = 8;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> local_seed;
};

void cmd_check(const Options& o, Run& run) {
  const Document doc = run.load(o.file);
  const bool all = o.hom.empty() && o.lie.empty();
  if (!o.lie.empty()) run.add_prefixed(verify_lie(lie_algebra_of(doc, o.lie)), o.lie);
  if (!o.hom.empty()) {
    run.add_prefixed(verify_hom_lie(hom_lie_of(doc, o.hom), true), o.hom);
  }
  if (!all) return;
  std::size_t family_index = 0;
  for (const auto& item : doc.items) {
    if (const auto* a = std::get_if<AlgebraDef>(&item)) {
      run.add_prefixed(verify_lie(a->lie()), a->name);
    } else if (const auto* m = std::get_if<MorphismDef>(&item)) {
      run.add_prefixed(verify_hom_lie(hom_lie_of(doc, m->name), true), m->name);
    } else if (const auto* r = std::get_if<RepDef>(&item)) {
      if (r->beta)
        run.add_prefixed(verify_hom_rep(hom_rep_of(doc, r->name)), r->name);
      else
        run.add_prefixed(verify_lie_rep(lie_rep_of(doc, r->name)), r->name);
    } else {
      const auto& f = std::get<FamilyDef>(item);
      const auto [lo, hi] = family_window(f);
      const WindowedModule wm = build_family(family_params(f), lo, hi);
      run.add_prefixed(verify_family_window(wm), "family" + std::to_string(family_index++));
    }
  }
}

void cmd_twist(const Options& o, Run& run) {
  const Document doc = run.load(o.file);
  const MorphismDef& m = require_morphism(doc, o.morphism);
  const LieAlgebra lie = lie_algebra_of(doc, m.on);
  const HomLieAlgebra hom = yau_twist(lie, m.matrix);
  run.report.append(verify_hom_lie(hom, true));
  run.outputs["algebra"] = m.on;
  run.outputs["basis"] = hom.names;
  run.outputs["alpha"] = to_json(hom.alpha);
  run.outputs["twisted_constants"] = to_json(hom.c_alpha);
  if (o.induced) {
    const LieAlgebra back = induced_lie_algebra(hom);
    run.outputs["induced_constants"] = to_json(back.c);
    run.report.add(equality_check("induced-recovers-original", back.c == lie.c,
                                  "induced bracket differs from the original bracket"));
    run.report.add(equality_check("twist-round-trip", yau_twist(back, hom.alpha) == hom,
                                  "twisting the induced algebra does not reproduce the Hom-Lie algebra"));
  }
}

void cmd_killing(const Options& o, Run& run) {
  const Document doc = run.load(o.file);
  const LieAlgebra lie = lie_algebra_of(doc, o.lie);
  const KillingForm k = killing_form(lie);
  run.report.add(killing_invariance(lie, k));
  run.outputs["gram"] = to_json(k.gram);
  run.outputs["semisimple"] = is_semisimple(lie);
}

void cmd_decompose(const Options& o, Run& run) {
  const Document doc = run.load(o.file);
  const SimpleDecomposition d = decompose_simple_ideals(lie_algebra_of(doc, o.lie), o.trials, o.local_seed.value_or(o.seed));
  run.report.append(d.report);
  Json ideals = Json::array();
  for (const auto& s : d.ideals) ideals.push_back(to_json(s));
  run.outputs["ideals"] = ideals;
}

void cmd_cyclic(const Options& o, Run& run) {
  const Document doc = run.load(o.file);
  const LieAlgebra g1 = lie_algebra_of(doc, o.lie);
  const MorphismDef& sigma = require_morphism(doc, o.sigma);
  if (sigma.on != o.lie)
    throw UsageError{"UsageError", "morphism '" + o.sigma + "' is not defined on '" + o.lie + "'"};
  if (o.n < 1) throw UsageError{"UsageError", "--n must be at least 1"};
  const CyclicSum cs = cyclic_sum_construction(g1, sigma.matrix, static_cast<std::size_t>(o.n));
  const HomLieAlgebra hom = yau_twist(cs.algebra, cs.alpha);
  run.report.append(verify_hom_lie(hom, true));
  run.report.append(simplicity_probe(hom, 20, o.seed));
  run.outputs["basis"] = cs.algebra.names;
  run.outputs["alpha"] = to_json(cs.alpha);
  run.outputs["constants"] = to_json(cs.algebra.c);
  run.outputs["twisted_constants"] = to_json(hom.c_alpha);
}

void cmd_rep_verify(const Options& o, Run& run) {
  const Document doc = run.load(o.file);
  const RepDef& r = require_rep(doc, o.rep);
  if (r.beta) {
    const HomRep h = hom_rep_of(doc, o.rep);
    run.report.append(verify_hom_rep(h));
    run.outputs["kind"] = "hom";
    run.outputs["beta"] = to_json(h.beta);
    run.outputs["actions"] = rep_json(h.algebra.names, h.rho_beta);
  } else {
    const LieRep l = lie_rep_of(doc, o.rep);
    run.report.append(verify_lie_rep(l));
    run.outputs["kind"] = "lie";
    run.outputs["actions"] = rep_json(l.algebra.names, l.rho);
  }
  run.outputs["dim"] = r.dim;
}

void cmd_rep_intertwiner(const Options& o, Run& run) {
  const Document doc = run.load(o.file);
  const LieRep rep = lie_rep_of(doc, o.rep);
  const MorphismDef& m = require_morphism(doc, o.morphism);
  if (m.on != require_rep(doc, o.rep).of)
    throw UsageError{"UsageError", "morphism '" + o.morphism + "' and rep '" + o.rep + "' live on different algebras"};
  const Subspace solutions = solve_intertwiner(rep, m.matrix);
  Json basis = Json::array();
  for (const auto& v : solutions.basis()) basis.push_back(to_json(Matrix::unvectorize(v, rep.dim(), rep.dim())));
  run.outputs["solution_dim"] = solutions.dim();
  run.outputs["solution_basis"] = basis;
  try {
    const Matrix beta = pick_invertible(solutions, rep.dim());
    run.outputs["beta"] = to_json(beta);
    const HomRep hom = hom_rep_from_lie(rep, m.matrix, beta);
    run.report.add(Check{"invertible-solution", CheckStatus::Pass, {}, std::nullopt, {}});
    run.report.append(verify_hom_rep(hom));
    run.outputs["actions"] = rep_json(hom.algebra.names, hom.rho_beta);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoInvertibleSolution) throw;
    run.report.add(Check{"invertible-solution", CheckStatus::Fail, {}, std::nullopt, e.what()});
  }
}

void cmd_rep_tensor(const Options& o, Run& run) {
  const Document doc = run.load(o.file);
  const std::vector<std::string> names = split(o.reps, ',');
  if (o.n < 1 || names.size() != static_cast<std::size_t>(o.n))
    throw UsageError{"UsageError", "--reps must list exactly --n representations"};
  std::vector<LieRep> reps;
  std::vector<Matrix> betas;
  std::string algebra;
  for (const auto& name : names) {
    const RepDef& r = require_rep(doc, name);
    if (!r.beta) throw UsageError{"UsageError", "rep '" + name + "' needs a beta to serve as a stage intertwiner"};
    if (!algebra.empty() && r.of != algebra)
      throw UsageError{"UsageError", "reps must all be defined over the same algebra"};
    algebra = r.of;
    reps.push_back(lie_rep_of(doc, name));
    betas.push_back(*r.beta);
  }
  const LieAlgebra g1 = lie_algebra_of(doc, algebra);
  Matrix sigma = Matrix::identity(g1.dim());
  if (!o.sigma.empty()) {
    const MorphismDef& m = require_morphism(doc, o.sigma);
    if (m.on != algebra) throw UsageError{"UsageError", "morphism '" + o.sigma + "' is not defined on '" + algebra + "'"};
    sigma = m.matrix;
  }
  const CyclicSum cs = cyclic_sum_construction(g1, sigma, static_cast<std::size_t>(o.n));
  const TensorHomRep t = tensor_hom_rep(reps, betas, cs);
  run.report.append(t.report);
  run.outputs["dim"] = t.rep.dim();
  run.outputs["beta"] = to_json(t.rep.beta);
  run.outputs["alpha"] = to_json(cs.alpha);
}

void cmd_sl2_family(const Options& o, Run& run) {
  Sl2FamilyParams p;
  try {
    p.kind = parse_family_kind(o.kind);
  } catch (const Error& e) {
    throw UsageError{"UsageError", e.what()};
  }
  p.lambda = scalar_arg("lambda", o.lambda);
  p.b0 = scalar_arg("b0", o.b0);
  p.n = o.n;
  p.tau = o.tau;
  p.mu = o.mu;
  const auto [lo, hi] = o.window.empty() ? default_window(p) : window_arg(o.window);
  const WindowedModule m = build_family(p, lo, hi);
  run.outputs["family"] = to_json(m);
  if (o.verify) {
    run.report.append(verify_family_window(m));
    if (p.kind == FamilyKind::FiniteDim) run.report.add(irreducibility_probe(window_hom_rep(m), 20, o.seed));
  }
}

void cmd_sl2_solve(const Options& o, Run& run) {
  const auto [lo, hi] = window_arg(o.window);
  const GeneralAnsatz a = solve_general_parameters(scalar_arg("eta0", o.eta0), scalar_arg("nu0", o.nu0),
                                                   scalar_arg("mu1", o.mu1), scalar_arg("gamma0", o.gamma0),
                                                   Scalar::lambda(), lo, hi);
  run.report.append(a.report);
  run.outputs["solution"] = to_json(a);
}

void cmd_weights(const Options& o, Run& run) {
  const Document doc = run.load(o.file);
  const RepDef& def = require_rep(doc, o.rep);
  std::optional<HomRep> hom;
  LieRep lie = def.beta ? (hom.emplace(hom_rep_of(doc, o.rep)), lie_rep_from_hom(*hom)) : lie_rep_of(doc, o.rep);

  std::vector<Vector> h;
  for (const auto& name : split(o.cartan, ',')) h.push_back(basis_vector(lie.algebra.names, name));
  const CartanData cartan = make_cartan(lie.algebra, h);

  std::optional<std::vector<Functional>> candidates;
  if (!o.candidates.empty()) {
    candidates.emplace();
    for (const auto& item : split(o.candidates, ',')) {
      Functional f;
      for (const auto& part : split(item, ':')) f.push_back(scalar_arg("candidates", part));
      candidates->push_back(std::move(f));
    }
  }
  const WeightDecomposition w = weight_decomposition(lie, cartan, candidates);
  run.report.append(w.report);
  Json spaces = Json::array();
  for (const auto& ws : w.weights) spaces.push_back(to_json(ws));
  run.outputs["weights"] = spaces;
  if (hom) {
    run.outputs["classification"] = to_string(classify_weight_module(*hom, w));
    run.outputs["alpha_preserves_cartan"] = alpha_power_preserves_cartan(hom->algebra.alpha, 1, cartan);
  }
}

Json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Hom-Lie algebras and their representations", "homlie"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  bool version = false;
  app.add_flag("--version", version, "Print the tool version");
  app.add_flag("--json", o.json, "Emit the JSON report (the default and only machine format)");
  app.add_option("--seed", o.seed, "Seed for probe-based checks");

  std::string command;
  auto file_arg = [&](CLI::App* sub) { sub->add_option("file", o.file, "Definition file")->required(); };

  auto* check = app.add_subcommand("check", "Verify the axioms of definitions in a file");
  file_arg(check);
  check->add_option("--hom", o.hom, "Morphism whose Yau twist is checked");
  check->add_option("--lie", o.lie, "Algebra checked as a Lie algebra");

  auto* twist = app.add_subcommand("twist", "Yau twist by a morphism");
  file_arg(twist);
  twist->add_option("--morphism", o.morphism)->required();
  twist->add_flag("--induced", o.induced, "Also recover the induced Lie algebra");

  auto* killing = app.add_subcommand("killing", "Killing form and invariance");
  file_arg(killing);
  killing->add_option("--lie", o.lie)->required();

  auto* decompose = app.add_subcommand("decompose", "Simple ideal decomposition");
  file_arg(decompose);
  decompose->add_option("--lie", o.lie)->required();
  decompose->add_option("--trials", o.trials);
  decompose->add_option("--seed", o.local_seed);

  auto* cyclic = app.add_subcommand("cyclic", "Cyclic sum of copies of a Lie algebra");
  file_arg(cyclic);
  cyclic->add_option("--lie", o.lie)->required();
  cyclic->add_option("--sigma", o.sigma)->required();
  cyclic->add_option("--n", o.n)->required();

  auto* rep = app.add_subcommand("rep", "Representation tools");
  rep->require_subcommand(1);
  auto* rep_verify = rep->add_subcommand("verify", "Verify a representation");
  file_arg(rep_verify);
  rep_verify->add_option("--rep", o.rep)->required();
  auto* rep_inter = rep->add_subcommand("intertwiner", "Solve for twisting intertwiners");
  file_arg(rep_inter);
  rep_inter->add_option("--rep", o.rep)->required();
  rep_inter->add_option("--morphism", o.morphism)->required();
  auto* rep_tensor = rep->add_subcommand("tensor", "Tensor Hom-representation over a cyclic sum");
  file_arg(rep_tensor);
  rep_tensor->add_option("--reps", o.reps)->required();
  rep_tensor->add_option("--n", o.n)->required();
  rep_tensor->add_option("--sigma", o.sigma, "Morphism closing the cycle (identity if omitted)");

  auto* sl2 = app.add_subcommand("sl2", "Hom-sl(2) modules");
  sl2->require_subcommand(1);
  auto* family = sl2->add_subcommand("family", "Action tables of a classified family");
  family->add_option("kind", o.kind, "finite, lowest, highest or intermediate")->required();
  family->add_option("--lambda", o.lambda)->required();
  family->add_option("--b0", o.b0)->required();
  family->add_option("--n", o.n);
  family->add_option("--tau", o.tau);
  family->add_option("--mu", o.mu);
  family->add_option("--window", o.window, "LO:HI");
  family->add_flag("--verify", o.verify);
  auto* solve = sl2->add_subcommand("solve", "General coefficient recurrence");
  solve->add_option("--eta0", o.eta0)->required();
  solve->add_option("--nu0", o.nu0)->required();
  solve->add_option("--mu1", o.mu1)->required();
  solve->add_option("--gamma0", o.gamma0)->required();
  solve->add_option("--window", o.window, "LO:HI")->required();

  auto* weights = app.add_subcommand("weights", "Weight decomposition of a representation");
  file_arg(weights);
  weights->add_option("--rep", o.rep)->required();
  weights->add_option("--cartan", o.cartan, "Comma-separated basis elements")->required();
  weights->add_option("--candidates", o.candidates, "Comma-separated functionals, components separated by ':'");

  const bool asks_version = std::find(args.begin(), args.end(), "--version") != args.end();
  if (asks_version) {
    out << kToolVersion << "\n";
    return 0;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_json("UsageError", e.what()).dump(2) << "\n";
    return 2;
  }

  Run run;
  try {
    if (check->parsed()) {
      command = "check", cmd_check(o, run);
    } else if (twist->parsed()) {
      command = "twist", cmd_twist(o, run);
    } else if (killing->parsed()) {
      command = "killing", cmd_killing(o, run);
    } else if (decompose->parsed()) {
      command = "decompose", cmd_decompose(o, run);
    } else if (cyclic->parsed()) {
      command = "cyclic", cmd_cyclic(o, run);
    } else if (rep_verify->parsed()) {
      command = "rep verify", cmd_rep_verify(o, run);
    } else if (rep_inter->parsed()) {
      command = "rep intertwiner", cmd_rep_intertwiner(o, run);
    } else if (rep_tensor->parsed()) {
      command = "rep tensor", cmd_rep_tensor(o, run);
    } else if (family->parsed()) {
      command = "sl2 family", cmd_sl2_family(o, run);
    } else if (solve->parsed()) {
      command = "sl2 solve", cmd_sl2_solve(o, run);
    } else if (weights->parsed()) {
      command = "weights", cmd_weights(o, run);
    }
  } catch (const DslError& e) {
    Json j = error_json("ParseError", e.what());
    j["error"]["line"] = e.line();
    j["error"]["column"] = e.column();
    j["error"]["expected"] = e.expected();
    j["error"]["found"] = e.found();
    err << j.dump(2) << "\n";
    return 2;
  } catch (const Error& e) {
    err << error_json(std::string(to_string(e.kind())), e.what()).dump(2) << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << error_json(e.kind, e.message).dump(2) << "\n";
    return 2;
  }

  const Json report = {{"tool_version", kToolVersion},
                       {"command", command},
                       {"seed", o.local_seed.value_or(o.seed)},
                       {"inputs", run.inputs},
                       {"checks", to_json(run.report)},
                       {"outputs", run.outputs}};
  out << report.dump(2) << "\n";

  std::size_t failed = 0;
  for (const auto& c : run.report.checks()) failed += c.passed() ? 0 : 1;
  err << command << ": " << run.report.checks().size() - failed << " checks passed, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace homlie

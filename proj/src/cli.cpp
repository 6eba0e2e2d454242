#include "twistlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "twistlab/corpus.hpp"
#include "twistlab/density.hpp"
#include "twistlab/equivalence.hpp"
#include "twistlab/powerops.hpp"
#include "twistlab/table_io.hpp"
#include "twistlab/weights.hpp"

namespace twistlab {

using nlohmann::json;

namespace {

// A failed check or precondition that should end with exit code 1 but still
// carries a report.
struct CheckFailure {
  json report;
};

struct Options {
  std::string input;
  std::string output;
  std::string group;
  std::string mode;
  std::string format = "json";
  long n = 0;
  long k = -1;
  long subgroup = -1;
  long chi = 0;
  long psi = 1;
  std::string demo;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& ex) {
    throw ParseError(std::string("malformed JSON: ") + ex.what());
  }
}

CharacterTable load_table(const Options& o) {
  if (!o.group.empty() && !o.input.empty()) throw std::invalid_argument("give either --group or --input, not both");
  if (!o.group.empty()) return build_named_table(o.group);
  if (o.input.empty()) throw std::invalid_argument("a table is required: --group SPEC or --input PATH");
  return load_character_table(read_file(o.input));
}

WeightMultiset load_weights(const json& j) {
  try {
    return weights_from_json(j);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

const ClassFunction& row(const CharacterTable& t, long i, const char* flag) {
  if (i < 0 || static_cast<std::size_t>(i) >= t.irreducibles.size()) {
    throw std::invalid_argument(std::string(flag) + " must index an irreducible (0.." +
                                std::to_string(t.irreducibles.size() - 1) + ")");
  }
  return t.irreducibles[static_cast<std::size_t>(i)];
}

const SubgroupEmbedding& embedding(const CharacterTable& t, long i) {
  if (i < 0 || static_cast<std::size_t>(i) >= t.embeddings.size()) {
    throw std::invalid_argument("--subgroup must index an embedding of " + t.name + " (it has " +
                                std::to_string(t.embeddings.size()) + ")");
  }
  return t.embeddings[static_cast<std::size_t>(i)];
}

json values_json(const ClassFunction& chi) { return class_function_to_json(chi); }

json index_or_null(const std::optional<std::size_t>& i) { return i ? json(*i) : json(nullptr); }

json decomposition_json(const Decomposition& d) {
  json m = json::array();
  for (const auto& x : d.multiplicities) m.push_back(x.get_str());
  return {{"selfnorm", cycnum_to_json(d.selfnorm)},
          {"genuine", d.genuine},
          {"irreducible", d.irreducible},
          {"multiplicities", d.genuine ? m : json(nullptr)}};
}

json cmd_powers(const Options& o) {
  if (!o.input.empty() && o.group.empty()) {
    const json doc = parse_json(read_file(o.input));
    if (doc.is_object() && doc.contains("weights")) {
      const auto w = load_weights(doc);
      const PowerMode mode = parse_power_mode(o.mode.empty() ? "tensor" : o.mode);
      const long k = mode == PowerMode::Adjoint ? 1 : o.k;
      if (k < 1) throw std::invalid_argument("--k must be a positive integer");
      return {{"command", "powers"},
              {"mode", power_mode_name(mode)},
              {"k", mode == PowerMode::Adjoint ? json(nullptr) : json(k)},
              {"weights", weights_to_json(power_weights(w, k, mode))},
              {"self_dual", self_dual_check(power_weights(w, k, mode))}};
    }
  }
  const CharacterTable t = load_table(o);
  const auto& s = t.structure;
  const ClassFunction& chi = row(t, o.chi, "--chi");
  const std::string mode = o.mode.empty() ? "tensor" : o.mode;
  ClassFunction out;
  const bool needs_k = mode == "tensor" || mode == "sym" || mode == "ext";
  if (needs_k && o.k < 0) throw std::invalid_argument("--k is required for mode " + mode);
  if (mode == "tensor") {
    out = tensor_power_char(chi, s, o.k);
  } else if (mode == "sym") {
    out = sym_power_char(chi, s, o.k);
  } else if (mode == "ext") {
    out = ext_power_char(chi, s, o.k);
  } else if (mode == "adjoint") {
    out = adjoint_char(chi, s);
  } else if (mode == "dual") {
    out = dual_char(chi, s);
  } else {
    throw std::invalid_argument("unknown mode '" + mode + "' (tensor, sym, ext, adjoint, dual)");
  }
  return {{"command", "powers"},
          {"group", t.name},
          {"chi", o.chi},
          {"mode", mode},
          {"k", needs_k ? json(o.k) : json(nullptr)},
          {"values", values_json(out)},
          {"decomposition", decomposition_json(inner_product_and_decompose(out, t))}};
}

json ratio_json(const ClassWitness& w) {
  json r = nullptr;
  if (w.ratio) r = {{"exponent", w.ratio->exponent}, {"base", w.ratio->base}, {"order", w.ratio->order}};
  return {{"powers_equal", w.powers_equal}, {"both_zero", w.both_zero}, {"ratio", r}};
}

json cmd_twist(const Options& o) {
  const CharacterTable t = load_table(o);
  const auto& s = t.structure;
  const ClassFunction& chi1 = row(t, o.chi, "--chi");
  const ClassFunction& chi2 = row(t, o.psi, "--psi");
  const long k = o.k > 0 ? o.k : s.exponent;
  const RatioVerdict verdict = power_char_ratio_test(chi1, chi2, k);

  json ratios = json::array();
  for (const auto& w : verdict.witnesses) ratios.push_back(ratio_json(w));
  json diagnostics;
  diagnostics["ratios"] = ratios;
  const bool adjoint_equal = adjoint_char(chi1, s) == adjoint_char(chi2, s);
  diagnostics["adjoint_equal"] = adjoint_equal;
  json branch = nullptr;
  json lambda = nullptr;
  if (adjoint_equal) {
    if (auto found = adjoint_twist_or_dual_search(chi1, chi2, t)) {
      branch = found->branch == TwistBranch::Twist ? "twist" : "dual-twist";
      lambda = found->lambda;
    }
  }
  diagnostics["lambda"] = lambda;

  json restriction = nullptr;
  if (o.subgroup >= 0) {
    const auto& e = embedding(t, o.subgroup);
    const auto local = find_twist(chi1, chi2, t, &e);
    restriction = {{"subgroup", o.subgroup}, {"name", e.name}, {"normal", e.is_normal}, {"twists", local}};
    json ext = json::array();
    if (e.has_coset_data()) {
      for (std::size_t j : local) {
        const auto r = extend_twist(chi1, chi2, t, e, e.sub_table->irreducibles[j]);
        ext.push_back({{"chi_prime", j},
                       {"restriction_irreducible", r.restriction_irreducible},
                       {"chi_prime_invariant", r.chi_prime_invariant},
                       {"extensions", r.extensions},
                       {"twist", index_or_null(r.twist)}});
      }
    }
    restriction["extension"] = ext;
  }
  diagnostics["restriction"] = restriction;

  return {{"command", "twist"},
          {"group", t.name},
          {"chi", o.chi},
          {"psi", o.psi},
          {"equal_powers", verdict.equal_powers},
          {"k", k},
          {"twists", find_twist(chi1, chi2, t)},
          {"branch", branch},
          {"diagnostics", diagnostics}};
}

json cmd_clifford(const Options& o) {
  const CharacterTable t = load_table(o);
  const long sub = o.subgroup >= 0 ? o.subgroup : 0;
  const auto& e = embedding(t, sub);
  const CliffordResult r = clifford_analysis(row(t, o.chi, "--chi"), t, e);
  json constituents = json::array();
  for (const auto& [i, m] : r.constituents) constituents.push_back({{"row", i}, {"multiplicity", m.get_str()}});
  return {{"command", "clifford"},
          {"group", t.name},
          {"chi", o.chi},
          {"subgroup", sub},
          {"subgroup_name", e.name},
          {"constituents", constituents},
          {"orbits", r.orbits},
          {"constituent_orbit", r.constituent_orbit},
          {"stabilizer_cosets", r.stabilizer_cosets},
          {"induced_check", r.induced_check ? json(*r.induced_check) : json(nullptr)}};
}

json cmd_recover(const Options& o) {
  if (o.input.empty()) throw std::invalid_argument("--input PATH with a weight document is required");
  const WeightMultiset p = load_weights(parse_json(read_file(o.input)));
  const PowerMode mode = parse_power_mode(o.mode.empty() ? "sym" : o.mode);
  if (o.n < 1 || o.k < 1) throw std::invalid_argument("--n and --k must be positive");
  const WeightMultiset w = recover_from_power(p, o.n, o.k, mode);
  return {{"command", "recover"},
          {"mode", power_mode_name(mode)},
          {"n", o.n},
          {"k", o.k},
          {"weights", weights_to_json(w)},
          {"self_dual", self_dual_check(w)}};
}

json cmd_density(const Options& o) {
  const CharacterTable t = load_table(o);
  const SubgroupEmbedding* e = o.subgroup >= 0 ? &embedding(t, o.subgroup) : nullptr;
  const DensityReport r = dh_bounds_report(row(t, o.chi, "--chi"), row(t, o.psi, "--psi"), t.structure, e);
  json report = {{"command", "density"},
                 {"group", t.name},
                 {"chi", o.chi},
                 {"psi", o.psi},
                 {"subgroup", e ? json(o.subgroup) : json(nullptr)},
                 {"report", density_report_to_json(r)}};
  if (!r.all_verdicts_hold()) throw CheckFailure{report};
  return report;
}

json cmd_validate(const Options& o) {
  if (o.input.empty()) throw std::invalid_argument("--input PATH is required");
  const CharacterTable t = table_from_json(parse_json(read_file(o.input)));
  const ValidationReport v = validate_character_table(t);
  json checks = json::array();
  for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json report = {{"command", "validate"}, {"name", t.name}, {"valid", v.ok()}, {"checks", checks}};
  if (!v.ok()) {
    report["invariant"] = v.first_failure();
    throw CheckFailure{report};
  }
  return report;
}

json check(const std::string& name, bool passed, json detail = json::object()) {
  return {{"name", name}, {"passed", passed}, {"detail", std::move(detail)}};
}

void write_report(const json& j, const Options& o, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write '" + o.output + "'");
  f << text;
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

json heisenberg_demo(long n) {
  const HeisenbergModel m = build_heisenberg(n);
  const auto& t = m.table;
  const auto& s = t.structure;
  const auto& torus = m.torus();
  json checks = json::array();

  // 1. Relations of every rho_a, the normal-form law against rho_1, and the
  //    matrix characters against the table rows.
  {
    bool ok = true;
    std::string why;
    for (long a = 1; a < n; ++a) {
      const auto& rho = m.rho[static_cast<std::size_t>(a - 1)];
      if (!rho.relations_hold()) {
        ok = false;
        why = "rho_" + std::to_string(a) + " fails " + rho.first_failing_relation();
      }
      if (char_of_matrix_rep(rho, s, m.class_reps) != t.irreducibles[m.rho_index(a)]) {
        ok = false;
        why = "character of rho_" + std::to_string(a) + " differs from its table row";
      }
    }
    const MatrixRep& rho1 = m.rho[0];
    std::vector<CycMatrix> image;
    std::set<std::string> keys;
    for (std::size_t x = 0; x < m.group.order(); ++x) {
      image.push_back(rho1.evaluate(m.group.word(x)));
      keys.insert(image.back().key());
    }
    if (keys.size() != m.group.order()) {
      ok = false;
      why = "rho_1 is not injective on the normal forms";
    }
    for (std::size_t x = 0; x < m.group.order() && ok; ++x) {
      if (!(rho1.evaluate(rho1.element_enumeration()[x]) == image[x])) {
        ok = false;
        why = "normal form " + std::to_string(x) + " disagrees with rho_1";
      }
      for (const auto& [letter, g] : m.group.generators()) {
        if (!(image[x] * image[g] == image[m.group.multiply(x, g)])) {
          ok = false;
          why = "multiplication law disagrees with rho_1";
        }
      }
    }
    checks.push_back(check("relations", ok, {{"reps", n - 1}, {"elements", m.group.order()}, {"failure", why}}));
  }

  // 2. chi_a^n == chi_b^n for all units a, b.
  {
    bool ok = true;
    for (long a = 1; a < n; ++a) {
      for (long b = 1; b < n; ++b) {
        ok = ok && power_char_ratio_test(t.irreducibles[m.rho_index(a)], t.irreducibles[m.rho_index(b)], n).equal_powers;
      }
    }
    checks.push_back(check("power_equality", ok, {{"k", n}}));
  }

  // 3. No global twist between distinct chi_a, chi_b.
  {
    bool ok = true;
    json pairs = json::array();
    for (long a = 1; a < n; ++a) {
      for (long b = 1; b < n; ++b) {
        if (a == b) continue;
        const auto tw = find_twist(t.irreducibles[m.rho_index(a)], t.irreducibles[m.rho_index(b)], t);
        ok = ok && tw.empty();
        pairs.push_back({{"a", a}, {"b", b}, {"twists", tw}});
      }
    }
    checks.push_back(check("no_global_twist", ok, {{"pairs", pairs}}));
  }

  // 4 and 5. Restriction to T: multiplicity one, one transitive orbit, and
  //    chi_a = Ind psi.
  {
    bool mult_ok = true;
    bool ind_ok = true;
    for (long a = 1; a < n; ++a) {
      const auto r = clifford_analysis(t.irreducibles[m.rho_index(a)], t, torus);
      bool single = r.constituents.size() == static_cast<std::size_t>(n);
      for (const auto& c : r.constituents) single = single && c.second == 1;
      std::vector<std::size_t> rows;
      for (const auto& c : r.constituents) rows.push_back(c.first);
      mult_ok = mult_ok && single && r.constituent_orbit == rows;
      ind_ok = ind_ok && r.stabilizer_cosets == std::vector<std::size_t>{0} && r.induced_check.value_or(false);
    }
    checks.push_back(check("restriction_multiplicity_one", mult_ok, {{"constituents_per_character", n}}));
    checks.push_back(check("induced_check", ind_ok));
  }

  // 6. chi_ab: the twist on T between chi_a and chi_b is not G-invariant,
  //    so it does not extend.
  {
    bool ok = true;
    json cases = json::array();
    for (long a = 1; a < n; ++a) {
      for (long b = 1; b < n; ++b) {
        if (a == b) continue;
        const auto& chi_a = t.irreducibles[m.rho_index(a)];
        const auto& chi_b = t.irreducibles[m.rho_index(b)];
        const std::size_t j = m.torus_char_index(0, b - a);
        const auto local = find_twist(chi_a, chi_b, t, &torus);
        const auto r = extend_twist(chi_a, chi_b, t, torus, torus.sub_table->irreducibles[j]);
        const bool good = std::find(local.begin(), local.end(), j) != local.end() && !r.twist &&
                          !r.chi_prime_invariant && !r.restriction_irreducible;
        ok = ok && good;
        cases.push_back({{"a", a},
                         {"b", b},
                         {"chi_prime", j},
                         {"chi_prime_invariant", r.chi_prime_invariant},
                         {"restriction_irreducible", r.restriction_irreducible},
                         {"twist", index_or_null(r.twist)}});
      }
    }
    checks.push_back(check("chi_ab_not_invariant", ok, {{"cases", cases}}));
  }

  bool all = true;
  for (const auto& c : checks) all = all && c["passed"].get<bool>();
  return {{"command", "demo"},
          {"demo", "heisenberg"},
          {"n", n},
          {"order", s.order.get_str()},
          {"classes", s.num_classes()},
          {"checks", checks},
          {"all_passed", all}};
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact character and weight computations for twist equivalence", "twistlab"};
  app.require_subcommand(1);

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--output", o.output, "Write the report here instead of stdout");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json"}));
  };
  auto table_opts = [&o](CLI::App* sub) {
    sub->add_option("--input", o.input, "Character table document");
    sub->add_option("--group", o.group, "Built-in table: cyclic:<n>, s3, d4, q8, heisenberg:<p>, a*b");
  };

  auto* powers = app.add_subcommand("powers", "Power characters of an irreducible, or powers of a weight multiset");
  table_opts(powers);
  common(powers);
  powers->add_option("--chi", o.chi, "Row index");
  powers->add_option("--k", o.k, "Power");
  powers->add_option("--mode", o.mode, "tensor, sym, ext, adjoint or dual");

  auto* twist = app.add_subcommand("twist", "Power-ratio test and twist search between two irreducibles");
  table_opts(twist);
  common(twist);
  twist->add_option("--chi", o.chi, "First row index");
  twist->add_option("--psi", o.psi, "Second row index");
  twist->add_option("--k", o.k, "Power for the ratio test (default: exponent)");
  twist->add_option("--subgroup", o.subgroup, "Embedding index for restricted twists");

  auto* clifford = app.add_subcommand("clifford", "Restriction to a normal subgroup and its orbit structure");
  table_opts(clifford);
  common(clifford);
  clifford->add_option("--chi", o.chi, "Row index");
  clifford->add_option("--subgroup", o.subgroup, "Embedding index (default 0)");

  auto* recover = app.add_subcommand("recover", "Recover weights from a symmetric or tensor power");
  common(recover);
  recover->add_option("--input", o.input, "Weight document")->required();
  recover->add_option("--n", o.n, "Dimension of the unknown representation")->required();
  recover->add_option("--k", o.k, "Power")->required();
  recover->add_option("--mode", o.mode, "sym or tensor");

  auto* density = app.add_subcommand("density", "Agreement densities and the DH1 inequality chain");
  table_opts(density);
  common(density);
  density->add_option("--chi", o.chi, "First row index");
  density->add_option("--psi", o.psi, "Second row index");
  density->add_option("--subgroup", o.subgroup, "Normal embedding used as the identity component");

  auto* demo = app.add_subcommand("demo", "Canned demonstrations");
  common(demo);
  demo->add_option("name", o.demo, "Demonstration name")->required()->check(CLI::IsMember({"heisenberg"}));
  demo->add_option("--n", o.n, "Odd prime")->required();

  auto* validate = app.add_subcommand("validate", "Parse and validate a character table document");
  common(validate);
  validate->add_option("--input", o.input, "Character table document")->required();

  auto* exporter = app.add_subcommand("export", "Write a built-in table as a document");
  common(exporter);
  exporter->add_option("--group", o.group, "Built-in table spec")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << ex.what() << "\n";
    out << error_json("usage", ex.what()).dump(2) << "\n";
    return 2;
  }

  try {
    json report;
    if (powers->parsed()) {
      report = cmd_powers(o);
    } else if (twist->parsed()) {
      report = cmd_twist(o);
    } else if (clifford->parsed()) {
      report = cmd_clifford(o);
    } else if (recover->parsed()) {
      report = cmd_recover(o);
    } else if (density->parsed()) {
      report = cmd_density(o);
    } else if (demo->parsed()) {
      report = heisenberg_demo(o.n);
      if (!report["all_passed"].get<bool>()) throw CheckFailure{report};
    } else if (validate->parsed()) {
      report = cmd_validate(o);
    } else if (exporter->parsed()) {
      const std::string text = serialize_table(build_named_table(o.group));
      if (o.output.empty()) {
        out << text;
      } else {
        std::ofstream f(o.output, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot write '" + o.output + "'");
        f << text;
      }
      return 0;
    }
    write_report(report, o, out);
    return 0;
  } catch (const CheckFailure& f) {
    write_report(f.report, o, out);
    return 1;
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << "\n";
    write_report(error_json("parse", ex.what()), o, out);
    return 2;
  } catch (const ValidationError& ex) {
    err << ex.what() << "\n";
    json e = error_json("validation", ex.what());
    e["error"]["invariant"] = ex.invariant();
    write_report(e, o, out);
    return 1;
  } catch (const RecoveryError& ex) {
    err << ex.what() << "\n";
    json e = error_json("recovery", ex.what());
    e["error"]["step"] = ex.step();
    write_report(e, o, out);
    return 1;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    write_report(error_json("precondition", ex.what()), o, out);
    return 1;
  }
}

}  // namespace twistlab

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gradsk/verify.hpp"

using namespace gradsk;

namespace {

struct CommonOpts {
  std::string input_path;
  std::string output = "text";
  std::string example;
  std::vector<long long> r;
  long long mu = 0;
  long long theta = 0;
  long long residue_char = 0;
  bool check_lembe = false;
  bool representative_doubling = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_example = true) {
  cmd->add_option("--input", o.input_path, "JSON input document");
  cmd->add_option("--output", o.output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  if (with_example) {
    cmd->add_option("--example", o.example, "input shortcut (toex)")
        ->check(CLI::IsMember({"toex"}));
    cmd->add_option("--r", o.r, "symbol exponents r_1,...,r_m")
        ->delimiter(',');
    cmd->add_option("--mu", o.mu, "order of the residue roots of unity");
    cmd->add_option("--theta", o.theta, "involution multiplier on the roots");
    cmd->add_option("--char", o.residue_char, "residue characteristic");
  }
  cmd->add_flag("--check-lembe", o.check_lembe,
                "verify the product hypothesis before collapsing");
  cmd->add_flag("--representative-doubling", o.representative_doubling,
                "recheck the transversal cocycle on a doubled set");
}

InputDocument load_input(const CommonOpts& o) {
  if (!o.example.empty()) {
    require(!o.r.empty() && o.mu >= 1, Errc::SchemaError,
            "--example toex needs --r and --mu");
    std::vector<Int> rs;
    for (long long v : o.r) {
      require(v >= 2, Errc::SchemaError, "each r_i must be at least 2");
      rs.push_back(Int(v));
    }
    InputDocument doc;
    doc.valued = toex_input(rs, Int(o.mu), Int(o.theta), Int(o.residue_char));
    return doc;
  }
  require(!o.input_path.empty(), Errc::SchemaError,
          "provide --input FILE or --example");
  std::ifstream f(o.input_path);
  require(f.good(), Errc::SchemaError, "cannot open " + o.input_path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_input_text(ss.str());
}

void emit(const CommonOpts& o, const json& report, const std::string& text) {
  if (o.output == "json")
    std::cout << render_report(report);
  else
    std::cout << text << "\n";
}

std::string via_suffix(const SKResult& r) {
  std::string s = std::string(" (") + theorem_tag_name(r.tag);
  for (const auto& v : r.via) s += " via " + v;
  return s + ")";
}

int run_classify(const CommonOpts& o) {
  InputDocument in = load_input(o);
  AlgebraPresentation p =
      in.valued ? associated_graded(*in.valued).presentation
                : *in.presentation;
  ClassifyReport c = classify(p);
  json rep;
  rep["command"] = "classify";
  rep["classification"] = classify_to_json(c);
  std::ostringstream text;
  text << "Classification: " << case_tag_name(c.tag) << " (n=" << c.n
       << ", e=" << c.e << ", index=" << c.index << ", partial=" << c.partial
       << (c.inertially_split ? ", inertially split" : "") << ")";
  emit(o, rep, text.str());
  return 0;
}

int run_sk1(const CommonOpts& o) {
  InputDocument in = load_input(o);
  SKResult r = in.valued ? sk1_valued(*in.valued)
                         : sk1_totally_ramified(*in.presentation);
  json rep;
  rep["command"] = "sk1";
  rep["result"] = sk_result_to_json(r);
  emit(o, rep, "SK1 = " + render_group(r.group) + via_suffix(r));
  return 0;
}

int run_sk1u(const CommonOpts& o) {
  InputDocument in = load_input(o);
  SKOptions opts;
  opts.check_lembe = o.check_lembe;
  opts.representative_doubling = o.representative_doubling;
  SKResult r;
  if (in.valued) {
    r = sk1u_valued(*in.valued);
  } else {
    require(in.involution.has_value(), Errc::SchemaError,
            "sk1u needs an involution block");
    r = sk1u_auto(*in.presentation, *in.involution, opts);
  }
  json rep;
  rep["command"] = "sk1u";
  rep["result"] = sk_result_to_json(r);
  emit(o, rep, "SK1U = " + render_group(r.group) + via_suffix(r));
  return 0;
}

int run_bridge(const CommonOpts& o) {
  InputDocument in = load_input(o);
  require(in.valued.has_value(), Errc::SchemaError,
          "bridge needs a valued input");
  BridgeResult b = associated_graded(*in.valued);
  json rep;
  rep["command"] = "bridge";
  rep["bridge"] = bridge_to_json(b);
  std::ostringstream text;
  text << "Bridge: " << tameness_name(b.certificate.tameness)
       << (b.certificate.defectless ? ", defectless" : "") << "; Gamma_D/Gamma_K = "
       << render_group(gamma_quotient(b.presentation));
  emit(o, rep, text.str());
  return 0;
}

int run_example(const CommonOpts& o) {
  require(o.example == "toex", Errc::SchemaError,
          "only --example toex is available");
  require(!o.r.empty() && o.mu >= 1, Errc::SchemaError,
          "example needs --r and --mu");
  json doc;
  json v;
  json rl = json::array();
  for (long long x : o.r) rl.push_back(x);
  v["r"] = rl;
  v["mu"] = o.mu;
  v["theta"] = o.theta;
  if (o.residue_char) v["char"] = o.residue_char;
  doc["valued"] = v;
  std::cout << render_report(doc);
  return 0;
}

int run_verify(const std::vector<std::string>& suites, std::uint64_t seed,
               const std::string& output) {
  auto reports = run_suites(suites, seed);
  bool all_pass = true;
  if (output == "json") {
    json arr = json::array();
    for (const auto& rep : reports) {
      json j;
      j["suite"] = rep.name;
      j["cases"] = rep.cases;
      j["failures"] = rep.failures;
      j["pass"] = rep.pass();
      if (!rep.details.empty()) j["details"] = rep.details;
      arr.push_back(j);
      all_pass = all_pass && rep.pass();
    }
    std::cout << render_report(arr);
  } else {
    for (const auto& rep : reports) {
      std::cout << (rep.pass() ? "PASS" : "FAIL") << " " << rep.name << ": "
                << (rep.cases - rep.failures) << "/" << rep.cases << " ok\n";
      for (const auto& d : rep.details) std::cout << "  - " << d << "\n";
      all_pass = all_pass && rep.pass();
    }
  }
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reduced Whitehead group calculator for graded division algebras"};
  app.require_subcommand(1);

  CommonOpts o_classify, o_sk1, o_sk1u, o_bridge, o_example;
  std::vector<std::string> suites;
  std::uint64_t seed = 0;
  std::string verify_output = "text";

  add_common(app.add_subcommand("classify", "ramification classification"),
             o_classify);
  add_common(app.add_subcommand("sk1", "nonunitary reduced Whitehead group"),
             o_sk1);
  add_common(app.add_subcommand("sk1u", "unitary reduced Whitehead group"),
             o_sk1u);
  add_common(app.add_subcommand("bridge", "valued-to-graded presentation"),
             o_bridge);
  CLI::App* example =
      app.add_subcommand("example", "emit a ready-made input document");
  add_common(example, o_example);
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suites, "suite names (default: all)")
      ->delimiter(',');
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--output", verify_output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("classify")) return run_classify(o_classify);
    if (app.got_subcommand("sk1")) return run_sk1(o_sk1);
    if (app.got_subcommand("sk1u")) return run_sk1u(o_sk1u);
    if (app.got_subcommand("bridge")) return run_bridge(o_bridge);
    if (app.got_subcommand("example")) return run_example(o_example);
    if (app.got_subcommand("verify"))
      return run_verify(suites, seed, verify_output);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::SchemaError: return 1;
      case Errc::InternalInvariant: return 3;
      default: return 2;  // a named case/precondition failure
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}

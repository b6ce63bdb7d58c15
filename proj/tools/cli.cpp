#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "braidforge/cabling.hpp"
#include "braidforge/cover.hpp"
#include "braidforge/error.hpp"
#include "braidforge/garside.hpp"
#include "braidforge/qp.hpp"
#include "braidforge/serialization.hpp"
#include "braidforge/verification.hpp"

namespace braidforge::cli {

namespace {

struct Options {
  int n = 0;
  int k = 0;
  int degree = 0;
  bool json = false;
  bool braid = false;
  std::size_t budget = kDefaultConjugacyBudget;
  std::uint64_t seed = kDefaultSuiteSeed;
  std::vector<std::string> args;
};

// Raised by handlers when the command ran but a search budget ran out.
struct BudgetStop {
  Json result;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

int need_n(const Options& o) {
  if (o.n < 1) throw UsageError("this command needs -n <strands>");
  return o.n;
}

int need_k(const Options& o) {
  if (o.k < 2) throw UsageError("this command needs -k <degree> with k >= 2");
  return o.k;
}

int need_degree(const Options& o) {
  if (o.degree < 1) throw UsageError("this command needs -d <root degree> with d >= 1");
  return o.degree;
}

const std::string& arg(const Options& o, std::size_t i, const char* what) {
  if (o.args.size() <= i) throw UsageError(std::string("missing argument: ") + what);
  return o.args[i];
}

BraidWord word_arg(const Options& o, std::size_t i) { return parse_word(arg(o, i, "braid word"), need_n(o)); }

// Inline JSON, or @path to read it from a file.
Json json_arg(const Options& o, std::size_t i, const char* what) {
  std::string text = arg(o, i, what);
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw UsageError("cannot read " + text.substr(1));
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

cover::TwistWord twist_arg(const Options& o, std::size_t i) {
  const int n = need_n(o), k = need_k(o);
  const auto& text = arg(o, i, o.braid ? "braid word" : "twist word");
  return o.braid ? cover::lift_word(parse_word(text, n), k) : cover::parse_twist_word(text, n, k);
}

std::string kind_name(RootKind kind) { return kind == RootKind::Delta ? "delta" : "gamma"; }

Json verdict_json(const qp::Verdict& v) {
  Json j{{"verdict", qp::to_string(v.kind)}};
  if (v.reason) j["reason"] = qp::to_string(*v.reason);
  if (v.certificate) j["certificate"] = to_json(*v.certificate);
  return j;
}

using Handler = std::function<Json(const Options&)>;

Json cmd_nf(const Options& o) {
  const auto nf = normal_form(word_arg(o, 0));
  return {{"normal_form", to_json(nf)}, {"word", format_word(nf_to_word(nf))}};
}

Json cmd_eq(const Options& o) { return {{"equal", is_equal(word_arg(o, 0), word_arg(o, 1))}}; }

Json cmd_abel(const Options& o) { return {{"exponent_sum", exponent_sum(word_arg(o, 0))}}; }

Json cmd_perm(const Options& o) {
  const auto p = underlying_permutation(word_arg(o, 0));
  return {{"permutation", p.one_based()}, {"cycle_type", p.cycle_type()}};
}

Json cmd_positive(const Options& o) {
  const auto b = word_arg(o, 0);
  const auto [inf, sup] = inf_sup(b);
  return {{"positive", is_positive_braid(b)}, {"inf", inf}, {"sup", sup}};
}

Json cmd_periodic(const Options& o) { return {{"periodic", is_periodic(word_arg(o, 0))}}; }

Json cmd_root(const Options& o) {
  const auto b = word_arg(o, 0);
  const int d = need_degree(o);
  try {
    const auto r = periodic_root(b, d, o.budget);
    if (!r) return {{"found", false}};
    return {{"found", true},
            {"kind", kind_name(r->kind)},
            {"power", r->power},
            {"root", format_word(root_word(r->kind, r->power, b.strands()))},
            {"conjugator", format_word(r->conjugator)}};
  } catch (const BudgetExceeded& e) {
    throw BudgetStop{{{"found", nullptr}, {"verdict", "BUDGET_EXCEEDED"}, {"message", e.what()}}};
  }
}

Json cmd_conj(const Options& o) {
  const auto r = is_conjugate(word_arg(o, 0), word_arg(o, 1), o.budget);
  Json j{{"explored", r.explored}};
  switch (r.verdict) {
    case ConjugacyVerdict::Conjugate:
      j["verdict"] = "CONJUGATE";
      j["witness"] = format_word(*r.witness);
      return j;
    case ConjugacyVerdict::NotConjugate:
      j["verdict"] = "NOT_CONJUGATE";
      return j;
    case ConjugacyVerdict::BudgetExceeded:
      j["verdict"] = "BUDGET_EXCEEDED";
      throw BudgetStop{j};
  }
  return j;
}

Json cmd_qp_expand(const Options& o) {
  return {{"word", format_word(qp::expand(certificate_from_json(json_arg(o, 0, "certificate JSON"))))}};
}

Json cmd_qp_verify(const Options& o) {
  const auto cert = certificate_from_json(json_arg(o, 0, "certificate JSON"));
  Options inner = o;
  if (inner.n == 0) inner.n = cert.strands();
  return {{"valid", qp::verify(cert, word_arg(inner, 1))}};
}

Json cmd_qp_obstruct(const Options& o) { return verdict_json(qp::obstruct(word_arg(o, 0), o.budget)); }

Json cmd_qp_root(const Options& o) {
  const auto b = word_arg(o, 0);
  try {
    const auto cert = qp::qp_root_periodic(b, need_degree(o), o.budget);
    if (!cert) return {{"found", false}};
    return {{"found", true}, {"certificate", to_json(*cert)}, {"root", format_word(qp::expand(*cert))}};
  } catch (const BudgetExceeded& e) {
    throw BudgetStop{{{"found", nullptr}, {"verdict", "BUDGET_EXCEEDED"}, {"message", e.what()}}};
  }
}

Json cmd_cable_assemble(const Options& o) {
  const auto rf = regular_form_from_json(json_arg(o, 0, "regular form JSON"));
  const auto b = cabling::assemble(rf);
  return {{"n", b.strands()}, {"word", format_word(b)}};
}

Json cmd_cable_normalize(const Options& o) {
  BraidWord tubular;
  const auto assignment = assignment_from_json(json_arg(o, 0, "tube assignment JSON"), tubular);
  const auto out = cabling::normalize_interiors(tubular, assignment);
  return {{"regular_form", to_json(out.form)}, {"conjugator", format_word(out.conjugator)}};
}

Json cmd_cable_cert(const Options& o) {
  const auto j = json_arg(o, 0, "cabling JSON");
  if (!j.contains("tubular") || !j.contains("widths")) throw UsageError("expected fields \"tubular\" and \"widths\"");
  const auto tubular = certificate_from_json(j.at("tubular"));
  const auto widths = j.at("widths").get<std::vector<int>>();
  const auto orbits = cabling::orbit_structure(qp::expand(tubular));
  std::vector<qp::QPCertificate> interiors;
  for (const auto& orbit : orbits) {
    if (orbit.front() >= static_cast<int>(widths.size())) throw UsageError("expected one width per tube");
    interiors.emplace_back(widths[orbit.front()]);
  }
  for (const auto& entry : j.value("interiors", Json::array())) {
    const int orbit = entry.at("orbit").get<int>();
    if (orbit < 0 || orbit >= static_cast<int>(interiors.size())) throw UsageError("orbit index out of range");
    interiors[orbit] = certificate_from_json(entry.at("cert"));
  }
  const auto cert = cabling::cable_certificate(tubular, interiors, widths);
  return {{"certificate", to_json(cert)}, {"bands", cert.size()}, {"word", format_word(qp::expand(cert))}};
}

Json cmd_cover_data(const Options& o) { return to_json(cover::cover_data(need_n(o), need_k(o))); }

Json cmd_cover_lift(const Options& o) {
  return {{"twist_word", format_twist_word(cover::lift_word(word_arg(o, 0), need_k(o)))}};
}

Json cmd_cover_homrep(const Options& o) {
  return {{"matrix", to_json(cover::homology_rep(twist_arg(o, 0)), need_n(o), need_k(o))}};
}

Json cmd_cover_deck(const Options& o) {
  return {{"matrix", to_json(cover::deck_matrix(need_n(o), need_k(o)), o.n, o.k)}};
}

Json cmd_cover_symcheck(const Options& o) { return {{"symmetric", cover::symmetry_check(twist_arg(o, 0))}}; }

Json cmd_cover_ideq(const Options& o) {
  return {{"h1_equal", cover::check_identity(twist_arg(o, 0), twist_arg(o, 1))},
          {"note", "equal H1 actions are necessary, not sufficient, for equal mapping classes"}};
}

Json cmd_verify_paper(const Options& o) {
  Json checks = Json::array();
  int passed = 0;
  for (const auto& r : run_acceptance_suite(o.seed)) {
    if (r.passed) ++passed;
    checks.push_back({{"id", r.id},
                      {"name", r.name},
                      {"description", r.description},
                      {"passed", r.passed},
                      {"detail", r.detail},
                      {"seconds", r.seconds},
                      {"time_limit", r.time_limit ? Json(*r.time_limit) : Json(nullptr)}});
  }
  const int total = static_cast<int>(checks.size());
  return {{"checks", checks}, {"count", total}, {"passed", passed}, {"failed", total - passed}, {"seed", o.seed}};
}

std::string render_value(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_text(const Json& report, std::ostream& out) {
  const auto& result = report.at("result");
  if (result.contains("checks")) {
    for (const auto& c : result.at("checks"))
      out << (c.at("passed").get<bool>() ? "PASS" : "FAIL") << "  [" << c.at("id").get<int>() << "] "
          << c.at("name").get<std::string>() << ": " << c.at("description").get<std::string>() << " -- "
          << c.at("detail").get<std::string>() << " (" << std::fixed << std::setprecision(3)
          << c.at("seconds").get<double>() << " s)\n";
    out << result.at("passed") << "/" << result.at("count") << " checks passed\n";
    return;
  }
  for (const auto& [key, value] : result.items()) out << key << ": " << render_value(value) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braid group computations: normal forms, quasipositivity, cabling, branched covers.", "braidforge"};
  app.require_subcommand(1);
  Options o;
  app.add_option("-n,--strands", o.n, "Number of strands");
  app.add_option("-k,--degree", o.k, "Degree of the cyclic branched cover");
  app.add_option("-d,--root", o.degree, "Root degree for root and qp root");
  app.add_option("--budget", o.budget, "Search budget for conjugacy searches")->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for verify-paper")->capture_default_str();
  app.add_flag("--json", o.json, "Print the report as JSON");
  app.add_flag("--braid", o.braid, "cover: read braid words and lift them instead of twist words");

  std::string command;
  Handler handler;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h) {
    auto* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("args", o.args, "Positional arguments");
    sub->callback([&, sub, h] {
      command = (sub->get_parent() == &app ? "" : sub->get_parent()->get_name() + " ") + sub->get_name();
      handler = h;
    });
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->require_subcommand(1);
    return sub;
  };

  leaf(&app, "nf", "Garside left normal form of WORD", cmd_nf);
  leaf(&app, "eq", "Whether WORD1 and WORD2 are the same braid", cmd_eq);
  leaf(&app, "abel", "Exponent sum of WORD", cmd_abel);
  leaf(&app, "perm", "Underlying permutation of WORD", cmd_perm);
  leaf(&app, "positive", "Whether WORD is a positive braid", cmd_positive);
  leaf(&app, "periodic", "Whether WORD is periodic", cmd_periodic);
  leaf(&app, "root", "A d-th root of periodic WORD among powers of delta and gamma", cmd_root);
  leaf(&app, "conj", "Conjugacy of WORD1 and WORD2 with a witness", cmd_conj);
  auto* qp_cmd = group("qp", "Quasipositivity certificates");
  leaf(qp_cmd, "expand", "Braid word of CERT", cmd_qp_expand);
  leaf(qp_cmd, "verify", "Whether CERT certifies WORD", cmd_qp_verify);
  leaf(qp_cmd, "obstruct", "Quasipositivity screening of WORD", cmd_qp_obstruct);
  leaf(qp_cmd, "root", "Certificate for a quasipositive d-th root of periodic WORD", cmd_qp_root);
  auto* cable_cmd = group("cable", "Cabled braids");
  leaf(cable_cmd, "assemble", "Braid of a regular form JSON", cmd_cable_assemble);
  leaf(cable_cmd, "normalize", "Regular form and conjugator for a tube assignment JSON", cmd_cable_normalize);
  leaf(cable_cmd, "cert", "Certificate for a cabled braid from tubular and interior certificates", cmd_cable_cert);
  auto* cover_cmd = group("cover", "Branched covers and homology");
  leaf(cover_cmd, "data", "Topology of the cover for -n, -k", cmd_cover_data);
  leaf(cover_cmd, "lift", "Twist word lifting WORD", cmd_cover_lift);
  leaf(cover_cmd, "homrep", "H1 action of a twist word", cmd_cover_homrep);
  leaf(cover_cmd, "deck", "Deck transformation on H1", cmd_cover_deck);
  leaf(cover_cmd, "symcheck", "Whether the H1 action commutes with the deck transformation", cmd_cover_symcheck);
  leaf(cover_cmd, "ideq", "Whether two twist words act equally on H1", cmd_cover_ideq);
  leaf(&app, "verify-paper", "Run the acceptance checks", cmd_verify_paper);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Json report{{"schema", "braidforge/1"}, {"command", command}};
  Json inputs{{"args", o.args}};
  if (o.n) inputs["n"] = o.n;
  if (o.k) inputs["k"] = o.k;
  if (o.degree) inputs["d"] = o.degree;
  report["inputs"] = inputs;
  int code = kExitOk;
  const auto start = std::chrono::steady_clock::now();
  try {
    report["result"] = handler(o);
  } catch (const BudgetStop& stop) {
    report["result"] = stop.result;
    code = kExitBudget;
  } catch (const BudgetExceeded& e) {
    report["result"] = {{"verdict", "BUDGET_EXCEEDED"}, {"message", e.what()}};
    code = kExitBudget;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.json)
    out << report.dump(2) << "\n";
  else
    render_text(report, out);
  return code;
}

}  // namespace braidforge::cli

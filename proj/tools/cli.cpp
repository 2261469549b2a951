#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fthresh/artinian.hpp"
#include "fthresh/errors.hpp"
#include "nutable.hpp"
#include "report.hpp"
#include "session.hpp"

#ifndef FTHRESH_VERSION
#define FTHRESH_VERSION "unknown"
#endif

namespace fthresh::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Flags {
  std::string session, a, J, b, x, c, name, table, out;
  std::optional<unsigned> e, e_max, degree, c_max;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> max_denominator;
  std::optional<std::uint32_t> p;
  bool assert_domain = false;
  bool exhaustive = false;
  bool b_maximal = false;
};

struct Caveats {
  bool truncated = false;
  bool test_element_asserted = false;
  bool basis_only_socle = false;
  std::optional<std::string> domain_evidence;

  Json to_json() const {
    return {{"truncated", truncated},
            {"test_element_asserted", test_element_asserted},
            {"basis_only_socle", basis_only_socle},
            {"domain_evidence", domain_evidence ? Json(*domain_evidence) : Json(nullptr)}};
  }
};

struct Outcome {
  std::string status = "ok";  // ok | pass | fail | inconclusive
  Json results = Json::object();
  Caveats caveats;
  std::string inputs;  // canonical inputs folded into the digest
};

using Handler = std::function<Outcome(const Flags&)>;

std::string status_of(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

int exit_code(const std::string& status) {
  if (status == "fail") return kExitFail;
  if (status == "inconclusive") return kExitInconclusive;
  return kExitOk;
}

// Defaults: flag, then session option, then built-in.
struct Context {
  Session session;

  explicit Context(const Flags& f) : session(load(f)) {}

  static Session load(const Flags& f) {
    if (f.session.empty()) throw UsageError("--session is required");
    return Session::load(f.session);
  }

  const RingPtr& ring() const { return session.ring(); }

  Ideal ideal(const std::string& ref, const char* flag) const {
    if (ref.empty()) throw UsageError(std::string(flag) + " is required");
    return session.ideal(ref);
  }
  Polynomial element(const std::string& ref, const char* flag) const {
    if (ref.empty()) throw UsageError(std::string(flag) + " is required");
    return session.element(ref);
  }
  unsigned e_max(const Flags& f) const { return f.e_max.value_or(session.options().e_max.value_or(2)); }
  unsigned degree(const Flags& f) const {
    if (f.degree) return *f.degree;
    if (session.options().D) return *session.options().D;
    return default_truncation(ring());
  }
  std::int64_t max_denominator(const Flags& f) const {
    return f.max_denominator.value_or(session.options().max_denominator.value_or(64));
  }
  std::uint64_t seed(const Flags& f) const { return f.seed.value_or(session.options().seed.value_or(0)); }

  Outcome outcome() const {
    Outcome o;
    o.inputs = session.to_text();
    o.results["ring"] = ring()->to_string();
    return o;
  }
};

Outcome cmd_gb(const Flags& f) {
  Context ctx(f);
  Outcome o = ctx.outcome();
  Ideal a = f.a.empty() ? Ideal::zero(ctx.ring()) : ctx.session.ideal(f.a);
  o.results["ideal"] = to_json(a);
  o.results["groebner_basis"] = to_json(a.groebner_basis());
  return o;
}

Outcome cmd_nf(const Flags& f) {
  Context ctx(f);
  Outcome o = ctx.outcome();
  Ideal a = f.a.empty() ? Ideal::zero(ctx.ring()) : ctx.session.ideal(f.a);
  Polynomial x = ctx.element(f.x, "--x");
  o.results["ideal"] = to_json(a);
  o.results["element"] = to_json(x);
  o.results["normal_form"] = to_json(a.normal_form(x));
  return o;
}

Outcome cmd_member(const Flags& f) {
  Context ctx(f);
  Outcome o = ctx.outcome();
  Ideal a = ctx.ideal(f.a, "--a");
  Polynomial x = ctx.element(f.x, "--x");
  o.results["ideal"] = to_json(a);
  o.results["element"] = to_json(x);
  o.results["member"] = a.contains(x);
  return o;
}

Outcome cmd_dim(const Flags& f) {
  Context ctx(f);
  Outcome o = ctx.outcome();
  o.results["krull_dimension"] = ctx.ring()->dimension();
  if (!f.a.empty()) {
    Ideal a = ctx.session.ideal(f.a);
    const auto& info = a.primary_info();
    o.results["ideal"] = to_json(a);
    o.results["m_primary"] = info.m_primary;
    o.results["nilpotency_degree"] = info.nilpotency_degree ? Json(*info.nilpotency_degree) : Json(nullptr);
    o.results["colength"] = is_zero_dimensional(a) ? Json(ArtinianAlgebra(a).dimension()) : Json(nullptr);
  }
  return o;
}

Outcome cmd_colon(const Flags& f) {
  Context ctx(f);
  Outcome o = ctx.outcome();
  Ideal a = ctx.ideal(f.a, "--a");
  Ideal b = ctx.ideal(f.b, "--b");
  Ideal q = colon(a, b);
  o.results["a"] = to_json(a);
  o.results["b"] = to_json(b);
  o.results["colon"] = to_json(q);
  o.results["groebner_basis"] = to_json(q.groebner_basis());
  return o;
}

Outcome cmd_socle(const Flags& f) {
  Context ctx(f);
  Outcome o = ctx.outcome();
  Ideal a = ctx.ideal(f.a, "--a");
  auto basis = socle(a);
  o.results["ideal"] = to_json(a);
  o.results["dimension"] = basis.representatives.size();
  o.results["socle"] = to_json(basis.representatives);
  return o;
}

Outcome cmd_ord(const Flags& f) {
  Context ctx(f);
  Outcome o = ctx.outcome();
  Polynomial x = ctx.element(f.x, "--x");
  unsigned D = ctx.degree(f);
  Order r = ord(x, ctx.ring(), D);
  o.results["element"] = to_json(x);
  o.results["truncation_degree"] = D;
  o.results["order"] = to_json(r);
  o.caveats.truncated = r.at_least;
  return o;
}

Outcome cmd_initial(const Flags& f) {
  Context ctx(f);
  Outcome o = ctx.outcome();
  Polynomial x = ctx.element(f.x, "--x");
  unsigned D = ctx.degree(f);
  Order r = ord(x, ctx.ring(), D);
  o.results["element"] = to_json(x);
  o.results["truncation_degree"] = D;
  o.results["order"] = to_json(r);
  o.results["initial_form"] = r.at_least ? Json(nullptr) : to_json(initial_form(x, ctx.ring(), D));
  o.caveats.truncated = r.at_least;
  return o;
}

Outcome cmd_gr(const Flags& f) {
  Context ctx(f);
  Outcome o = ctx.outcome();
  auto gr = gr_presentation(ctx.ring(), ctx.degree(f));
  o.results["gr"] = to_json(gr);
  o.caveats.truncated = !gr.exact;
  return o;
}

Outcome cmd_gr_ideal(const Flags& f) {
  Context ctx(f);
  Outcome o = ctx.outcome();
  Ideal a = ctx.ideal(f.a, "--a");
  unsigned D = ctx.degree(f);
  auto gr = gr_presentation(ctx.ring(), D);
  o.results["ideal"] = to_json(a);
  o.results["gr"] = to_json(gr);
  o.results["initial_ideal"] = to_json(gr_of_ideal(a, gr, D));
  o.caveats.truncated = !gr.exact;
  return o;
}

Outcome cmd_hilbert(const Flags& f) {
  Context ctx(f);
  Outcome o = ctx.outcome();
  unsigned D = ctx.degree(f);
  auto gr = gr_presentation(ctx.ring(), D);
  auto ring_side = hilbert_data(ctx.ring(), D);
  auto graded_side = hilbert_data(gr, D);
  o.results["degree"] = D;
  o.results["ring_route"] = to_json(ring_side);
  o.results["graded_route"] = to_json(graded_side);
  o.results["agree"] = ring_side == graded_side;
  o.caveats.truncated = !gr.exact;
  return o;
}

Outcome cmd_verify_gr(const Flags& f) {
  Context ctx(f);
  Outcome o = ctx.outcome();
  Ideal claimed = ctx.ideal(f.a, "--a");
  unsigned D = ctx.degree(f);
  auto report = verify_gr_claim(claimed.generators(), ctx.ring(), D);
  o.results["claimed"] = to_json(claimed);
  o.results["degree"] = D;
  o.results["report"] = to_json(report);
  o.status = report.pass ? "pass" : "fail";
  // Hilbert agreement is only checked through D.
  o.caveats.truncated = true;
  return o;
}

Outcome cmd_nu(const Flags& f) {
  Context ctx(f);
  Outcome o = ctx.outcome();
  Ideal a = ctx.ideal(f.a, "--a");
  Ideal J = ctx.ideal(f.J, "--J");
  auto r = nu(a, J, f.e.value_or(1));
  Bracket b = bracket_of(r.q, r.nu, a.generators().size());
  o.results["a"] = to_json(a);
  o.results["J"] = to_json(J);
  o.results["record"] = to_json(r);
  o.results["lower"] = to_json(b.lower);
  o.results["upper"] = to_json(b.upper);
  return o;
}

Outcome cmd_threshold(const Flags& f) {
  Context ctx(f);
  Outcome o = ctx.outcome();
  Ideal a = ctx.ideal(f.a, "--a");
  Ideal J = ctx.ideal(f.J, "--J");
  auto est = threshold_estimate(a, J, ctx.e_max(f), ctx.max_denominator(f));
  o.results["a"] = to_json(a);
  o.results["J"] = to_json(J);
  o.results["estimate"] = to_json(est);
  if (!f.table.empty()) {
    emit_nu_table(est, f.table);
    o.results["table"] = f.table;
  }
  return o;
}

Outcome cmd_verify_thmA(const Flags& f) {
  Context ctx(f);
  Outcome o = ctx.outcome();
  Ideal b = ctx.session.ideal(f.b.empty() ? "m" : f.b);
  unsigned D = f.degree.value_or(ctx.session.options().D.value_or(0));
  auto report = verify_theorem_A(b, ctx.e_max(f), D);
  o.results["b"] = to_json(b);
  o.results["report"] = to_json(report);
  o.status = status_of(report.verdict);
  o.caveats.truncated = !report.gr.exact;
  return o;
}

Outcome cmd_fedder(const Flags& f) {
  Context ctx(f);
  Outcome o = ctx.outcome();
  std::uint32_t p = ctx.ring()->characteristic();
  o.results["f_pure"] = fedder_f_pure(ctx.ring());
  o.results["q"] = p;
  o.results["splitting_colon"] = to_json(splitting_colon(ctx.ring(), p));
  return o;
}

Outcome cmd_fpt(const Flags& f) {
  Context ctx(f);
  Outcome o = ctx.outcome();
  Ideal a = ctx.session.ideal(f.a.empty() ? "m" : f.a);
  o.results["a"] = to_json(a);
  o.results["estimate"] = to_json(fpt_estimate(a, ctx.e_max(f), ctx.max_denominator(f)));
  return o;
}

Outcome cmd_tc(const Flags& f) {
  Context ctx(f);
  Outcome o = ctx.outcome();
  Polynomial x = ctx.element(f.x, "--x");
  Ideal J = ctx.ideal(f.J, "--J");
  Polynomial c = ctx.element(f.c, "--c");
  auto v = tc_member(x, J, c, ctx.e_max(f), {f.assert_domain});
  o.results["element"] = to_json(x);
  o.results["J"] = to_json(J);
  o.results["test_element"] = to_json(c);
  o.results["verdict"] = to_json(v);
  o.results["test_element_candidates"] = to_json(test_element_candidates(ctx.ring()));
  o.caveats.test_element_asserted = v.test_element_asserted;
  o.caveats.domain_evidence = to_string(v.domain);
  return o;
}

Outcome cmd_frational(const Flags& f) {
  Context ctx(f);
  Outcome o = ctx.outcome();
  Ideal J = ctx.ideal(f.J, "--J");
  Polynomial c = ctx.element(f.c, "--c");
  FRationalOptions opts;
  opts.tc.assert_domain = f.assert_domain;
  opts.exhaustive = f.exhaustive;
  auto r = f_rational_probe(J, c, ctx.e_max(f), opts);
  o.results["J"] = to_json(J);
  o.results["test_element"] = to_json(c);
  o.results["report"] = to_json(r);
  o.results["test_element_candidates"] = to_json(test_element_candidates(ctx.ring()));
  o.caveats.test_element_asserted = true;
  o.caveats.basis_only_socle = r.basis_only;
  if (!r.probes.empty()) o.caveats.domain_evidence = to_string(r.probes.front().verdict.domain);
  return o;
}

Outcome check_outcome(const CheckReport& r, Outcome o) {
  o.results["check"] = to_json(r);
  o.status = status_of(r.verdict);
  return o;
}

Outcome cmd_check(const Flags& f) {
  if (f.name == "theoremA") {
    HypersurfaceFamily family;
    family.p = f.p.value_or(2);
    family.maximal_only = f.b_maximal;
    std::size_t trials = f.trials.value_or(25);
    unsigned e_max = f.e_max.value_or(2);
    std::uint64_t seed = f.seed.value_or(0);
    Outcome o;
    o.inputs = "theoremA p=" + std::to_string(family.p) + " maximal_only=" + std::to_string(family.maximal_only) +
               " trials=" + std::to_string(trials) + " e_max=" + std::to_string(e_max) + " seed=" + std::to_string(seed);
    return check_outcome(check_theorem_A_randomized(family, trials, e_max, seed), std::move(o));
  }
  Context ctx(f);
  Outcome o = ctx.outcome();
  unsigned n_max = f.degree.value_or(3);
  if (f.name == "colon-lemma")
    return check_outcome(check_colon_lemma(ctx.ring(), ctx.element(f.x, "--x"), n_max), std::move(o));
  if (f.name == "reduction") return check_outcome(check_reduction(ctx.ideal(f.a, "--a"), n_max), std::move(o));
  if (f.name == "superficial")
    return check_outcome(check_superficial(ctx.ring(), ctx.element(f.x, "--x"), f.c_max.value_or(3), n_max),
                         std::move(o));
  if (f.name == "lemma22")
    return check_outcome(check_lemma22(ctx.ideal(f.a, "--a"), ctx.ideal(f.b, "--b")), std::move(o));
  if (f.name == "monotonicity")
    return check_outcome(check_monotonicity(ctx.ring(), f.trials.value_or(50), ctx.e_max(f), ctx.seed(f)),
                         std::move(o));
  throw UsageError("unknown check \"" + f.name + "\"");
}

Outcome cmd_report(const Flags& f) {
  std::ifstream in(f.table, std::ios::binary);
  if (!in) throw Error("cannot read table " + f.table);
  std::ostringstream buf;
  buf << in.rdbuf();
  Outcome o;
  o.inputs = buf.str();
  NuTable table = NuTable::parse_csv(o.inputs);
  o.results["table"] = to_json(table, f.max_denominator.value_or(64));
  return o;
}

struct Command {
  const char* name;
  const char* help;
  std::vector<std::string> flags;  // trailing '!' marks a required flag
  Handler handler;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> table{
      {"gb", "reduced Groebner basis of a + L", {"session!", "a"}, cmd_gb},
      {"nf", "normal form of x modulo a + L", {"session!", "x!", "a"}, cmd_nf},
      {"member", "ideal membership", {"session!", "x!", "a!"}, cmd_member},
      {"dim", "Krull dimension, colength of a", {"session!", "a"}, cmd_dim},
      {"colon", "(a : b)", {"session!", "a!", "b!"}, cmd_colon},
      {"socle", "socle of R/a", {"session!", "a!"}, cmd_socle},
      {"ord", "m-adic order", {"session!", "x!", "degree"}, cmd_ord},
      {"initial", "initial form in gr", {"session!", "x!", "degree"}, cmd_initial},
      {"gr", "presentation of the associated graded ring", {"session!", "degree"}, cmd_gr},
      {"gr-ideal", "initial ideal of a in gr", {"session!", "a!", "degree"}, cmd_gr_ideal},
      {"hilbert", "Hilbert function, both routes", {"session!", "degree"}, cmd_hilbert},
      {"verify-gr", "check a claimed presentation of gr", {"session!", "a!", "degree"}, cmd_verify_gr},
      {"nu", "nu^J_a(p^e)", {"session!", "a!", "J!", "e"}, cmd_nu},
      {"threshold", "F-threshold brackets", {"session!", "a!", "J!", "e-max", "max-denominator", "table"},
       cmd_threshold},
      {"verify-thmA", "compare nu in R and in gr", {"session!", "b", "e-max", "degree"}, cmd_verify_thmA},
      {"fedder", "F-purity by Fedder's criterion", {"session!"}, cmd_fedder},
      {"fpt", "F-pure threshold brackets", {"session!", "a", "e-max", "max-denominator"}, cmd_fpt},
      {"tc", "tight closure membership probe", {"session!", "x!", "J!", "c!", "e-max", "assert-domain"}, cmd_tc},
      {"frational", "F-rationality socle probes",
       {"session!", "J!", "c!", "e-max", "assert-domain", "exhaustive"}, cmd_frational},
      {"check", "randomized and instance checks",
       {"name!", "session", "a", "b", "x", "degree", "c-max", "trials", "e-max", "seed", "p", "b-maximal"},
       cmd_check},
      {"report", "summarize a saved nu table", {"table!", "max-denominator"}, cmd_report},
  };
  return table;
}

CLI::Option* add_flag(CLI::App* sub, const std::string& name, Flags& f) {
  if (name == "session") return sub->add_option("--session", f.session, "session file");
  if (name == "a") return sub->add_option("--a", f.a, "ideal: m, a session name or (g1, ...)");
  if (name == "J") return sub->add_option("--J", f.J, "target ideal");
  if (name == "b") return sub->add_option("--b", f.b, "second ideal");
  if (name == "x") return sub->add_option("--x", f.x, "element");
  if (name == "c") return sub->add_option("--c", f.c, "test element");
  if (name == "e") return sub->add_option("--e", f.e, "Frobenius exponent");
  if (name == "e-max") return sub->add_option("--e-max", f.e_max, "largest Frobenius exponent");
  if (name == "degree") return sub->add_option("--degree", f.degree, "truncation degree or n_max");
  if (name == "trials") return sub->add_option("--trials", f.trials, "random trials");
  if (name == "seed") return sub->add_option("--seed", f.seed, "base seed");
  if (name == "max-denominator")
    return sub->add_option("--max-denominator", f.max_denominator, "largest denominator of a guess");
  if (name == "table") return sub->add_option("--table", f.table, "nu table CSV");
  if (name == "name")
    return sub->add_option("--name", f.name, "check name")
        ->check(CLI::IsMember({"colon-lemma", "reduction", "superficial", "lemma22", "monotonicity", "theoremA"}));
  if (name == "c-max") return sub->add_option("--c-max", f.c_max, "largest superficial index");
  if (name == "p") return sub->add_option("--p", f.p, "characteristic of the random family");
  if (name == "assert-domain") return sub->add_flag("--assert-domain", f.assert_domain, "take R to be a domain");
  if (name == "exhaustive") return sub->add_flag("--exhaustive", f.exhaustive, "probe every socle combination");
  if (name == "b-maximal") return sub->add_flag("--b-maximal", f.b_maximal, "use b = m in every trial");
  throw std::logic_error("unknown flag " + name);
}

std::string digest_input(const std::vector<std::string>& args, const std::string& inputs) {
  std::string s = inputs;
  for (const auto& a : args) {
    s += '\0';
    s += a;
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags flags;
  CLI::App app{"Frobenius thresholds over local rings of prime characteristic", "fthresh"};
  app.require_subcommand(1);
  app.set_version_flag("--version", FTHRESH_VERSION);
  std::map<const CLI::App*, const Command*> handlers;
  for (const auto& cmd : commands()) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    for (std::string flag : cmd.flags) {
      bool required = flag.back() == '!';
      if (required) flag.pop_back();
      CLI::Option* opt = add_flag(sub, flag, flags);
      if (required) opt->required();
    }
    sub->add_option("--out", flags.out, "write the report here instead of stdout");
    handlers[sub] = &cmd;
  }

  if (!args.empty() && !args[0].starts_with("-") && app.get_subcommand_no_throw(args[0]) == nullptr) {
    err << "error: unknown command \"" << args[0] << "\"\n";
    return kExitUsage;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Command* cmd = nullptr;
  for (const auto* sub : app.get_subcommands()) cmd = handlers.at(sub);

  auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = cmd->handler(flags);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  auto elapsed = std::chrono::steady_clock::now() - start;

  Json report;
  report["tool"] = "fthresh";
  report["version"] = FTHRESH_VERSION;
  report["command"] = args;
  report["inputs_digest"] = sha256_hex(digest_input(args, outcome.inputs));
  report["status"] = outcome.status;
  report["results"] = std::move(outcome.results);
  report["caveats"] = outcome.caveats.to_json();
  // Everything above is deterministic; the timing below is not and stays
  // outside the digest.
  report["report_digest"] = sha256_hex(report.dump());
  report["timing"] = {{"wall_ms", std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()}};
  const std::string text = report.dump(2) + "\n";

  if (flags.out.empty()) {
    out << text;
  } else {
    std::ofstream file(flags.out, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write report to " << flags.out << "\n";
      return kExitUsage;
    }
  }
  return exit_code(outcome.status);
}

}  // namespace fthresh::cli

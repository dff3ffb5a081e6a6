#include "slp/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace slp::cli {

using nlohmann::ordered_json;

namespace {

const std::vector<std::size_t> gegen_hilb_b{1, 5, 14, 30, 51, 71, 84, 84, 70, 46, 16};
const std::vector<std::size_t> gegen_hilb_c{1, 5, 14, 30, 51, 71, 84, 84, 70, 45, 12};

template <class T>
std::string spaced(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string profile_line(const RankProfile& p) {
  std::ostringstream os;
  os << "  power " << p.power << ":";
  for (const auto& row : p.rows) {
    os << " " << row.degree << ":" << row.rank << "/" << row.source_dim << "->" << row.target_dim;
    if (!row.maximal) os << "!";
  }
  return os.str();
}

ordered_json header(const std::string& echo, const GradedAlgebra& a) {
  ordered_json j;
  j["command"] = echo;
  j["fingerprint"] = fingerprint_hex(a.fingerprint());
  j["field"] = a.field().to_string();
  return j;
}

void lefschetz_lines(const LefschetzReport& r, std::vector<std::string>& lines) {
  lines.push_back("verdict: " + to_string(r.verdict));
  if (r.seed) lines.push_back("seed: " + std::to_string(*r.seed) + ", trials used: " + std::to_string(r.trials_used));
  if (!r.element_text.empty()) lines.push_back("element: " + r.element_text);
  if (r.witness) {
    lines.push_back("failure: power " + std::to_string(r.witness->power) + " from degree " +
                    std::to_string(r.witness->degree));
  }
  if (r.probabilistic_field && r.verdict != Verdict::certified_success)
    lines.push_back("note: search over a finite field; a failed search is not a proof");
  lines.push_back("rank profiles (degree:rank/source->target, ! marks a deficient map):");
  for (const auto& p : r.profiles) lines.push_back(profile_line(p));
}

}  // namespace

std::string fingerprint_hex(std::uint64_t f) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << f;
  return os.str();
}

ordered_json to_json(const RankProfile& p) {
  ordered_json j;
  j["power"] = p.power;
  j["element_degree"] = p.element_degree;
  j["rows"] = ordered_json::array();
  for (const auto& row : p.rows) {
    j["rows"].push_back(ordered_json{{"degree", row.degree},
                                     {"source_dim", row.source_dim},
                                     {"target_dim", row.target_dim},
                                     {"rank", row.rank},
                                     {"maximal", row.maximal}});
  }
  return j;
}

ordered_json to_json(const LefschetzReport& r) {
  ordered_json j;
  j["kind"] = r.kind;
  j["fingerprint"] = fingerprint_hex(r.algebra_fingerprint);
  j["field"] = r.field.to_string();
  j["probabilistic_field"] = r.probabilistic_field;
  j["seed"] = r.seed ? ordered_json(*r.seed) : ordered_json(nullptr);
  j["verdict"] = to_string(r.verdict);
  j["element"] = r.element_text.empty() ? ordered_json(nullptr) : ordered_json(r.element_text);
  j["witness"] = r.witness ? ordered_json{{"power", r.witness->power}, {"degree", r.witness->degree}} : ordered_json(nullptr);
  j["trials_used"] = r.trials_used;
  j["trials"] = ordered_json::array();
  for (const auto& t : r.trials) {
    j["trials"].push_back(ordered_json{
        {"element", t.element},
        {"failure", t.failure ? ordered_json{{"power", t.failure->power}, {"degree", t.failure->degree}} : ordered_json(nullptr)}});
  }
  j["powers"] = r.powers;
  j["profiles"] = ordered_json::array();
  for (const auto& p : r.profiles) j["profiles"].push_back(to_json(p));
  return j;
}

ordered_json to_json(const MaxRankReport& r) {
  ordered_json j;
  j["fingerprint"] = fingerprint_hex(r.algebra_fingerprint);
  j["field"] = r.field.to_string();
  j["probabilistic_field"] = r.probabilistic_field;
  j["seed"] = r.seed;
  j["all_certified"] = r.all_certified();
  j["degrees"] = ordered_json::array();
  for (const auto& d : r.degrees) {
    j["degrees"].push_back(ordered_json{{"degree", d.degree},
                                        {"verdict", to_string(d.verdict)},
                                        {"trials_used", d.trials_used},
                                        {"element", d.element},
                                        {"profile", to_json(d.profile)}});
  }
  return j;
}

std::string emit_report(const Report& r, Format format, bool include_timing) {
  std::ostringstream os;
  if (format == Format::json) {
    auto j = r.body;
    if (include_timing) j["timing"] = ordered_json{{"seconds", r.seconds}};
    os << j.dump(2) << "\n";
  } else {
    for (const auto& l : r.lines) os << l << "\n";
    if (include_timing) os << "time: " << std::fixed << std::setprecision(3) << r.seconds << " s\n";
  }
  return os.str();
}

Report hilbert_report(const AlgebraSpec& spec, const std::string& echo) {
  const auto a = build_algebra(spec);
  const auto h = a.hilbert_function();
  const auto flags = check_symmetric_unimodal(h);
  const auto soc = a.socle();
  Report r;
  r.body = header(echo, a);
  r.body["hilbert"] = h;
  r.body["socle_degree"] = a.socle_degree();
  r.body["multiplicity"] = a.multiplicity();
  r.body["symmetric"] = flags.symmetric;
  r.body["unimodal"] = flags.unimodal;
  r.body["gorenstein"] = soc.is_gorenstein;
  r.body["socle_dims"] = soc.dims;
  r.lines = {"hilbert: " + spaced(h),
             "socle degree: " + std::to_string(a.socle_degree()),
             "multiplicity: " + std::to_string(a.multiplicity()),
             "symmetric: " + yes_no(flags.symmetric),
             "unimodal: " + yes_no(flags.unimodal),
             "gorenstein: " + yes_no(soc.is_gorenstein),
             "socle: " + spaced(soc.dims)};
  return r;
}

Report check_report(const AlgebraSpec& spec, CheckMode mode, std::size_t trials, std::uint64_t seed,
                    const std::optional<std::string>& element, const std::string& echo) {
  const auto a = build_algebra(spec);
  Report r;
  r.body = header(echo, a);
  r.lines.push_back("algebra: " + fingerprint_hex(a.fingerprint()) + " over " + a.field().to_string() +
                    ", hilbert " + spaced(a.hilbert_function()));
  if (mode == CheckMode::maxrank) {
    if (element) throw std::invalid_argument("--element is not available with --mode maxrank");
    const auto m = maximal_rank_property(a, trials, seed);
    r.body["mode"] = "maxrank";
    r.body["report"] = to_json(m);
    r.lines.push_back("maximal rank property: " + std::string(m.all_certified() ? "certified" : "not certified"));
    for (const auto& d : m.degrees) {
      r.lines.push_back("degree " + std::to_string(d.degree) + ": " + to_string(d.verdict) + " after " +
                        std::to_string(d.trials_used) + " trial(s)");
      r.lines.push_back(profile_line(d.profile));
    }
    r.exit_code = m.all_certified() ? exit_ok : exit_failed;
    return r;
  }
  const bool strong = mode == CheckMode::strong;
  LefschetzReport rep;
  if (element) {
    const auto w = parse_element(a, *element);
    rep = strong ? check_strong_element(a, w) : check_weak_element(a, w);
  } else {
    rep = strong ? search_strong(a, trials, seed) : search_weak(a, trials, seed);
  }
  r.body["mode"] = strong ? "strong" : "weak";
  r.body["report"] = to_json(rep);
  lefschetz_lines(rep, r.lines);
  r.exit_code = rep.verdict == Verdict::certified_success ? exit_ok : exit_failed;
  return r;
}

Report sweep_report(const lab::SweepResult& s, const std::string& echo, const std::string& success_line) {
  Report r;
  r.body["command"] = echo;
  r.body["sweep"] = s.name;
  r.body["cases"] = s.cases;
  r.body["ok"] = s.ok();
  r.body["failures"] = s.failures;
  r.body["notes"] = s.notes;
  r.lines.push_back(s.name + ": " + std::to_string(s.cases) + " cases, " + std::to_string(s.failures.size()) + " failures");
  for (const auto& f : s.failures) r.lines.push_back("  " + f);
  for (const auto& n : s.notes) r.lines.push_back(n);
  if (s.ok()) r.lines.push_back(success_line);
  r.exit_code = s.ok() ? exit_ok : exit_failed;
  return r;
}

std::string gegen_spec_text(std::uint64_t seed) {
  return "field prime 32003\n"
         "extend x1 : x1^4\n"
         "extend x2 : x2^4\n"
         "extend x3 : x3^4\n"
         "extend x4 : x4^4\n"
         "extend x5 : x5^2\n"
         "quotient random degree=8 seed=" +
         std::to_string(seed) + "\n";
}

Report reproduce_gegen(std::uint64_t seed, std::size_t trials, const std::string& echo) {
  const auto b = build_algebra(parse_spec(gegen_spec_text(seed)));
  const auto hb = b.hilbert_function();
  std::mt19937_64 rng(seed);
  const auto l = random_homogeneous(b, 1, rng);
  const int r_pow = 9;
  const int src = 1;
  const auto lr = b.power(l, r_pow);
  const auto hc = lr.is_zero() ? hb : quotient_by_form(b, lr).hilbert_function();
  const auto cert = lab::certified_slp_disproof(b, l, r_pow, src);
  const auto at = [](const std::vector<std::size_t>& h, int t) {
    return t < static_cast<int>(h.size()) ? h[static_cast<std::size_t>(t)] : std::size_t{0};
  };
  const auto mr = maximal_rank_property(b, trials, seed);

  Report r;
  r.body = header(echo, b);
  r.body["seed"] = seed;
  r.body["hilbert_b"] = hb;
  r.body["hilbert_b_expected"] = gegen_hilb_b;
  r.body["element"] = b.format(l);
  r.body["hilbert_c"] = hc;
  r.body["hilbert_c_expected"] = gegen_hilb_c;
  ordered_json dis;
  dis["power"] = r_pow;
  dis["degree"] = src;
  dis["source_dim"] = at(hb, src);
  dis["quotient_dim"] = at(hc, src + r_pow);
  dis["target_dim"] = at(hb, src + r_pow);
  dis["certified"] = cert.has_value();
  if (cert) dis["note"] = "disproves strongness for this element; generic failure follows only heuristically";
  r.body["disproof"] = dis;
  r.body["maximal_rank"] = to_json(mr);

  const bool b_ok = hb == gegen_hilb_b;
  const bool c_ok = hc == gegen_hilb_c;
  r.body["as_expected"] = ordered_json{{"hilbert_b", b_ok},
                                       {"hilbert_c", c_ok},
                                       {"disproof", cert.has_value()},
                                       {"maximal_rank", mr.all_certified()}};

  const auto lhs = std::to_string(at(hb, src)) + " + " + std::to_string(at(hc, src + r_pow));
  const auto rhs = std::to_string(at(hb, src + r_pow));
  r.lines = {"Hilb_B: " + spaced(hb) + (b_ok ? "" : "  (expected " + spaced(gegen_hilb_b) + ")"),
             "b = " + b.format(l),
             "Hilb_C: " + spaced(hc) + (c_ok ? "" : "  (expected " + spaced(gegen_hilb_c) + ")"),
             cert ? "disproof: dim B_1 + dim C_10 = " + lhs + " > " + rhs +
                        " = dim B_10, so b^9 : B_1 -> B_10 is neither injective nor surjective"
                  : "disproof: none, dim B_1 + dim C_10 = " + lhs + " <= " + rhs + " = dim B_10",
             "maximal rank property: " + std::string(mr.all_certified() ? "certified" : "not certified") +
                 " in degrees 1.." + std::to_string(mr.degrees.size())};
  for (const auto& d : mr.degrees)
    r.lines.push_back("  degree " + std::to_string(d.degree) + ": " + to_string(d.verdict));
  r.exit_code = b_ok && c_ok && cert && mr.all_certified() ? exit_ok : exit_failed;
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lefschetz property checks for graded Artinian algebras", "slp"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string format = "text";
  bool timing = false;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", timing, "Include wall time in the report");

  std::string spec_path;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function and structure of a spec");
  hilbert->add_option("spec", spec_path, "Spec file")->required();

  std::string mode = "strong";
  std::size_t trials = default_trials;
  std::uint64_t seed = 1;
  std::string element;
  auto* check = app.add_subcommand("check", "Search for or test a Lefschetz element");
  check->add_option("spec", spec_path, "Spec file")->required();
  check->add_option("--mode", mode, "weak, strong or maxrank")->check(CLI::IsMember({"weak", "strong", "maxrank"}));
  check->add_option("--trials", trials, "Random elements to try");
  check->add_option("--seed", seed, "Generator seed");
  auto* element_opt = check->add_option("--element", element, "Test this element instead of searching");

  long kmax = 8, rmax = 25, smax = 30;
  std::size_t instances = 50, dimcap = 256;
  auto* verify = app.add_subcommand("verify", "Verification sweeps");
  verify->require_subcommand(1);
  auto* coefficients = verify->add_subcommand("coefficients", "Reduction coefficients against the rewrite oracle");
  coefficients->add_option("--kmax", kmax);
  coefficients->add_option("--rmax", rmax);
  auto* smatrix = verify->add_subcommand("smatrix", "Cauchy-type determinants");
  smatrix->add_option("--rmax", smax);
  auto* duality = verify->add_subcommand("duality", "Random duality instances");
  duality->add_option("--instances", instances);
  duality->add_option("--seed", seed);
  auto* blockmatrix = verify->add_subcommand("blockmatrix", "Block matrix ranks against direct ranks");
  blockmatrix->add_option("--seed", seed);
  auto* stanley = verify->add_subcommand("stanley", "Monomial complete intersections");
  stanley->add_option("--dimcap", dimcap);
  stanley->add_option("--trials", trials);
  stanley->add_option("--seed", seed);

  auto* reproduce = app.add_subcommand("reproduce", "Reproduce worked examples");
  reproduce->require_subcommand(1);
  auto* gegen = reproduce->add_subcommand("gegen", "Quotient of a 512-dimensional algebra by a random octic");
  gegen->add_option("--seed", seed);
  gegen->add_option("--trials", trials);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return exit_ok;
    }
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  std::string echo = "slp";
  for (const auto& a : args) echo += " " + a;

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    if (*hilbert) {
      report = hilbert_report(load_spec(spec_path), echo);
    } else if (*check) {
      const auto m = mode == "weak" ? CheckMode::weak : (mode == "strong" ? CheckMode::strong : CheckMode::maxrank);
      std::optional<std::string> el;
      if (*element_opt) el = element;
      report = check_report(load_spec(spec_path), m, trials, seed, el, echo);
    } else if (*coefficients) {
      report = sweep_report(lab::verify_coefficients(kmax, rmax), echo, "all identities hold");
    } else if (*smatrix) {
      report = sweep_report(lab::verify_smatrix(smax), echo, "all determinants nonzero and equal to the Cauchy formula");
    } else if (*duality) {
      report = sweep_report(lab::verify_duality(instances, seed), echo, "both sides agree on every instance");
    } else if (*blockmatrix) {
      report = sweep_report(lab::verify_blockmatrix(seed), echo, "block matrix ranks equal direct ranks");
    } else if (*stanley) {
      report = sweep_report(lab::verify_stanley(dimcap, trials, seed), echo, "every algebra has a certified strong element");
    } else if (*gegen) {
      report = reproduce_gegen(seed, trials, echo);
    }
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failed;
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << emit_report(report, format == "json" ? Format::json : Format::text, timing);
  return report.exit_code;
}

}  // namespace slp::cli

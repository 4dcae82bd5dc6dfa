#include "cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

namespace gpk::cli {

using nlohmann::ordered_json;

namespace {

struct CommonFlags {
  std::string format = "human";
  bool no_timestamp = false;
};

struct BudgetFlags {
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::uint32_t budget_degree = GroebnerBudget{}.max_degree;
  std::uint64_t budget_pairs = GroebnerBudget{}.max_pair_reductions;
  std::string strategy = "normal";

  CertifyOptions options() const {
    CertifyOptions o;
    o.jobs = jobs;
    o.groebner.budget.max_degree = budget_degree;
    o.groebner.budget.max_pair_reductions = budget_pairs;
    o.groebner.strategy = strategy == "sugar" ? PairStrategy::Sugar : PairStrategy::Normal;
    return o;
  }
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& b) {
  cmd->add_option("--jobs", b.jobs, "Parallel patch certifications")->check(CLI::Range(1u, 256u));
  cmd->add_option("--budget-degree", b.budget_degree, "Groebner degree cap");
  cmd->add_option("--budget-pairs", b.budget_pairs, "Groebner pair-reduction cap");
  cmd->add_option("--strategy", b.strategy, "Pair selection")->check(CLI::IsMember({"normal", "sugar"}));
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void emit_json(std::ostream& out, const CommonFlags& common, ordered_json j) {
  if (!common.no_timestamp) j["generated_at"] = utc_now();
  out << j.dump(2) << '\n';
}

InvolutionType parse_type(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw InputError("involution type must look like p,q: '" + s + "'");
  try {
    return InvolutionType::make(std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1)));
  } catch (const std::logic_error&) {
    throw InputError("involution type must look like p,q: '" + s + "'");
  }
}

void print_certificate(std::ostream& out, const SmoothnessCertificate& cert, bool timings) {
  out << "prime " << cert.prime << "  matrix sha256 " << cert.matrix_sha << '\n';
  for (const auto& v : cert.patches) {
    out << "  patch " << v.name << ": " << to_string(v.outcome) << "  pairs=" << v.stats.pairs_processed
        << " max_degree=" << v.stats.max_degree;
    if (timings) out << " " << std::fixed << std::setprecision(0) << v.millis << " ms";
    if (!v.note.empty()) out << "  (" << v.note << ")";
    out << '\n';
  }
  out << (cert.smooth ? "smooth" : cert.inconclusive ? "inconclusive (budget exceeded)" : "NOT smooth") << '\n';
}

int certificate_exit(const SmoothnessCertificate& cert) {
  if (cert.smooth) return kOk;
  return cert.inconclusive ? kBudgetExceeded : kVerificationFailed;
}

int print_claims(std::ostream& out, const CommonFlags& common, const std::vector<ClaimCheck>& claims,
                 const std::string& which) {
  bool all = true;
  for (const auto& c : claims) all = all && c.pass;
  if (common.format == "json") {
    emit_json(out, common, {{"which", which}, {"claims", claims_json(claims)}, {"all_pass", all}});
  } else {
    for (const auto& c : claims) {
      out << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  expected " << c.expected;
      if (!c.pass) out << ", got " << c.actual;
      out << '\n';
    }
    out << claims.size() << " checks, " << (all ? "all pass" : "FAILURES") << '\n';
  }
  return all ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"GPK3 threefold verification toolkit", "gpk3"};
  app.require_subcommand(1);
  app.fallthrough();
  CommonFlags common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"human", "json"}));
  app.add_flag("--no-timestamp", common.no_timestamp, "Omit wall-clock fields from JSON output");

  // certify
  auto* certify = app.add_subcommand("certify", "Certify smoothness of X_{1,g} patch by patch");
  std::uint64_t prime = 103;
  std::string matrix_path, g1_path;
  bool stop_first = false;
  BudgetFlags certify_budget;
  certify->add_option("--prime", prime, "Prime modulus")->required();
  certify->add_option("--matrix", matrix_path, "Matrix g2 (text format)")->required()->check(CLI::ExistingFile);
  certify->add_option("--g1", g1_path, "Optional first matrix g1")->check(CLI::ExistingFile);
  certify->add_flag("--stop-at-first-failure", stop_first, "Skip the remaining patches after a failure");
  add_budget_flags(certify, certify_budget);

  // search
  auto* search = app.add_subcommand("search", "Sample orthogonal matrices until X_{1,T} is smooth");
  std::uint64_t seed = 1;
  std::size_t max_attempts = 20;
  std::string save_path;
  BudgetFlags search_budget;
  search->add_option("--prime", prime, "Prime modulus, 3 mod 4")->required();
  search->add_option("--seed", seed, "PRNG seed");
  search->add_option("--max-attempts", max_attempts, "Attempts before giving up");
  search->add_option("--save", save_path, "Write the matrix found to this file");
  add_budget_flags(search, search_budget);

  // bwb
  auto* bwb = app.add_subcommand("bwb", "Cohomology of Σ^α U∨ ⊗ Σ^β Q∨ on Gr(r, n)");
  int n = 5, r = 2, twist = 0;
  std::vector<int> alpha, beta;
  bwb->add_option("--n", n, "Dimension of V");
  bwb->add_option("--r", r, "Rank of U");
  bwb->add_option("--alpha", alpha, "Weight on U∨")->delimiter(',')->required()->allow_extra_args(false);
  bwb->add_option("--beta", beta, "Weight on Q∨")->delimiter(',')->required()->allow_extra_args(false);
  bwb->add_option("--twist", twist, "Tensor with O(t)");

  // lemmas
  auto* lemmas = app.add_subcommand("lemmas", "Run the cohomology tables and vanishing checks");
  std::string which = "all";
  lemmas->add_option("--which", which, "Check group")->check(CLI::IsMember({"tables", "vanishing", "all"}));

  // traces
  auto* traces = app.add_subcommand("traces", "Involution traces on the tangent space");
  std::vector<std::string> type1;
  std::string type2;
  bool dtau = false, all_traces = false, oracle = false;
  traces->add_option("--type1", type1, "Types of a0 and b0, e.g. 4,1 3,2")->expected(2);
  traces->add_option("--type2", type2, "Type of a in GL(10), e.g. 5,5");
  traces->add_flag("--dtau", dtau, "Trace of the derivative of the double-mirror map");
  traces->add_flag("--all", all_traces, "Full table, allowed set and the dtau verdict");
  traces->add_flag("--oracle", oracle, "Recompute --type1 with the exact-rational oracle");
  traces->add_option("--seed", seed, "Oracle conjugator seed");

  // count
  auto* count = app.add_subcommand("count", "Point counts of X, Y and the incidence divisor");
  std::string g_path;
  std::optional<std::uint64_t> random_seed;
  std::optional<bool> incidence;
  count->add_option("--prime", prime, "Field size q <= 7")->required();
  auto* g_opt = count->add_option("--g", g_path, "Matrix g (text format)")->check(CLI::ExistingFile);
  count->add_option("--random", random_seed, "Use a seeded random invertible g")->excludes(g_opt);
  count->add_flag("--incidence,!--no-incidence", incidence, "Enumerate incidence pairs (default at q = 2)");

  // l-class
  auto* lclass = app.add_subcommand("l-class", "Classes in Z[L] and the incidence identity");
  bool identity = false;
  std::vector<int> eval_at;
  lclass->add_flag("--identity", identity, "Print the symbolic derivation");
  lclass->add_option("--eval", eval_at, "Evaluate the classes at these q")->delimiter(',');

  // sqroot
  auto* sqroot = app.add_subcommand("sqroot", "Euler criterion and square root mod p");
  std::int64_t value = 0;
  sqroot->add_option("--prime", prime, "Prime modulus")->required();
  sqroot->add_option("value", value, "Residue")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  const bool json = common.format == "json";
  const bool timings = !common.no_timestamp;

  try {
    if (*certify) {
      const PrimeField field(prime);
      const MatrixFF g2 = read_matrix_file(matrix_path, field);
      const MatrixFF g1 = g1_path.empty() ? MatrixFF::identity(field, g2.rows()) : read_matrix_file(g1_path, field);
      CertifyOptions opts = certify_budget.options();
      opts.stop_at_first_failure = stop_first;
      const auto cert = certify_smooth_gpk3({g1, g2, matrix_path}, opts);
      if (json) emit_json(out, common, certificate_json(cert, timings));
      else print_certificate(out, cert, timings);
      return certificate_exit(cert);
    }

    if (*search) {
      const PrimeField field(prime);
      try {
        const auto res = search_orthogonal_smooth(field, seed, max_attempts, search_budget.options());
        if (!save_path.empty()) {
          std::ofstream f(save_path);
          if (!f) throw InputError("cannot write " + save_path);
          write_matrix(f, res.matrix);
        }
        if (json) {
          ordered_json attempts = ordered_json::array();
          for (const auto& a : res.attempts)
            attempts.push_back({{"attempt", a.attempt}, {"failed_patch", a.failed_patch}, {"reason", a.reason}});
          emit_json(out, common,
                    {{"prime", prime}, {"seed", seed}, {"attempts", attempts}, {"matrix", matrix_json(res.matrix)},
                     {"certificate", certificate_json(res.certificate, timings)}});
        } else {
          out << "seed " << seed << ": smooth orthogonal matrix after " << res.attempts.size() << " attempt(s)\n";
          for (const auto& a : res.attempts)
            if (!a.failed_patch.empty())
              out << "  attempt " << a.attempt << " failed on patch " << a.failed_patch << " (" << a.reason << ")\n";
          write_matrix(out, res.matrix);
          print_certificate(out, res.certificate, timings);
        }
        return kOk;
      } catch (const SearchExhausted& e) {
        err << "search: " << e.what() << '\n';
        return kBudgetExceeded;
      }
    }

    if (*bwb) {
      const auto spec = BundleSpec::make(n, r, alpha, beta).twisted(twist);
      const auto ans = bott_cohomology(spec);
      if (json) {
        ordered_json j = cohomology_json(ans);
        j["bundle"] = spec.label;
        emit_json(out, common, j);
      } else {
        out << "RΓ(Gr(" << r << "," << n << "), " << spec.label << ") = " << ans.describe() << '\n';
      }
      return kOk;
    }

    if (*lemmas) {
      std::vector<ClaimCheck> claims;
      if (which == "tables") claims = verify_cohomology_tables();
      else if (which == "vanishing") claims = verify_vanishing_claims();
      else claims = verify_cohomology_claims();
      return print_claims(out, common, claims, which);
    }

    if (*traces) {
      if (type1.empty() && type2.empty() && !dtau && !all_traces) throw InputError("traces: pick --type1, --type2, --dtau or --all");
      ordered_json j;
      int code = kOk;
      if (!type1.empty()) {
        const auto rep = trace_type1(parse_type(type1[0]), parse_type(type1[1]));
        j["type1"] = trace_json(rep);
        if (!json) out << "type I " << type1[0] << " x " << type1[1] << ": mult1 = " << rep.mult1 << ", trace = " << rep.trace << '\n';
        if (oracle) {
          auto diag = [](InvolutionType t) {
            std::array<int, 5> d{};
            for (int i = 0; i < 5; ++i) d[i] = i < t.p ? 1 : -1;
            return d;
          };
          const auto o = oracle_trace_type1(diag(rep.inputs[0]), diag(rep.inputs[1]), seed);
          j["oracle"] = {{"trace", o.trace}, {"attempts", o.attempts}, {"presentation_rank", o.presentation_rank},
                         {"agrees", o.trace == rep.trace}};
          if (!json) out << "  oracle (seed " << seed << "): trace = " << o.trace << (o.trace == rep.trace ? "  agrees" : "  DISAGREES") << '\n';
          if (o.trace != rep.trace) code = kVerificationFailed;
        }
      }
      if (!type2.empty()) {
        const auto rep = trace_type2(parse_type(type2));
        j["type2"] = trace_json(rep);
        if (!json) out << "type II " << rep.inputs[0].to_string() << ": mult1 = " << rep.mult1 << ", trace = " << rep.trace << '\n';
      }
      if (all_traces) {
        const InvolutionType t41{4, 1}, t32{3, 2};
        ordered_json t1 = ordered_json::array(), t2 = ordered_json::array();
        if (!json) out << "type I (a0, b0)      mult1  trace\n";
        for (const auto& [a, b] : {std::pair{t41, t41}, std::pair{t41, t32}, std::pair{t32, t32}}) {
          const auto rep = trace_type1(a, b);
          t1.push_back(trace_json(rep));
          if (!json) out << "  " << std::left << std::setw(18) << (a.to_string() + " " + b.to_string()) << std::right
                         << std::setw(6) << rep.mult1 << std::setw(7) << rep.trace << '\n';
        }
        if (!json) out << "type II a            mult1  trace\n";
        for (int q = 1; q <= 5; ++q) {
          const auto t = InvolutionType::make(10 - q, q);
          try {
            const auto rep = trace_type2(t);
            t2.push_back(trace_json(rep));
            if (!json) out << "  " << std::left << std::setw(18) << t.to_string() << std::right << std::setw(6)
                           << rep.mult1 << std::setw(7) << rep.trace << '\n';
          } catch (const DomainError&) {
            t2.push_back({{"kind", "II"}, {"types", {t.to_string()}}, {"rejected", true}});
            if (!json) out << "  " << std::left << std::setw(18) << t.to_string() << std::right << "  rejected (mult1 < 0)\n";
          }
        }
        const auto allowed = allowed_involution_traces();
        j["type1_table"] = t1;
        j["type2_table"] = t2;
        j["allowed_traces"] = std::vector<int>(allowed.rbegin(), allowed.rend());
        if (!json) {
          out << "allowed involution traces:";
          for (auto it = allowed.rbegin(); it != allowed.rend(); ++it) out << ' ' << *it;
          out << '\n';
        }
      }
      if (dtau || all_traces) {
        const int d = trace_dtau();
        const bool excluded = !allowed_involution_traces().contains(d);
        j["dtau"] = {{"trace", d}, {"excluded_from_allowed", excluded}};
        if (!json) out << "tr(dτ) = " << d << (excluded ? ", not an involution trace" : ", AMONG the involution traces") << '\n';
        if (!excluded) code = kVerificationFailed;
      }
      if (json) emit_json(out, common, j);
      return code;
    }

    if (*count) {
      const PrimeField field(prime);
      MatrixFF g = MatrixFF::identity(field, kPlueckerDim);
      if (!g_path.empty()) g = read_matrix_file(g_path, field);
      else if (random_seed) {
        RandomState rng(*random_seed);
        g = MatrixFF::random_invertible(field, kPlueckerDim, rng);
      } else {
        throw InputError("count: pass --g FILE or --random SEED");
      }
      const auto rep = count_and_compare(field, g, incidence.value_or(prime == 2));
      if (json) {
        emit_json(out, common, count_json(rep));
      } else {
        out << "q = " << rep.q << "  n_X = " << rep.n_x << "  n_Y = " << rep.n_y << "  n_Gr = " << rep.n_gr << '\n';
        if (rep.n_q) out << "n_Q = " << *rep.n_q << "  via X: " << rep.predicted_from_x << "  via Y: " << rep.predicted_from_y << '\n';
        out << (rep.verified() ? "verdict: n_X = n_Y" : "verdict: MISMATCH") << '\n';
      }
      return rep.verified() ? kOk : kVerificationFailed;
    }

    if (*lclass) {
      if (!identity && eval_at.empty()) throw InputError("l-class: pass --identity and/or --eval q1,q2");
      ordered_json j;
      if (identity) {
        const auto d = incidence_identity();
        j["steps"] = d.steps;
        j["difference"] = d.difference.to_string();
        if (!json)
          for (const auto& s : d.steps) out << s << '\n';
      }
      for (int q : eval_at) {
        if (q < 2) throw InputError("l-class: evaluation point must be >= 2");
        ordered_json e = {{"q", q},
                          {"P^1", class_pn(1).eval(q)},
                          {"Gr(2,5)", class_grassmannian_25().eval(q)},
                          {"section_rank2", class_section(2).eval(q)},
                          {"section_rank4", class_section(4).eval(q)}};
        if (!json)
          out << "q = " << q << ": [Gr] = " << e["Gr(2,5)"] << ", S2 = " << e["section_rank2"] << ", S4 = "
              << e["section_rank4"] << '\n';
        j["evaluations"].push_back(std::move(e));
      }
      if (json) emit_json(out, common, j);
      return kOk;
    }

    if (*sqroot) {
      const PrimeField field(prime);
      const FieldElement x = field.from_int(value);
      const bool square = field.is_square(x);
      ordered_json j = {{"prime", prime}, {"value", x.value}, {"is_square", square}};
      if (square && field.is_3_mod_4()) {
        const FieldElement root = field.sqrt_3mod4(x);
        j["root"] = root.value;
        if (!json) out << x.value << " = " << root.value << "^2 mod " << prime << '\n';
      } else if (!json) {
        out << x.value << (square ? " is a square mod " : " is not a nonzero square mod ") << prime << '\n';
      }
      if (json) emit_json(out, common, j);
      return square ? kOk : kVerificationFailed;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvariantError& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kInputError;
}

}  // namespace gpk::cli

#include "genmean/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "genmean/analytic.hpp"
#include "genmean/oracle.hpp"
#include "genmean/verify.hpp"
#include "json.hpp"

namespace genmean::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string fn = "h";
  int b = 2;
  int k = 2;
  double r = 1.0;
  std::string n;
  std::vector<std::string> ns;
  std::string xmax;
  int checkpoints = 20;
  double tol = 1e-8;
  int threads = 1;
  std::string format = "csv";
  std::string out;
  bool weighted = false;
  std::string name;
  std::string theorem;
  std::string max_n = "2000";
};

// Positive integer, optionally in scientific notation ("1e6").
u64 parse_count(const std::string& text, const char* flag) {
  u64 v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec == std::errc() && p == text.data() + text.size() && v >= 1) return v;
  char* end = nullptr;
  const double d = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || !std::isfinite(d) || d < 1 || d != std::floor(d) ||
      d > static_cast<double>(kMaxInput))
    throw UsageError(std::string(flag) + " expects a positive integer, got '" + text + "'");
  return static_cast<u64>(d);
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void require_format(const Config& c) {
  if (c.format != "csv" && c.format != "json") throw UsageError("--format must be csv or json");
}

// ---- eval --------------------------------------------------------------------

std::string eval_value(const Config& c) {
  if (c.fn == "gcd" || c.fn == "lcm") {
    if (c.ns.empty()) throw UsageError("--fn " + c.fn + " needs --ns (comma-separated list)");
    std::vector<u64> vals;
    for (const auto& s : c.ns) vals.push_back(parse_count(s, "--ns"));
    return std::to_string(c.fn == "gcd" ? gen_gcd(vals, c.b) : gen_lcm(vals, c.b));
  }
  if (c.n.empty()) throw UsageError("eval needs --n");
  const u64 n = parse_count(c.n, "--n");
  if (c.fn == "h") return std::to_string(h_b(n, c.b));
  if (c.fn == "phi") return std::to_string(phi_b(n, c.b));
  if (c.fn == "hmean") return harmonic_mean(n, c.b).to_string();
  if (c.fn == "geo") return format_real(geo_logsum(n, c.b));
  if (c.fn == "chi") return std::to_string(chi_b(n, c.b));
  if (c.fn == "xi") return std::to_string(xi_b(n, c.b));
  throw UsageError("unknown --fn '" + c.fn + "' (h, phi, hmean, geo, chi, xi, gcd, lcm)");
}

int run_eval(const Config& c, std::ostream& out) {
  Output o(c.out, out);
  *o << eval_value(c) << "\n";
  return 0;
}

// ---- table -------------------------------------------------------------------

FnId table_fn(const std::string& name) {
  if (name == "hmean") return FnId::harmonic_over_n;
  auto fn = parse_fn(name);
  if (!fn || *fn == FnId::harmonic_over_n || *fn == FnId::chi_root)
    throw UsageError("unknown --fn '" + name + "' (h, phi, hmean, geo, chi, xi)");
  return *fn;
}

int run_table(const Config& c, std::ostream& out) {
  require_format(c);
  if (c.xmax.empty()) throw UsageError("table needs --xmax");
  const u64 N = parse_count(c.xmax, "--xmax");
  const FnId fn = table_fn(c.fn);
  const SieveTable table = build_sieve(N);
  Output o(c.out, out);
  const bool json = c.format == "json";
  if (json)
    *o << "[";
  else
    *o << "n,value\n";
  auto emit = [&](u64 n, const std::string& v, bool quoted) {
    if (json)
      *o << (n > 1 ? "," : "") << "\n  {\"n\": " << n << ", \"value\": " << (quoted ? "\"" + v + "\"" : v) << "}";
    else
      *o << n << "," << v << "\n";
  };
  if (fn == FnId::harmonic_over_n) {
    std::array<PrimePower, 15> buf;
    for (u64 n = 1; n <= N; ++n) {
      const std::span<const PrimePower> f(buf.data(), table.factor(n, buf));
      emit(n, harmonic_mean(f, c.b).to_string(), true);
    }
  } else {
    const ValueTable vt = batch_values(fn, c.b, N, table, c.threads);
    for (u64 n = 1; n <= N; ++n)
      emit(n, is_exact(fn) ? std::to_string(vt.exact[n]) : format_real(vt.real[n]), false);
  }
  if (json) *o << "\n]\n";
  return 0;
}

// ---- sum ---------------------------------------------------------------------

int run_sum(const Config& c, std::ostream& out) {
  require_format(c);
  if (c.xmax.empty()) throw UsageError("sum needs --xmax");
  const u64 xmax = parse_count(c.xmax, "--xmax");
  if (c.checkpoints < 2) throw UsageError("--checkpoints must be >= 2");
  const FnId fn = table_fn(c.fn);
  SummatoryOptions so;
  so.threads = c.threads;
  const auto series = summatory(fn, c.b, xmax, static_cast<std::size_t>(c.checkpoints), c.weighted, so);
  Output o(c.out, out);
  auto plain = [&](const Checkpoint& cp) { return series.exact ? to_string(cp.exact_sum) : format_real(cp.plain_sum); };
  if (c.format == "json") {
    *o << "[";
    for (std::size_t i = 0; i < series.checkpoints.size(); ++i) {
      const auto& cp = series.checkpoints[i];
      *o << (i ? "," : "") << "\n  {\"x\": " << cp.x << ", \"plain_sum\": " << plain(cp);
      if (c.weighted) *o << ", \"weighted_sum\": " << format_real(*cp.weighted_sum);
      *o << "}";
    }
    *o << "\n]\n";
  } else {
    *o << (c.weighted ? "x,plain_sum,weighted_sum\n" : "x,plain_sum\n");
    for (const auto& cp : series.checkpoints) {
      *o << cp.x << "," << plain(cp);
      if (c.weighted) *o << "," << format_real(*cp.weighted_sum);
      *o << "\n";
    }
  }
  return 0;
}

// ---- constant ----------------------------------------------------------------

nlohmann::ordered_json constant_json(const EulerProductConstant& e) {
  nlohmann::ordered_json j;
  j["name"] = e.name;
  nlohmann::ordered_json params;
  params["b"] = e.b;
  if (e.k) params["k"] = *e.k;
  if (e.r) params["r"] = std::strtod(format_real(*e.r).c_str(), nullptr);
  j["params"] = params;
  j["value"] = std::strtod(format_real(e.value).c_str(), nullptr);
  j["tail_bound"] = std::strtod(format_real(e.tail_bound).c_str(), nullptr);
  j["prime_limit"] = e.prime_limit;
  j["term_limit"] = e.term_limit;
  return j;
}

int run_constant(const Config& c, std::ostream& out) {
  nlohmann::ordered_json j;
  if (c.name == "Cb") {
    j = constant_json(constant_Cb(c.b, c.tol));
  } else if (c.name == "Clcm") {
    j = constant_json(constant_lcm_general(MultiplicativeFunctionSpec::power(c.r), c.k, c.b, c.tol));
  } else if (c.name == "Clcm_closed") {
    j = constant_json(constant_lcm_closed_k2(c.b, c.r, c.tol));
  } else if (c.name == "Clcm_compare") {
    const auto cmp = compare_lcm_routes(c.b, c.r, c.tol);
    j["general"] = constant_json(cmp.general);
    j["closed"] = cmp.closed.name.empty() ? nlohmann::ordered_json(nullptr) : constant_json(cmp.closed);
    j["difference"] = std::strtod(format_real(cmp.difference).c_str(), nullptr);
    j["allowed"] = std::strtod(format_real(cmp.allowed).c_str(), nullptr);
    j["agree"] = cmp.agree;
    j["report"] = cmp.report;
  } else {
    throw UsageError("unknown --name '" + c.name + "' (Cb, Clcm, Clcm_closed, Clcm_compare)");
  }
  Output o(c.out, out);
  *o << j.dump(2) << "\n";
  return 0;
}

// ---- verify ------------------------------------------------------------------

int run_verify(const Config& c, std::ostream& out) {
  const auto id = parse_theorem(c.theorem);
  if (!id) throw UsageError("unknown --theorem '" + c.theorem + "'");
  if (c.xmax.empty()) throw UsageError("verify needs --xmax");
  const u64 xmax = parse_count(c.xmax, "--xmax");
  if (c.checkpoints < 2) throw UsageError("--checkpoints must be >= 2");
  if (c.k < 2) throw UsageError("--k must be >= 2");
  const TheoremSpec spec = make_theorem_spec(*id, c.b, static_cast<unsigned>(c.k), c.r);
  VerifyOptions vo;
  vo.threads = c.threads;
  const auto report = run_verification(spec, xmax, static_cast<std::size_t>(c.checkpoints), vo);
  Output o(c.out, out);
  *o << report_to_json(report);
  switch (report.verdict) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::inconclusive: return 3;
  }
  return 3;
}

// ---- oracle-check ------------------------------------------------------------

int run_oracle_check(const Config& c, std::ostream& out) {
  const u64 max_n = parse_count(c.max_n, "--max-n");
  std::vector<std::string> fns;
  if (c.fn == "all")
    fns = {"h", "phi", "hmean", "geo", "chi", "xi"};
  else
    fns = {c.fn};
  Output o(c.out, out);
  int status = 0;
  for (const auto& name : fns) {
    oracle::PointwiseKind kind;
    if (name == "h")
      kind = oracle::PointwiseKind::gen_gcd_sum;
    else if (name == "phi")
      kind = oracle::PointwiseKind::phi;
    else if (name == "hmean")
      kind = oracle::PointwiseKind::harmonic;
    else if (name == "geo")
      kind = oracle::PointwiseKind::geo;
    else if (name == "chi")
      kind = oracle::PointwiseKind::chi;
    else if (name == "xi")
      kind = oracle::PointwiseKind::xi;
    else
      throw UsageError("unknown --fn '" + name + "' (h, phi, hmean, geo, chi, xi, all)");
    const auto& brute = oracle::brute_table(kind, c.b, max_n);
    u64 bad = 0;
    std::string first;
    for (u64 n = 1; n <= max_n; ++n) {
      bool same;
      std::string got, want;
      if (kind == oracle::PointwiseKind::geo) {
        const double v = geo_logsum(n, c.b);
        const double w = std::get<double>(brute[n]);
        same = std::fabs(v - w) <= 1e-9;
        got = format_real(v);
        want = format_real(w);
      } else {
        Rational v;
        switch (kind) {
          case oracle::PointwiseKind::gen_gcd_sum: v = Rational(h_b(n, c.b)); break;
          case oracle::PointwiseKind::phi: v = Rational(phi_b(n, c.b)); break;
          case oracle::PointwiseKind::harmonic: v = harmonic_mean(n, c.b); break;
          case oracle::PointwiseKind::chi: v = Rational(chi_b(n, c.b)); break;
          default: v = Rational(xi_b(n, c.b)); break;
        }
        const Rational w = std::get<Rational>(brute[n]);
        same = v == w;
        got = v.to_string();
        want = w.to_string();
      }
      if (!same && bad++ == 0) first = "n=" + std::to_string(n) + " formula=" + got + " oracle=" + want;
    }
    *o << "oracle-check fn=" << name << " b=" << c.b << " max_n=" << max_n << ": "
       << (bad == 0 ? "all values agree" : std::to_string(bad) + " mismatches, first " + first) << "\n";
    if (bad) status = 1;
  }
  return status;
}

void add_common(CLI::App* app, Config& c) {
  app->add_option("--b", c.b, "exponent b (default 2)");
  app->add_option("--threads", c.threads, "worker threads (default 1)");
  app->add_option("--out", c.out, "write to this file instead of standard output");
  app->add_option("--format", c.format, "csv or json (default csv)");
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Generalized gcd/lcm functions: evaluation, tables, constants and mean-value checks", "genmean"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "evaluate one function value");
  eval->add_option("--fn", c.fn, "h, phi, hmean, geo, chi, xi, gcd, lcm");
  eval->add_option("--n", c.n, "argument n");
  eval->add_option("--ns", c.ns, "arguments for gcd/lcm")->delimiter(',');
  add_common(eval, c);

  auto* table = app.add_subcommand("table", "tabulate n,value for n = 1..xmax");
  table->add_option("--fn", c.fn, "h, phi, hmean, geo, chi, xi");
  table->add_option("--xmax", c.xmax, "last n");
  add_common(table, c);

  auto* sum = app.add_subcommand("sum", "partial sums at geometric checkpoints");
  sum->add_option("--fn", c.fn, "h, phi, hmean (sums H_b(n)/n), geo, chi, xi");
  sum->add_option("--xmax", c.xmax, "largest x (scientific notation allowed)");
  sum->add_option("--checkpoints", c.checkpoints, "number of checkpoints (default 20)");
  sum->add_flag("--weighted", c.weighted, "also report sum (1 - n/x) f(n)");
  add_common(sum, c);

  auto* constant = app.add_subcommand("constant", "Euler-product constants as JSON");
  constant->add_option("--name", c.name, "Cb, Clcm, Clcm_closed, Clcm_compare")->required();
  constant->add_option("--k", c.k, "number of variables (default 2)");
  constant->add_option("--r", c.r, "f = id^r (default 1)");
  constant->add_option("--tol", c.tol, "tail bound target (default 1e-8)");
  add_common(constant, c);

  auto* verify = app.add_subcommand("verify", "check a mean-value theorem numerically; JSON report");
  verify->add_option("--theorem", c.theorem, "T1.1 ... T1.7, McCarthy, Walfisz")->required();
  verify->add_option("--xmax", c.xmax, "largest x (scientific notation allowed)");
  verify->add_option("--k", c.k, "number of variables for T1.6/T1.7 (default 2)");
  verify->add_option("--r", c.r, "exponent r for T1.7 (default 1)");
  verify->add_option("--checkpoints", c.checkpoints, "number of checkpoints (default 20)");
  add_common(verify, c);

  auto* oc = app.add_subcommand("oracle-check", "compare formulas with brute-force oracles");
  oc->add_option("--fn", c.fn, "h, phi, hmean, geo, chi, xi or all");
  oc->add_option("--max-n", c.max_n, "check n = 1..max-n (default 2000)");
  add_common(oc, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error[E_USAGE]: " << e.what() << "\n";
    return 2;
  }

  try {
    if (c.b < 1) throw UsageError("--b must be >= 1");
    if (c.threads < 0) throw UsageError("--threads must be >= 0");
    if (*eval) return run_eval(c, out);
    if (*table) return run_table(c, out);
    if (*sum) return run_sum(c, out);
    if (*constant) return run_constant(c, out);
    if (*verify) return run_verify(c, out);
    if (*oc) return run_oracle_check(c, out);
  } catch (const UsageError& e) {
    err << "error[E_USAGE]: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error[E_DOMAIN]: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    err << "error[E_BUDGET]: " << e.what() << "\n";
    return 3;
  } catch (const OverflowError& e) {
    err << "error[E_OVERFLOW]: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace genmean::cli

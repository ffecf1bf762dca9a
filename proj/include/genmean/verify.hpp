#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genmean/summatory.hpp"

namespace genmean {

enum class TheoremId { T1_1, T1_2, T1_3, T1_4, T1_5, T1_6_gcd, T1_7_lcm, McCarthy_phi, Walfisz_xi };

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);

// coef * x^exponent * (log x)^log_power
struct MainTermPiece {
  double coef;
  double exponent;
  int log_power;
};

struct TheoremSpec {
  TheoremId id;
  unsigned b = 2;
  unsigned k = 2;
  double r = 1.0;
  std::vector<MainTermPiece> main_terms;  // leading piece first
  double error_exponent_bound = 1.0;
  int error_log_power = 0;
};

/// Builds the spec with all coefficients evaluated through the analytic
/// module. Rejects b = 1 and parameters a theorem does not cover.
TheoremSpec make_theorem_spec(TheoremId id, unsigned b, unsigned k = 2, double r = 1.0);

double main_term(const TheoremSpec& spec, double x);

struct PowerLawFit {
  double exponent = 0.0;
  double scale = 0.0;
  double rms_log_residual = 0.0;
  int points_used = 0;
  // |r| ~ scale * x^exponent * log x
  double forced_log_exponent = 0.0;
  double forced_log_scale = 0.0;
  double forced_log_rms = 0.0;
};

/// Least squares of log|r| against log x; zero residuals are skipped. Needs
/// at least 5 usable points.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points);

/// Median of (S(x_{i+1}) - S(x_i)) / (log x_{i+1} - log x_i) over the top
/// half of the points. Needs >= 3 points spanning >= 2 decades.
double slope_fit(const std::vector<std::pair<double, double>>& points);
double slope_fit(const SummatorySeries& series);

enum class Verdict { pass, fail, inconclusive };
std::string_view verdict_name(Verdict v);

struct ReportRow {
  double x = 0.0;
  double empirical = 0.0;
  std::optional<u128> empirical_exact;
  double main = 0.0;
  double residual = 0.0;
};

struct VerificationReport {
  TheoremSpec spec;
  u64 xmax = 0;
  std::vector<ReportRow> rows;
  std::optional<PowerLawFit> fit;
  Verdict verdict = Verdict::inconclusive;
  std::vector<std::string> notes;
  // Named measurements behind the verdict (for scripts and the acceptance runner).
  std::map<std::string, double> metrics;
};

struct VerifyOptions {
  int threads = 1;
  std::optional<u64> x_min;  // default depends on the theorem
  bool brute_check = true;   // compare lattice data with the oracle when small
};

VerificationReport run_verification(const TheoremSpec& spec, u64 xmax, std::size_t num_checkpoints,
                                    const VerifyOptions& opts = {});

/// JSON text of the report; doubles carry 15 significant digits.
std::string report_to_json(const VerificationReport& report);

/// Shortest text for v that round-trips after rounding to 15 significant digits.
std::string format_real(double v);

}  // namespace genmean

#include <algorithm>
#include <cmath>

#include "genmean/verify.hpp"

namespace genmean {

namespace {

struct LineFit {
  double slope, intercept, rms;
};

LineFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0) throw DomainError("fit: all abscissae coincide");
  LineFit f{sxy / sxx, 0, 0};
  f.intercept = my - f.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (f.intercept + f.slope * xs[i]);
    ss += e * e;
  }
  f.rms = std::sqrt(ss / n);
  return f;
}

}  // namespace

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points) {
  std::vector<double> lx, ly, lx2, ly2;
  for (const auto& [x, r] : points) {
    if (r == 0.0 || !(x > 0.0)) continue;
    lx.push_back(std::log(x));
    ly.push_back(std::log(std::fabs(r)));
    if (x > 1.0) {
      lx2.push_back(std::log(x));
      ly2.push_back(std::log(std::fabs(r)) - std::log(std::log(x)));
    }
  }
  if (lx.size() < 5) throw DomainError("fit_power_law: fewer than 5 nonzero residuals");
  const LineFit plain = least_squares(lx, ly);
  PowerLawFit fit;
  fit.exponent = plain.slope;
  fit.scale = std::exp(plain.intercept);
  fit.rms_log_residual = plain.rms;
  fit.points_used = static_cast<int>(lx.size());
  if (lx2.size() >= 2) {
    const LineFit forced = least_squares(lx2, ly2);
    fit.forced_log_exponent = forced.slope;
    fit.forced_log_scale = std::exp(forced.intercept);
    fit.forced_log_rms = forced.rms;
  }
  return fit;
}

double slope_fit(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw DomainError("slope_fit: need at least 3 checkpoints");
  if (!(points.back().first >= 100.0 * points.front().first))
    throw DomainError("slope_fit: checkpoints must span at least two decades");
  std::vector<double> q;
  for (std::size_t i = points.size() / 2; i + 1 < points.size(); ++i) {
    const double dl = std::log(points[i + 1].first) - std::log(points[i].first);
    q.push_back((points[i + 1].second - points[i].second) / dl);
  }
  std::sort(q.begin(), q.end());
  const std::size_t m = q.size();
  return m % 2 == 1 ? q[m / 2] : 0.5 * (q[m / 2 - 1] + q[m / 2]);
}

double slope_fit(const SummatorySeries& series) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& cp : series.checkpoints) pts.emplace_back(static_cast<double>(cp.x), cp.plain_sum);
  return slope_fit(pts);
}

}  // namespace genmean

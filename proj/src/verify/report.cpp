#include <charconv>
#include <cmath>
#include <cstdlib>

#include "genmean/verify.hpp"
#include "json.hpp"

namespace genmean {

std::string format_real(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
  return std::string(buf, res.ptr);
}

namespace {

nlohmann::ordered_json real(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::strtod(format_real(v).c_str(), nullptr);
}

nlohmann::ordered_json exact(u128 v) {
  if (v <= u128{UINT64_MAX}) return static_cast<std::uint64_t>(v);
  return to_string(v);
}

}  // namespace

std::string report_to_json(const VerificationReport& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["theorem"] = std::string(theorem_name(report.spec.id));
  j["b"] = report.spec.b;
  j["k"] = report.spec.k;
  j["r"] = real(report.spec.r);
  j["xmax"] = report.xmax;
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json o;
    o["x"] = static_cast<std::uint64_t>(row.x);
    o["empirical"] = row.empirical_exact ? exact(*row.empirical_exact) : real(row.empirical);
    o["main"] = real(row.main);
    o["residual"] = real(row.residual);
    rows.push_back(std::move(o));
  }
  j["checkpoints"] = std::move(rows);
  if (report.fit) {
    j["fit"] = {{"exponent", real(report.fit->exponent)},
                {"scale", real(report.fit->scale)},
                {"rms", real(report.fit->rms_log_residual)}};
  } else {
    j["fit"] = nullptr;
  }
  j["verdict"] = std::string(verdict_name(report.verdict));
  j["notes"] = report.notes;
  return j.dump(2) + "\n";
}

}  // namespace genmean

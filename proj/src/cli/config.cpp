#include "floqlat/cli/config.hpp"

#include <cctype>
#include <cmath>
#include <string>

namespace floqlat::cli {
namespace {

std::string flag_error(std::string_view flag, const std::string& what) {
  return std::string(flag) + ": " + what;
}

}  // namespace

double parse_jt(std::string_view token, std::string_view flag) {
  std::string s(token);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  double scale = 1.0;
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
    scale = std::numbers::pi;
    s.resize(s.size() - 2);
    if (!s.empty() && s.back() == '*') s.pop_back();
    if (s.empty() || s == "+") s = "1";
    if (s == "-") s = "-1";
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ValidationError(flag_error(flag, "cannot parse '" + std::string(token) + "'"));
  }
  if (used != s.size() || !std::isfinite(value))
    throw ValidationError(flag_error(flag, "cannot parse '" + std::string(token) + "'"));
  return value * scale;
}

void RunConfig::validate() const {
  const double two_pi = 2.0 * std::numbers::pi;
  if (!model.empty() && model != "floquet" && model != "static" && model != "both")
    throw ValidationError(flag_error("--model", "expected floquet, static or both, got '" + model + "'"));
  if (!(jt > 0.0 && jt < two_pi)) throw ValidationError(flag_error("--jt", "must lie in (0, 2pi)"));
  if (!(period > 0.0) || !std::isfinite(period))
    throw ValidationError(flag_error("--period", "must be positive"));
  if (grid < 2) throw ValidationError(flag_error("--grid", "must be at least 2"));
  if (sites && *sites < 2) throw ValidationError(flag_error("--sites", "must be at least 2"));
  if (!(jt_min > 0.0 && jt_min < two_pi))
    throw ValidationError(flag_error("--jt-min", "must lie in (0, 2pi)"));
  if (!(jt_max > 0.0 && jt_max < two_pi))
    throw ValidationError(flag_error("--jt-max", "must lie in (0, 2pi)"));
  if (jt_min > jt_max) throw ValidationError(flag_error("--jt-min", "exceeds --jt-max"));
  if (steps && *steps < 2) throw ValidationError(flag_error("--steps", "must be at least 2"));
  if (!std::isfinite(k_plus)) throw ValidationError(flag_error("--k-plus", "must be finite"));
  if (tol && !(*tol >= 0.0)) throw ValidationError(flag_error("--tol", "must be non-negative"));
}

ModelParams RunConfig::params(std::size_t default_sites) const {
  ModelParams p;
  p.jt = jt;
  p.period = period;
  p.variant = variant;
  p.n_minus = sites.value_or(default_sites);
  p.n_plus = sites.value_or(default_sites);
  return p;
}

}  // namespace floqlat::cli

#include "floqlat/floquet/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace floqlat {

Variant parse_variant(std::string_view token) {
  if (token == "A" || token == "a") return Variant::A;
  if (token == "B" || token == "b") return Variant::B;
  throw std::invalid_argument("unknown variant '" + std::string(token) + "' (expected A or B)");
}

OpenDirection parse_open_direction(std::string_view token) {
  if (token == "x-minus" || token == "minus" || token == "x-") return OpenDirection::XMinus;
  if (token == "x-plus" || token == "plus" || token == "x+") return OpenDirection::XPlus;
  throw std::invalid_argument("unknown open direction '" + std::string(token) +
                              "' (expected x-minus or x-plus)");
}

std::string to_string(Variant v) { return v == Variant::A ? "A" : "B"; }

std::string to_string(OpenDirection d) {
  return d == OpenDirection::XMinus ? "x-minus" : "x-plus";
}

void ModelParams::validate() const {
  if (!std::isfinite(jt)) throw std::invalid_argument("jt must be finite");
  if (!(period > 0.0) || !std::isfinite(period))
    throw std::invalid_argument("period T must be positive");
  if (n_minus < 2) throw std::invalid_argument("n_minus must be at least 2");
  if (n_plus < 2) throw std::invalid_argument("n_plus must be at least 2");
}

double wrap_angle(double k) {
  double r = std::remainder(k, 2.0 * std::numbers::pi);
  if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
  return r;
}

double wrap_quasienergy(double eps, double period) { return wrap_angle(eps * period) / period; }

MomentumPoint MomentumPoint::wrapped(double k_plus, double k_minus) {
  return {wrap_angle(k_plus), wrap_angle(k_minus)};
}

std::vector<double> brillouin_line(std::size_t n) {
  std::vector<double> ks;
  ks.reserve(n);
  const auto ln = static_cast<long long>(n);
  for (long long big_k = 0; big_k < ln; ++big_k) {
    const long long shifted = 2 * big_k <= ln ? big_k : big_k - ln;
    ks.push_back(2.0 * std::numbers::pi * static_cast<double>(shifted) / static_cast<double>(n));
  }
  std::sort(ks.begin(), ks.end());
  return ks;
}

}  // namespace floqlat

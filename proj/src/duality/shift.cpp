#include "floqlat/duality/shift.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "floqlat/staticlat/stagger.hpp"

namespace floqlat {
namespace {

constexpr double kWindowSlack = 1e-12;

double circle_distance(double a, double b, double period) {
  return std::abs(wrap_quasienergy(a - b, period));
}

}  // namespace

ShiftedSpectrum pi_shift(const SpectrumTable& spectrum, double period) {
  if (!(period > 0.0)) throw std::invalid_argument("pi_shift: period must be positive");
  const double edge = std::numbers::pi / period;
  ShiftedSpectrum out;
  out.source = spectrum;
  out.period = period;
  for (const auto& row : spectrum.values) {
    std::vector<Branch> branches;
    std::vector<double> prime;
    std::vector<double> target;
    for (double eps : row) {
      if (!(eps > -edge - kWindowSlack && eps <= edge + kWindowSlack))
        throw std::invalid_argument("pi_shift: quasienergy " + std::to_string(eps) +
                                    " outside (-pi/T, pi/T]");
      const Branch b = eps >= 0.0 ? Branch::Plus : Branch::Minus;
      const double ep = b == Branch::Plus ? eps / 2.0 - edge / 2.0 : eps / 2.0 + edge / 2.0;
      branches.push_back(b);
      prime.push_back(ep);
      target.push_back(std::sin(ep * period) / period);
    }
    out.branches.push_back(std::move(branches));
    out.eps_prime.push_back(std::move(prime));
    out.eps_s.push_back(std::move(target));
  }
  return out;
}

SpectrumTable ShiftedSpectrum::target_table() const {
  SpectrumTable t = source;
  t.values = eps_s;
  for (auto& row : t.values) std::sort(row.begin(), row.end());
  t.model = source.model + "-shifted";
  return t;
}

std::vector<std::vector<double>> unshift(const ShiftedSpectrum& shifted) {
  const double edge = std::numbers::pi / shifted.period;
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < shifted.eps_prime.size(); ++i) {
    std::vector<double> row;
    for (std::size_t j = 0; j < shifted.eps_prime[i].size(); ++j) {
      const double ep = shifted.eps_prime[i][j];
      row.push_back(shifted.branches[i][j] == Branch::Plus ? 2.0 * ep + edge : 2.0 * ep - edge);
    }
    out.push_back(std::move(row));
  }
  return out;
}

SpectrumTable roundtrip_frequencies(const ShiftedSpectrum& shifted) {
  SpectrumTable t = shifted.source;
  t.model = shifted.source.model + "-frequencies";
  for (std::size_t i = 0; i < shifted.eps_s.size(); ++i) {
    auto& row = t.values[i];
    row.clear();
    for (double es : shifted.eps_s[i]) {
      // Round-off can push |eps_s T| a hair above 1 only if sin did; clamp that.
      const double x = std::clamp(es * shifted.period, -1.0, 1.0) / shifted.period;
      row.push_back(discrete_time_frequencies(x, shifted.period, TimeScheme::Staggered).front());
    }
    std::sort(row.begin(), row.end());
  }
  return t;
}

RoundtripDeviation roundtrip_deviation(const ShiftedSpectrum& shifted) {
  const double edge = std::numbers::pi / shifted.period;
  RoundtripDeviation dev;
  for (std::size_t i = 0; i < shifted.eps_s.size(); ++i) {
    for (std::size_t j = 0; j < shifted.eps_s[i].size(); ++j) {
      const double x = std::clamp(shifted.eps_s[i][j] * shifted.period, -1.0, 1.0) / shifted.period;
      const double k0 = discrete_time_frequencies(x, shifted.period, TimeScheme::Staggered).front();
      const double eps = shifted.source.values[i][j];
      const double expected = shifted.branches[i][j] == Branch::Plus ? eps - edge : eps + edge;
      dev.vs_two_eps_prime = std::max(
          dev.vs_two_eps_prime, circle_distance(k0, 2.0 * shifted.eps_prime[i][j], shifted.period));
      dev.vs_source = std::max(dev.vs_source, circle_distance(k0, expected, shifted.period));
    }
  }
  return dev;
}

}  // namespace floqlat

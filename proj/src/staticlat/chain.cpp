#include "floqlat/staticlat/chain.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace floqlat {
namespace {

constexpr double kMassSlack = 1e-15;

void check_mass(double m, const char* where) {
  if (!(std::abs(m) <= 1.0 + kMassSlack))
    throw std::domain_error(std::string(where) + ": |m| = " + std::to_string(std::abs(m)) +
                            " exceeds 1");
}

void add_block(ComplexMatrix& h, std::size_t row_cell, std::size_t col_cell, const ComplexMatrix& b) {
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) h(2 * row_cell + r, 2 * col_cell + c) += b(r, c);
}

ComplexMatrix build_wilson_dirac(const WilsonDiracParams& p, std::size_t cells, Boundary boundary) {
  const ComplexMatrix sx = pauli::x();
  const ComplexMatrix sy = pauli::y();
  const Complex i{0.0, 1.0};
  // Forward hop x -> x+1: nabla = +1/2, Laplacian = 1.
  const ComplexMatrix forward = (i * (0.5 * p.r)) * sx + Complex{-0.5 * p.r, 0.0} * sy;
  const ComplexMatrix backward = forward.adjoint();
  const ComplexMatrix onsite = Complex{p.m0 + p.r, 0.0} * sy;

  ComplexMatrix h(2 * cells, 2 * cells);
  for (std::size_t x = 0; x < cells; ++x) {
    add_block(h, x, x, onsite);
    const bool last = x + 1 == cells;
    if (!last || boundary == Boundary::Periodic) {
      const std::size_t next = last ? 0 : x + 1;
      add_block(h, x, next, forward);
      add_block(h, next, x, backward);
    }
  }
  return h;
}

ComplexMatrix build_ssh(const SshParams& p, std::size_t cells, Boundary boundary) {
  ComplexMatrix h(2 * cells, 2 * cells);
  for (std::size_t x = 0; x < cells; ++x) {
    h(2 * x, 2 * x + 1) += p.v;
    h(2 * x + 1, 2 * x) += p.v;
    const bool last = x + 1 == cells;
    if (!last || boundary == Boundary::Periodic) {
      const std::size_t next = last ? 0 : x + 1;
      h(2 * x + 1, 2 * next) += p.w;
      h(2 * next, 2 * x + 1) += p.w;
    }
  }
  return h;
}

}  // namespace

ComplexMatrix chain_bloch(const ChainParams& params, double k) {
  if (const auto* wd = std::get_if<WilsonDiracParams>(&params)) {
    return Complex{wd->r * std::sin(k), 0.0} * pauli::x() +
           Complex{wd->m0 + wd->r * (1.0 - std::cos(k)), 0.0} * pauli::y();
  }
  const auto& ssh = std::get<SshParams>(params);
  const Complex off = ssh.v + ssh.w * std::polar(1.0, k);
  return {{0.0, off}, {std::conj(off), 0.0}};
}

ComplexMatrix chain_build(const ChainSpec& chain) {
  if (chain.cells < 2) throw std::invalid_argument("chain_build: need at least 2 cells");
  if (const auto* wd = std::get_if<WilsonDiracParams>(&chain.params))
    return build_wilson_dirac(*wd, chain.cells, chain.boundary);
  return build_ssh(std::get<SshParams>(chain.params), chain.cells, chain.boundary);
}

ChainParams variant_params(Variant variant, double m) {
  check_mass(m, "variant_params");
  if (variant == Variant::A) return WilsonDiracParams{m, (1.0 - m) / 2.0};
  return SshParams{(1.0 + m) / 2.0, (m - 1.0) / 2.0};
}

bool chain_has_end_modes(const ChainParams& params) {
  if (const auto* wd = std::get_if<WilsonDiracParams>(&params)) return wd->m0 * wd->r < 0.0;
  const auto& ssh = std::get<SshParams>(params);
  return std::abs(ssh.w) > std::abs(ssh.v);
}

std::pair<double, double> chain_dispersion(double k_minus, double m) {
  check_mass(m, "chain_dispersion");
  const double m2 = m * m;
  const double e = std::sqrt(std::max(0.0, 0.5 * (1.0 + m2) - 0.5 * (1.0 - m2) * std::cos(k_minus)));
  return {e, -e};
}

}  // namespace floqlat

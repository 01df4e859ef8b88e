#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

namespace floqlat {

/// Which one-dimensional chain carries the x- dependence of the static model:
/// A is the Wilson-Dirac chain, B the SSH chain.
enum class Variant { A, B };

/// Strip geometry: the named Bravais direction is open, the other periodic.
enum class OpenDirection { XMinus, XPlus };

Variant parse_variant(std::string_view token);
OpenDirection parse_open_direction(std::string_view token);
std::string to_string(Variant v);
std::string to_string(OpenDirection d);

/// Drive and lattice parameters shared by the Floquet and static models.
///
/// `jt` is the dimensionless product J*T of hopping and period. The mass
/// m = cos(jt/2) is always derived, never stored.
struct ModelParams {
  double jt = 1.5 * std::numbers::pi;
  double period = 1.0;
  Variant variant = Variant::A;
  std::size_t n_minus = 6;
  std::size_t n_plus = 6;

  double m() const { return std::cos(jt / 2.0); }
  double hopping() const { return jt / period; }
  std::size_t transverse_cells(OpenDirection open) const {
    return open == OpenDirection::XMinus ? n_minus : n_plus;
  }

  /// Throws std::invalid_argument on period <= 0 or fewer than 2 cells.
  void validate() const;
};

/// Point of the Brillouin zone in rotated Bravais coordinates, lattice constant 1.
struct MomentumPoint {
  double k_plus = 0.0;
  double k_minus = 0.0;

  /// Both components reduced into (-pi, pi].
  static MomentumPoint wrapped(double k_plus, double k_minus);
};

/// Reduces an angle into (-pi, pi].
double wrap_angle(double k);

/// Reduces a quasienergy into (-pi/T, pi/T].
double wrap_quasienergy(double eps, double period);

/// The n allowed momenta 2*pi*K/n of a periodic ring, ascending in (-pi, pi].
std::vector<double> brillouin_line(std::size_t n);

}  // namespace floqlat

#pragma once

#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "floqlat/floquet/model.hpp"

namespace floqlat::cli {

enum class Format { Csv, Json };

/// Bad user input; the message names the offending flag. Maps to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "1.5pi", "pi", "-0.5pi" or a plain decimal. Throws ValidationError.
double parse_jt(std::string_view token, std::string_view flag = "--jt");

struct RunConfig {
  std::string command;
  /// floquet, static or both; empty picks the command default.
  std::string model;
  Variant variant = Variant::A;
  double jt = 1.5 * std::numbers::pi;
  double period = 1.0;
  std::size_t grid = 64;
  /// Transverse cells of a strip; per-command default when unset.
  std::optional<std::size_t> sites;
  OpenDirection open = OpenDirection::XMinus;
  Format format = Format::Csv;
  std::string output;
  double jt_min = 0.1 * std::numbers::pi;
  double jt_max = 1.9 * std::numbers::pi;
  /// Scan points; per-command default when unset.
  std::optional<std::size_t> steps;
  double k_plus = 0.0;
  std::optional<double> tol;

  /// Throws ValidationError naming the flag of the first bad value.
  void validate() const;
  ModelParams params(std::size_t default_sites) const;
};

}  // namespace floqlat::cli

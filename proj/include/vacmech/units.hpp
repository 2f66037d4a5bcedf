#pragma once

// Physical constants, dimensions over (length, time, mass), and conversion
// between SI and the internal natural-unit convention (hbar = c = 1, base
// length = meter).  All numerics elsewhere in the library run in natural
// units; SI appears only at the API edges.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vacmech {

namespace constants {
inline constexpr double hbar_si = 1.054571817e-34;  // J s (CODATA 2018)
inline constexpr double c_si = 299792458.0;         // m / s
}  // namespace constants

struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exponent tuple over (length, time, mass).
struct Dimension {
  int length = 0;
  int time = 0;
  int mass = 0;

  friend constexpr bool operator==(const Dimension&, const Dimension&) = default;

  constexpr Dimension operator+(const Dimension& o) const {
    return {length + o.length, time + o.time, mass + o.mass};
  }
  constexpr Dimension operator-(const Dimension& o) const {
    return {length - o.length, time - o.time, mass - o.mass};
  }
  constexpr Dimension operator*(int n) const { return {length * n, time * n, mass * n}; }

  // In hbar = c = 1 every dimension collapses to a power of length.
  constexpr int natural_length_power() const { return length + time - mass; }

  std::string str() const {
    return "(L" + std::to_string(length) + " T" + std::to_string(time) + " M" +
           std::to_string(mass) + ")";
  }
};

namespace dim {
inline constexpr Dimension dimensionless{0, 0, 0};
inline constexpr Dimension length{1, 0, 0};
inline constexpr Dimension inverse_length{-1, 0, 0};
inline constexpr Dimension time{0, 1, 0};
inline constexpr Dimension frequency{0, -1, 0};
inline constexpr Dimension mass{0, 0, 1};
inline constexpr Dimension area{2, 0, 0};
inline constexpr Dimension velocity{1, -1, 0};
inline constexpr Dimension energy{2, -2, 1};
inline constexpr Dimension force{1, -2, 1};
inline constexpr Dimension power{2, -3, 1};
}  // namespace dim

struct Quantity {
  double value = 0.0;
  Dimension dimension{};

  Quantity() = default;
  Quantity(double v, Dimension d) : value(v), dimension(d) {}

  Quantity operator*(const Quantity& o) const {
    return {value * o.value, dimension + o.dimension};
  }
  Quantity operator/(const Quantity& o) const {
    return {value / o.value, dimension - o.dimension};
  }
  Quantity operator+(const Quantity& o) const {
    require_same(o, "+");
    return {value + o.value, dimension};
  }
  Quantity operator-(const Quantity& o) const {
    require_same(o, "-");
    return {value - o.value, dimension};
  }
  Quantity operator*(double s) const { return {value * s, dimension}; }
  friend Quantity operator*(double s, const Quantity& q) { return q * s; }

  void require_same(const Quantity& o, const char* op) const {
    if (dimension != o.dimension)
      throw dimension_error(std::string("dimension mismatch in '") + op + "': " +
                            dimension.str() + " vs " + o.dimension.str());
  }
};

inline Quantity pow(const Quantity& q, int n) {
  return {std::pow(q.value, n), q.dimension * n};
}

struct UnitSystem {
  enum class Mode { Natural, SI };
  Mode mode = Mode::Natural;
  double hbar = 1.0;
  double c = 1.0;

  static UnitSystem natural() { return {Mode::Natural, 1.0, 1.0}; }
  static UnitSystem si() { return {Mode::SI, constants::hbar_si, constants::c_si}; }
};

// SI value (m^a s^b kg^g) -> natural value with dimension length^(a+b-g).
// Multiplying by c^(b+g) hbar^(-g) removes seconds and kilograms.
inline Quantity to_natural(const Quantity& x, const UnitSystem& u) {
  if (u.mode == UnitSystem::Mode::Natural) return x;
  const Dimension d = x.dimension;
  const double factor =
      std::pow(u.c, d.time + d.mass) * std::pow(u.hbar, -d.mass);
  return {x.value * factor, {d.natural_length_power(), 0, 0}};
}

// Inverse of to_natural.  The target dimension must be supplied: a natural
// value only records its collapsed length power.
inline Quantity from_natural(const Quantity& x, Dimension target, const UnitSystem& u) {
  if (u.mode == UnitSystem::Mode::Natural) return {x.value, target};
  if (x.dimension.time != 0 || x.dimension.mass != 0)
    throw dimension_error("from_natural: input is not in natural form " + x.dimension.str());
  if (target.natural_length_power() != x.dimension.length)
    throw dimension_error("from_natural: target " + target.str() +
                          " does not collapse to L^" + std::to_string(x.dimension.length));
  const double factor =
      std::pow(u.c, target.time + target.mass) * std::pow(u.hbar, -target.mass);
  return {x.value / factor, target};
}

}  // namespace vacmech

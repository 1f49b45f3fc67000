#pragma once

#include <cmath>

namespace linecong {

/// Value together with its two first partial derivatives (d/du1, d/du2).
/// Forward-mode dual number; arithmetic applies the chain rule exactly.
struct Jet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;

  static constexpr Jet constant(double v) { return {v, 0.0, 0.0}; }
  static constexpr Jet variable(int index, double v) {
    return index == 0 ? Jet{v, 1.0, 0.0} : Jet{v, 0.0, 1.0};
  }
};

constexpr Jet operator-(const Jet& a) { return {-a.value, -a.d1, -a.d2}; }

constexpr Jet operator+(const Jet& a, const Jet& b) {
  return {a.value + b.value, a.d1 + b.d1, a.d2 + b.d2};
}

constexpr Jet operator-(const Jet& a, const Jet& b) {
  return {a.value - b.value, a.d1 - b.d1, a.d2 - b.d2};
}

constexpr Jet operator*(const Jet& a, const Jet& b) {
  return {a.value * b.value, a.d1 * b.value + a.value * b.d1,
          a.d2 * b.value + a.value * b.d2};
}

constexpr Jet operator*(double s, const Jet& a) { return {s * a.value, s * a.d1, s * a.d2}; }

// Caller guarantees b.value != 0.
constexpr Jet operator/(const Jet& a, const Jet& b) {
  const double inv = 1.0 / b.value;
  const double q = a.value * inv;
  return {q, (a.d1 - q * b.d1) * inv, (a.d2 - q * b.d2) * inv};
}

// Caller guarantees a.value > 0.
inline Jet sqrt(const Jet& a) {
  const double s = std::sqrt(a.value);
  const double k = 0.5 / s;
  return {s, k * a.d1, k * a.d2};
}

inline Jet sin(const Jet& a) {
  const double c = std::cos(a.value);
  return {std::sin(a.value), c * a.d1, c * a.d2};
}

inline Jet cos(const Jet& a) {
  const double s = -std::sin(a.value);
  return {std::cos(a.value), s * a.d1, s * a.d2};
}

/// Integer power. Negative exponents require a.value != 0.
inline Jet pow(const Jet& a, int n) {
  if (n == 0) return Jet::constant(1.0);
  // repeated squaring on the value; derivative n * a^(n-1) * da
  const auto ipow = [](double x, int e) {
    bool neg = e < 0;
    unsigned m = neg ? static_cast<unsigned>(-e) : static_cast<unsigned>(e);
    double r = 1.0;
    double b = x;
    while (m) {
      if (m & 1u) r *= b;
      b *= b;
      m >>= 1u;
    }
    return neg ? 1.0 / r : r;
  };
  const double lower = ipow(a.value, n - 1);
  const double k = n * lower;
  return {lower * a.value, k * a.d1, k * a.d2};
}

}  // namespace linecong

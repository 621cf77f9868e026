#pragma once

#include <cmath>

namespace lieflag {

/// Truncated two-parameter Taylor scalar: value, the two first derivatives
/// d/ds and d/dt, and the mixed second derivative d2/dsdt of an expression
/// evaluated along (s,t) -> base + s*u + t*v at s=t=0. The arithmetic works
/// in R[s,t]/(s^2,t^2): pure s^2/t^2 terms never feed the mixed coefficient,
/// so fst is the exact mixed partial up to rounding.
struct Jet2 {
  double f = 0.0;    // value
  double fs = 0.0;   // d/ds
  double ft = 0.0;   // d/dt
  double fst = 0.0;  // d2/dsdt

  constexpr Jet2() = default;
  constexpr Jet2(double value) : f(value) {}
  constexpr Jet2(double value, double ds, double dt, double dsdt)
      : f(value), fs(ds), ft(dt), fst(dsdt) {}
};

constexpr Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.f + b.f, a.fs + b.fs, a.ft + b.ft, a.fst + b.fst};
}
constexpr Jet2 operator-(const Jet2& a, const Jet2& b) {
  return {a.f - b.f, a.fs - b.fs, a.ft - b.ft, a.fst - b.fst};
}
constexpr Jet2 operator-(const Jet2& a) { return {-a.f, -a.fs, -a.ft, -a.fst}; }

constexpr Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.f * b.f, a.f * b.fs + a.fs * b.f, a.f * b.ft + a.ft * b.f,
          a.f * b.fst + a.fs * b.ft + a.ft * b.fs + a.fst * b.f};
}
constexpr Jet2 operator*(double c, const Jet2& a) { return {c * a.f, c * a.fs, c * a.ft, c * a.fst}; }
constexpr Jet2 operator*(const Jet2& a, double c) { return c * a; }

constexpr Jet2 reciprocal(const Jet2& a) {
  const double inv = 1.0 / a.f;
  const double inv2 = inv * inv;
  return {inv, -a.fs * inv2, -a.ft * inv2, -a.fst * inv2 + 2.0 * a.fs * a.ft * inv2 * inv};
}
constexpr Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }
constexpr Jet2 operator/(const Jet2& a, double c) { return a * (1.0 / c); }

inline Jet2 sqrt(const Jet2& a) {
  const double r = std::sqrt(a.f);
  const double half = 0.5 / r;
  return {r, a.fs * half, a.ft * half, a.fst * half - a.fs * a.ft * 0.25 / (r * a.f)};
}

constexpr Jet2 square(const Jet2& a) { return a * a; }

}  // namespace lieflag

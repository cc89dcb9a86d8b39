#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace zitterlab {

/// Ordered pair of reals quantifying a measurement sequence. Pairs add
/// componentwise and multiply like complex numbers, so (a1, a2) can be read
/// as a1 + i*a2.
class Amplitude {
 public:
  Amplitude() = default;
  Amplitude(double a1, double a2) : a1_(a1), a2_(a2) {
    if (!std::isfinite(a1) || !std::isfinite(a2)) {
      throw std::invalid_argument("Amplitude components must be finite");
    }
  }

  static Amplitude from_complex(std::complex<double> z) {
    return Amplitude(z.real(), z.imag());
  }

  double a1() const { return a1_; }
  double a2() const { return a2_; }
  std::complex<double> to_complex() const { return {a1_, a2_}; }

  friend bool operator==(const Amplitude&, const Amplitude&) = default;

 private:
  double a1_ = 0.0;
  double a2_ = 0.0;
};

// Sum rule: parallel alternatives add componentwise.
inline Amplitude amp_add(const Amplitude& u, const Amplitude& v) {
  return Amplitude(u.a1() + v.a1(), u.a2() + v.a2());
}

// Product rule: series composition multiplies as complex numbers.
inline Amplitude amp_mul(const Amplitude& u, const Amplitude& v) {
  return Amplitude(u.a1() * v.a1() - u.a2() * v.a2(),
                   u.a1() * v.a2() + u.a2() * v.a1());
}

// Born rule: modulus squared of the pair.
inline double born(const Amplitude& u) {
  return u.a1() * u.a1() + u.a2() * u.a2();
}

inline Amplitude operator+(const Amplitude& u, const Amplitude& v) {
  return amp_add(u, v);
}

inline Amplitude operator*(const Amplitude& u, const Amplitude& v) {
  return amp_mul(u, v);
}

}  // namespace zitterlab

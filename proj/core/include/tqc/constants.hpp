#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace tqc {

using Complex = std::complex<double>;

// Loop value of the Temperley-Lieb algebra used throughout:
// delta = 2*cos(pi/5) = (1+sqrt(5))/2, the golden ratio.
inline const double kGoldenRatio = (1.0 + std::sqrt(5.0)) / 2.0;
inline const double kLoopValue = kGoldenRatio;

// Kauffman variable. Fixed once for the whole repo by three conditions:
//   delta = -A^2 - A^-2  with delta = 2*cos(pi/5),
//   rho(sigma_i) = A*I + A^-1*e_i is unitary,
//   the identity braid measures fusion channel 0 with probability 1.
// A = exp(3*pi*i/5) satisfies all three.  The remaining sign/conjugation
// freedom (A -> conj(A), A -> -1/A) changes nothing observable; it is
// resolved by the conventions below and never revisited.
inline const double kBraidAAngle = 3.0 * std::numbers::pi / 5.0;
inline const Complex kBraidA = std::polar(1.0, kBraidAAngle);

// Jones evaluation point t = A^-4 = exp(-2*pi*i/5).  jones_at() evaluates
// the Jones polynomial at this t with the principal branch
// t^{1/2} = exp(-pi*i/5).
inline const double kJonesTAngle = -2.0 * std::numbers::pi / 5.0;
inline const Complex kJonesT = std::polar(1.0, kJonesTAngle);

// Phase base a = exp(pi*i/10) appearing as (-a)^{3w} in the closed-form
// measurement probability (see anyon_register.hpp).
inline const double kMeasurePhaseAngle = std::numbers::pi / 10.0;
inline const Complex kMeasurePhaseA = std::polar(1.0, kMeasurePhaseAngle);

// exp(i * angle * k) without accumulating products.
inline Complex unit_phase_pow(double angle, long k) {
  return std::polar(1.0, angle * static_cast<double>(k));
}

}  // namespace tqc

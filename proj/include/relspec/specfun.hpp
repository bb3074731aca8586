#pragma once

#include <array>
#include <stdexcept>

// Special functions and free-space Green's function kernels on the positive
// imaginary spectral axis (lambda = i*kappa, kappa > 0), where all kernels
// are real, positive and exponentially decaying.

namespace relspec {

/// Spectral parameter on the positive imaginary axis: lambda = i*kappa.
struct Kappa {
    double value;

    explicit Kappa(double k) : value(k) {
        if (!(k > 0.0))
            throw std::domain_error("Kappa: kappa must be positive");
    }
};

inline constexpr double kKappaMinDefault = 1e-6;

namespace specfun {

// Modified Bessel functions, accurate to ~1e-14 relative for
// x in [1e-8, 700]; exponential underflow returns 0.
double bessel_i0(double x);
double bessel_i1(double x);
double bessel_k0(double x);
double bessel_k1(double x);

// Exponentially scaled variants: e^{+x} K_nu(x), e^{-x} I_nu(x).
double bessel_k0e(double x);
double bessel_k1e(double x);
double bessel_i0e(double x);
double bessel_i1e(double x);

// Analytic regular parts of the small-argument log splits:
//   K0(x) = -log(x/2) I0(x) + k0_reg(x)
//   K1(x) = 1/x + log(x/2) I1(x) + x * k1_reg(x)
// Both are entire functions of x^2; valid for x in [0, 2].
double bessel_k0_reg(double x);
double bessel_k1_reg(double x);

/// K_nu for integer order 0..2.
double bessel_k(int nu, double x);

} // namespace specfun

struct Point2 {
    double x = 0.0, y = 0.0;
};

inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }

/// Green's function value plus first/second spatial derivatives in x (and
/// the mixed x-y Hessian for d = 2).  For d = 1 only value/grad_x[0]/
/// hess_xy(0,0) are populated.
struct GreenEval {
    double value = 0.0;
    std::array<double, 2> grad_x{0.0, 0.0};
    std::array<std::array<double, 2>, 2> hess_xy{{{0.0, 0.0}, {0.0, 0.0}}};
};

// Free Green's function of (-Delta + kappa^2) evaluated at lambda = i*kappa:
//   d=1: e^{-kappa|x-y|}/(2 kappa)
//   d=2: (1/2pi) K0(kappa |x-y|)
//   d=3: e^{-kappa|x-y|}/(4 pi |x-y|)
GreenEval green(int d, Kappa kappa, Point2 x, Point2 y);

/// Normal derivative in y: d/d nu_y G(x, y).  normal_y must be a unit vector.
double green_dn(int d, Kappa kappa, Point2 x, Point2 y, Point2 normal_y);

} // namespace relspec

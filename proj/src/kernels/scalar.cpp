#include <cmath>
#include <complex>
#include <cstddef>

#include "faiscc/kernels.hpp"

// Reference kernels. Plain loops over libm; the SIMD variants are tested
// against these.

namespace faiscc::kernels {
namespace {

void mixed_axpy_scalar(const double* x, const double* y, std::size_t n,
                       double ax, double ay, double c, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = x[i] * ax + y[i] * ay + c;
  }
}

void sincos_scalar(const double* phi, std::size_t n, double* s, double* c) {
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = std::sin(phi[i]);
    c[i] = std::cos(phi[i]);
  }
}

void phasor_accum_scalar(const double* s, const double* c, std::size_t n,
                         double gr, double gi, double* re, double* im) {
  for (std::size_t i = 0; i < n; ++i) {
    re[i] += gr * c[i] + gi * s[i];
    im[i] += gi * c[i] - gr * s[i];
  }
}

std::complex<double> cdot_scalar(const std::complex<double>* a,
                                 const std::complex<double>* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {re, im};
}

double sq_norm_scalar(const std::complex<double>* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  }
  return acc;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops table{mixed_axpy_scalar, sincos_scalar, phasor_accum_scalar,
                         cdot_scalar, sq_norm_scalar};
  return table;
}

}  // namespace faiscc::kernels

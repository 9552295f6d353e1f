#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace faiscc::kernels {

// Inner-loop primitives behind the channel/SINR math. Each has a scalar
// reference implementation and (on x86-64 with AVX2+FMA) a vectorized
// variant; the active table is picked at runtime and can be pinned via
// set_backend() or the FAISCC_KERNEL environment variable. The two
// backends are equivalence-tested against each other in the test suite.
struct Ops {
  // out[i] = x[i]*ax + y[i]*ay + c
  void (*mixed_axpy)(const double* x, const double* y, std::size_t n, double ax,
                     double ay, double c, double* out);

  // s[i] = sin(phi[i]), c[i] = cos(phi[i])
  void (*sincos)(const double* phi, std::size_t n, double* s, double* c);

  // Accumulate g * e^{-j phi} given s=sin(phi), c=cos(phi):
  //   re[i] += gr*c[i] + gi*s[i];  im[i] += gi*c[i] - gr*s[i]
  void (*phasor_accum)(const double* s, const double* c, std::size_t n,
                       double gr, double gi, double* re, double* im);

  // sum_i conj(a[i]) * b[i]
  std::complex<double> (*cdot)(const std::complex<double>* a,
                               const std::complex<double>* b, std::size_t n);

  // sum_i |a[i]|^2
  double (*sq_norm)(const std::complex<double>* a, std::size_t n);
};

enum class Backend { Scalar, Avx2 };

const char* backend_name(Backend b);
bool backend_supported(Backend b);

/// Pins the kernel table; throws DomainError if the CPU lacks the backend.
void set_backend(Backend b);

/// Parses "scalar" / "avx2" / "auto"; "auto" re-enables CPU detection.
void set_backend(const std::string& name);

Backend active_backend();

/// The dispatched kernel table. First call honors FAISCC_KERNEL if set.
const Ops& ops();

/// Reference table, always available (used directly by equivalence tests).
const Ops& scalar_ops();

/// AVX2 table or nullptr when not compiled in / not supported.
const Ops* avx2_ops();

}  // namespace faiscc::kernels

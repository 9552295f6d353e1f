// AVX2+FMA kernel variants. Compiled with -mavx2 -mfma on x86-64 only;
// callers must check backend_supported(Backend::Avx2) before use.

#include <immintrin.h>

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>

#include "faiscc/kernels.hpp"

namespace faiscc::kernels {
namespace {

// pi/2 split into three 33-bit chunks (fdlibm); n * chunk stays exact for the
// |phi| <= 2^30 range the channel math produces.
constexpr double kPio2a = 1.57079632673412561417e+00;
constexpr double kPio2b = 6.07710050630396597660e-11;
constexpr double kPio2c = 2.02226624871116645580e-21;
constexpr double kTwoOverPi = 6.36619772367581382433e-01;

// Minimax coefficients on [-pi/4, pi/4] (cephes).
constexpr double kSinC0 = -1.66666666666666307295e-1;
constexpr double kSinC1 = 8.33333333332211858878e-3;
constexpr double kSinC2 = -1.98412698295895385996e-4;
constexpr double kSinC3 = 2.75573136213857245213e-6;
constexpr double kSinC4 = -2.50507477628578072866e-8;
constexpr double kSinC5 = 1.58962301576546568060e-10;

constexpr double kCosC0 = 4.16666666666665929218e-2;
constexpr double kCosC1 = -1.38888888888730564116e-3;
constexpr double kCosC2 = 2.48015872888517179954e-5;
constexpr double kCosC3 = -2.75573141792967388112e-7;
constexpr double kCosC4 = 2.08757008419747316778e-9;
constexpr double kCosC5 = -1.13585365213876817300e-11;

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// sin/cos of 4 packed doubles. Quadrant decomposition: phi = n*pi/2 + r,
// |r| <= pi/4, then polynomials plus a swap/sign fixup per (n mod 4).
inline void sincos4(__m256d phi, __m256d* out_sin, __m256d* out_cos) {
  const __m256d n = _mm256_round_pd(_mm256_mul_pd(phi, _mm256_set1_pd(kTwoOverPi)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kPio2a), phi);
  r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kPio2b), r);
  r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kPio2c), r);

  const __m256d z = _mm256_mul_pd(r, r);

  __m256d ps = _mm256_set1_pd(kSinC5);
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(kSinC4));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(kSinC3));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(kSinC2));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(kSinC1));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(kSinC0));
  const __m256d sr = _mm256_fmadd_pd(_mm256_mul_pd(r, z), ps, r);

  __m256d pc = _mm256_set1_pd(kCosC5);
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(kCosC4));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(kCosC3));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(kCosC2));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(kCosC1));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(kCosC0));
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d cr =
      _mm256_fmadd_pd(_mm256_mul_pd(z, z), pc, _mm256_fnmadd_pd(z, half, one));

  const __m256i q = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(n));
  const __m256i one_i = _mm256_set1_epi64x(1);
  const __m256i two_i = _mm256_set1_epi64x(2);
  const __m256d swap_mask = _mm256_castsi256_pd(
      _mm256_cmpeq_epi64(_mm256_and_si256(q, one_i), one_i));
  const __m256d sin_neg = _mm256_castsi256_pd(
      _mm256_cmpeq_epi64(_mm256_and_si256(q, two_i), two_i));
  const __m256d cos_neg = _mm256_castsi256_pd(_mm256_cmpeq_epi64(
      _mm256_and_si256(_mm256_add_epi64(q, one_i), two_i), two_i));

  const __m256d signbit = _mm256_set1_pd(-0.0);
  __m256d s = _mm256_blendv_pd(sr, cr, swap_mask);
  __m256d c = _mm256_blendv_pd(cr, sr, swap_mask);
  s = _mm256_xor_pd(s, _mm256_and_pd(sin_neg, signbit));
  c = _mm256_xor_pd(c, _mm256_and_pd(cos_neg, signbit));
  *out_sin = s;
  *out_cos = c;
}

void mixed_axpy_avx2(const double* x, const double* y, std::size_t n, double ax,
                     double ay, double c, double* out) {
  const __m256d vax = _mm256_set1_pd(ax);
  const __m256d vay = _mm256_set1_pd(ay);
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), vax, vc);
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(y + i), vay, acc);
    _mm256_storeu_pd(out + i, acc);
  }
  for (; i < n; ++i) {
    out[i] = std::fma(x[i], ax, std::fma(y[i], ay, c));
  }
}

void sincos_avx2(const double* phi, std::size_t n, double* s, double* c) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vs, vc;
    sincos4(_mm256_loadu_pd(phi + i), &vs, &vc);
    _mm256_storeu_pd(s + i, vs);
    _mm256_storeu_pd(c + i, vc);
  }
  if (i < n) {
    alignas(32) double buf[4] = {0, 0, 0, 0};
    alignas(32) double bs[4], bc[4];
    for (std::size_t k = i; k < n; ++k) buf[k - i] = phi[k];
    __m256d vs, vc;
    sincos4(_mm256_load_pd(buf), &vs, &vc);
    _mm256_store_pd(bs, vs);
    _mm256_store_pd(bc, vc);
    for (std::size_t k = i; k < n; ++k) {
      s[k] = bs[k - i];
      c[k] = bc[k - i];
    }
  }
}

void phasor_accum_avx2(const double* s, const double* c, std::size_t n,
                       double gr, double gi, double* re, double* im) {
  const __m256d vgr = _mm256_set1_pd(gr);
  const __m256d vgi = _mm256_set1_pd(gi);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vs = _mm256_loadu_pd(s + i);
    const __m256d vc = _mm256_loadu_pd(c + i);
    __m256d vre = _mm256_loadu_pd(re + i);
    __m256d vim = _mm256_loadu_pd(im + i);
    vre = _mm256_fmadd_pd(vgr, vc, vre);
    vre = _mm256_fmadd_pd(vgi, vs, vre);
    vim = _mm256_fmadd_pd(vgi, vc, vim);
    vim = _mm256_fnmadd_pd(vgr, vs, vim);
    _mm256_storeu_pd(re + i, vre);
    _mm256_storeu_pd(im + i, vim);
  }
  for (; i < n; ++i) {
    re[i] += gr * c[i] + gi * s[i];
    im[i] += gi * c[i] - gr * s[i];
  }
}

std::complex<double> cdot_avx2(const std::complex<double>* a,
                               const std::complex<double>* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  const __m256d alt_sign = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    // re lanes: ar*br, ai*bi ; im lanes: ar*bi, -ai*br
    acc_re = _mm256_fmadd_pd(va, vb, acc_re);
    const __m256d vb_swap =
        _mm256_xor_pd(_mm256_permute_pd(vb, 0x5), alt_sign);
    acc_im = _mm256_fmadd_pd(va, vb_swap, acc_im);
  }
  double re = hsum(acc_re);
  double im = hsum(acc_im);
  for (; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {re, im};
}

double sq_norm_avx2(const std::complex<double>* a, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(pa + 2 * i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double out = hsum(acc);
  for (; i < n; ++i) {
    out += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  }
  return out;
}

}  // namespace

const Ops* avx2_ops_impl() {
  static const Ops table{mixed_axpy_avx2, sincos_avx2, phasor_accum_avx2,
                         cdot_avx2, sq_norm_avx2};
  return &table;
}

}  // namespace faiscc::kernels

#include "exlab/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace exlab::kernels {
namespace {

// Lanes hold two interleaved complex doubles: [re0, im0, re1, im1].

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

cplx cdotc_avx2(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    acc_re = _mm256_fmadd_pd(va, vb, acc_re);
    acc_im = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), acc_im);
  }
  const __m256d sign = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
  double re = hsum(acc_re);
  double im = hsum(_mm256_xor_pd(acc_im, sign));
  for (; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

double norm_sq_avx2(const cplx* v, std::size_t n) {
  const double* pv = reinterpret_cast<const double*>(v);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d x = _mm256_loadu_pd(pv + 2 * i);
    acc = _mm256_fmadd_pd(x, x, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i)
    s += v[i].real() * v[i].real() + v[i].imag() * v[i].imag();
  return s;
}

void cscale_avx2(cplx* dst, const cplx* src, cplx s, std::size_t n) {
  double* pd = reinterpret_cast<double*>(dst);
  const double* ps = reinterpret_cast<const double*>(src);
  const __m256d sr = _mm256_set1_pd(s.real());
  const __m256d si = _mm256_set1_pd(s.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(ps + 2 * i);
    const __m256d vs = _mm256_permute_pd(v, 0b0101);
    _mm256_storeu_pd(pd + 2 * i,
                     _mm256_fmaddsub_pd(sr, v, _mm256_mul_pd(si, vs)));
  }
  const double re = s.real(), im = s.imag();
  for (; i < n; ++i) {
    const double vr = src[i].real(), vi = src[i].imag();
    dst[i] = {re * vr - im * vi, re * vi + im * vr};
  }
}

void wht_avx2(cplx* v, int t) {
  const std::size_t n = std::size_t{1} << t;
  double* pv = reinterpret_cast<double*>(v);
  if (n >= 2) {
    // h == 1: butterfly within one 256-bit vector.
    for (std::size_t base = 0; base < n; base += 2) {
      const __m256d x = _mm256_loadu_pd(pv + 2 * base);
      const __m256d sw = _mm256_permute2f128_pd(x, x, 0x01);
      const __m256d sum = _mm256_add_pd(x, sw);
      const __m256d diff = _mm256_sub_pd(x, sw);
      _mm256_storeu_pd(pv + 2 * base, _mm256_blend_pd(sum, diff, 0b1100));
    }
  }
  for (std::size_t h = 2; h < n; h <<= 1) {
    for (std::size_t base = 0; base < n; base += 2 * h) {
      for (std::size_t j = base; j < base + h; j += 2) {
        const __m256d u = _mm256_loadu_pd(pv + 2 * j);
        const __m256d w = _mm256_loadu_pd(pv + 2 * (j + h));
        _mm256_storeu_pd(pv + 2 * j, _mm256_add_pd(u, w));
        _mm256_storeu_pd(pv + 2 * (j + h), _mm256_sub_pd(u, w));
      }
    }
  }
}

void excl_accum_avx2(double* p, const cplx* w, cplx c, double scale,
                     std::size_t n) {
  const double* pw = reinterpret_cast<const double*>(w);
  const __m256d cc = _mm256_set_pd(c.imag(), c.real(), c.imag(), c.real());
  const __m128d sc = _mm_set1_pd(scale);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d d = _mm256_sub_pd(cc, _mm256_loadu_pd(pw + 2 * i));
    const __m256d sq = _mm256_mul_pd(d, d);
    const __m128d lo = _mm256_castpd256_pd128(sq);
    const __m128d hi = _mm256_extractf128_pd(sq, 1);
    const __m128d mags = _mm_hadd_pd(lo, hi);  // [ |d0|^2, |d1|^2 ]
    const __m128d acc = _mm_loadu_pd(p + i);
    _mm_storeu_pd(p + i, _mm_add_pd(acc, _mm_mul_pd(sc, mags)));
  }
  for (; i < n; ++i) {
    const double dr = c.real() - w[i].real();
    const double di = c.imag() - w[i].imag();
    p[i] += scale * (dr * dr + di * di);
  }
}

}  // namespace

const Table* avx2_table() {
  static const Table t{"avx2", cdotc_avx2, norm_sq_avx2, cscale_avx2,
                       wht_avx2, excl_accum_avx2};
  static const bool ok =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok ? &t : nullptr;
}

}  // namespace exlab::kernels

#else

namespace exlab::kernels {
const Table* avx2_table() { return nullptr; }
}  // namespace exlab::kernels

#endif

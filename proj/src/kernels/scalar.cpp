#include "exlab/kernels.hpp"

namespace exlab::kernels {
namespace {

cplx cdotc_scalar(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

double norm_sq_scalar(const cplx* v, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    s += v[i].real() * v[i].real() + v[i].imag() * v[i].imag();
  return s;
}

void cscale_scalar(cplx* dst, const cplx* src, cplx s, std::size_t n) {
  const double sr = s.real(), si = s.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double vr = src[i].real(), vi = src[i].imag();
    dst[i] = {sr * vr - si * vi, sr * vi + si * vr};
  }
}

void wht_scalar(cplx* v, int t) {
  const std::size_t n = std::size_t{1} << t;
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t base = 0; base < n; base += 2 * h) {
      for (std::size_t j = base; j < base + h; ++j) {
        const cplx u = v[j], w = v[j + h];
        v[j] = u + w;
        v[j + h] = u - w;
      }
    }
  }
}

void excl_accum_scalar(double* p, const cplx* w, cplx c, double scale,
                       std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double dr = c.real() - w[i].real();
    const double di = c.imag() - w[i].imag();
    p[i] += scale * (dr * dr + di * di);
  }
}

}  // namespace

const Table& scalar_table() {
  static const Table t{"scalar", cdotc_scalar, norm_sq_scalar, cscale_scalar,
                       wht_scalar, excl_accum_scalar};
  return t;
}

}  // namespace exlab::kernels

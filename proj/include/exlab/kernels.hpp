#pragma once

#include <complex>
#include <cstddef>

// Data-parallel inner loops over interleaved complex<double> arrays.
// Every kernel has a scalar reference implementation; SIMD variants are
// selected at runtime and must agree with the reference within round-off
// (reductions may reassociate, so agreement is tolerance-based).

namespace exlab::kernels {

using cplx = std::complex<double>;

struct Table {
  const char* name;

  // sum_i conj(a[i]) * b[i]
  cplx (*cdotc)(const cplx* a, const cplx* b, std::size_t n);

  // sum_i |v[i]|^2
  double (*norm_sq)(const cplx* v, std::size_t n);

  // dst[i] = s * src[i]
  void (*cscale)(cplx* dst, const cplx* src, cplx s, std::size_t n);

  // In-place unnormalized Walsh-Hadamard transform on 2^t entries:
  // out[z] = sum_u (-1)^{popcount(z & u)} in[u].
  void (*wht)(cplx* v, int t);

  // p[i] += scale * |c - w[i]|^2
  void (*excl_accum)(double* p, const cplx* w, cplx c, double scale,
                     std::size_t n);
};

const Table& scalar_table();

// nullptr when the CPU (or build) lacks AVX2+FMA.
const Table* avx2_table();

// Runtime-selected table. Set EXLAB_KERNELS=scalar to force the reference.
const Table& active();

}  // namespace exlab::kernels

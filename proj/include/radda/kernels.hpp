#pragma once

// Runtime-dispatched double-precision kernels for the O(n) inner loops of the
// low-rank solver: banded products, banded triangular sweeps, and thin Gram
// blocks. Every variant computes the same quantity; only the summation order
// (and therefore the last few bits) may differ between variants.

#include <cstddef>
#include <string_view>
#include <vector>

namespace radda::kernels {

struct KernelTable {
  const char* name;

  /// sum_i x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);

  /// y += a * x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);

  /// x *= a
  void (*scal)(double a, double* x, std::size_t n);

  /// y[i] += a[i] * x[i]
  void (*vmuladd)(const double* a, const double* x, double* y, std::size_t n);

  /// out(i, j) = <x(:, i), y(:, j)> for column-major tall blocks of height n.
  /// out is column-major with leading dimension ldo.
  void (*gram)(const double* x, std::size_t ldx, std::size_t x_cols, const double* y,
               std::size_t ldy, std::size_t y_cols, std::size_t n, double* out,
               std::size_t ldo);
};

const KernelTable& scalar_kernels() noexcept;

/// Variants compiled into this build and supported by the running CPU,
/// scalar first.
std::vector<const KernelTable*> available_kernels();

/// Looks up a variant by name among available_kernels(); nullptr if absent.
const KernelTable* find_kernels(std::string_view name);

/// The table used by the library. Defaults to the widest supported variant;
/// the RADDA_KERNELS environment variable ("scalar", "avx2") overrides it.
const KernelTable& active() noexcept;

/// Switches the library-wide table. Returns false (and changes nothing) when
/// the name is not available.
bool select(std::string_view name);

namespace detail {
#if defined(RADDA_HAVE_AVX2)
const KernelTable& avx2_kernels() noexcept;
#endif
}  // namespace detail

}  // namespace radda::kernels

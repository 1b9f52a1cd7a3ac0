#include "radda/kernels.hpp"

namespace radda::kernels {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scal_scalar(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void vmuladd_scalar(const double* a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a[i] * x[i];
}

void gram_scalar(const double* x, std::size_t ldx, std::size_t x_cols, const double* y,
                 std::size_t ldy, std::size_t y_cols, std::size_t n, double* out,
                 std::size_t ldo) {
  for (std::size_t j = 0; j < y_cols; ++j)
    for (std::size_t i = 0; i < x_cols; ++i)
      out[i + j * ldo] = dot_scalar(x + i * ldx, y + j * ldy, n);
}

constexpr KernelTable kScalar{"scalar", dot_scalar, axpy_scalar, scal_scalar, vmuladd_scalar,
                              gram_scalar};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

}  // namespace radda::kernels

#include "fanning/kernels.hpp"

#include <omp.h>

namespace fanning::kernels {

namespace {

Matrix cauchy_term(std::span<const Matrix> a, std::span<const Matrix> b, int m) {
  Matrix acc = Matrix::Zero(a[0].rows(), b[0].cols());
  for (int i = 0; i <= m; ++i) {
    acc.noalias() += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(m - i)];
  }
  return acc;
}

}  // namespace

namespace serial {

std::vector<Matrix> cauchy_product(std::span<const Matrix> a, std::span<const Matrix> b, int order) {
  std::vector<Matrix> out(static_cast<std::size_t>(order + 1));
  for (int m = 0; m <= order; ++m) out[static_cast<std::size_t>(m)] = cauchy_term(a, b, m);
  return out;
}

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body) {
  for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace serial

namespace omp {

std::vector<Matrix> cauchy_product(std::span<const Matrix> a, std::span<const Matrix> b, int order) {
  std::vector<Matrix> out(static_cast<std::size_t>(order + 1));
  // Late coefficients carry more terms; dynamic scheduling balances the triangle.
#pragma omp parallel for schedule(dynamic, 1)
  for (int m = 0; m <= order; ++m) out[static_cast<std::size_t>(m)] = cauchy_term(a, b, m);
  return out;
}

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body) {
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace omp

std::vector<Matrix> cauchy_product(std::span<const Matrix> a, std::span<const Matrix> b, int order) {
  const double rows = static_cast<double>(a[0].rows());
  const double inner = static_cast<double>(a[0].cols());
  const double cols = static_cast<double>(b[0].cols());
  const double terms = 0.5 * (order + 1.0) * (order + 2.0);
  if (omp_get_max_threads() > 1 && 2.0 * rows * inner * cols * terms > kParallelCauchyFlops &&
      !omp_in_parallel()) {
    return omp::cauchy_product(a, b, order);
  }
  return serial::cauchy_product(a, b, order);
}

void for_each_index(Execution exec, std::size_t count,
                    const std::function<void(std::size_t)>& body) {
  if (exec == Execution::parallel && count > 1) {
    omp::for_each_index(count, body);
  } else {
    serial::for_each_index(count, body);
  }
}

}  // namespace fanning::kernels

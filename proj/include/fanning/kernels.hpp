#pragma once

// Data-parallel inner loops. Every kernel has a serial reference in
// `kernels::serial` and an OpenMP version in `kernels::omp` that must produce
// bitwise identical results (each output slot is computed by exactly one
// thread with the same summation order).

#include <cstddef>
#include <exception>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace fanning {

using Matrix = Eigen::MatrixXd;

enum class Execution { serial, parallel };

namespace kernels {

namespace serial {

/// Truncated Cauchy product c_m = sum_{i=0..m} a_i b_{m-i}, m = 0..order.
std::vector<Matrix> cauchy_product(std::span<const Matrix> a, std::span<const Matrix> b, int order);

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace serial

namespace omp {

std::vector<Matrix> cauchy_product(std::span<const Matrix> a, std::span<const Matrix> b, int order);

/// Runs body(i) for i in [0, count) across OpenMP threads. The first
/// exception thrown (lowest index) is rethrown after the loop completes.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace omp

/// Work estimate (flops) above which MatrixJet multiplication uses the OpenMP kernel.
inline constexpr double kParallelCauchyFlops = 2.0e5;

std::vector<Matrix> cauchy_product(std::span<const Matrix> a, std::span<const Matrix> b, int order);

void for_each_index(Execution exec, std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace kernels
}  // namespace fanning

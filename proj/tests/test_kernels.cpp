#include <gtest/gtest.h>

#include <atomic>
#include <cstring>
#include <stdexcept>

#include "fanning/kernels.hpp"
#include "support/generators.hpp"

using namespace fanning;
using namespace fanning::testing;

namespace {

bool bitwise_equal(const Matrix& a, const Matrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::memcmp(a.data(), b.data(), sizeof(double) * static_cast<std::size_t>(a.size())) == 0;
}

std::vector<Matrix> random_series(Index r, Index c, int order, Rng& rng) {
  std::vector<Matrix> out;
  for (int i = 0; i <= order; ++i) out.push_back(random_matrix(r, c, rng));
  return out;
}

}  // namespace

TEST(Kernels, OmpCauchyProductIsBitwiseSerial) {
  Rng rng(11);
  for (int order : {0, 1, 5, 12}) {
    const auto a = random_series(9, 7, order, rng);
    const auto b = random_series(7, 5, order + 2, rng);
    const auto s = kernels::serial::cauchy_product(a, b, order);
    const auto p = kernels::omp::cauchy_product(a, b, order);
    const auto d = kernels::cauchy_product(a, b, order);
    ASSERT_EQ(s.size(), p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      EXPECT_TRUE(bitwise_equal(s[i], p[i])) << "order " << order << " coefficient " << i;
      EXPECT_TRUE(bitwise_equal(s[i], d[i]));
    }
  }
}

TEST(Kernels, ForEachIndexVisitsEveryIndexOnce) {
  for (auto exec : {Execution::serial, Execution::parallel}) {
    std::vector<int> hits(257, 0);
    kernels::for_each_index(exec, hits.size(), [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) EXPECT_EQ(h, 1);
  }
}

TEST(Kernels, ForEachIndexRethrowsLowestIndex) {
  for (auto exec : {Execution::serial, Execution::parallel}) {
    try {
      kernels::for_each_index(exec, 50, [](std::size_t i) {
        if (i == 17 || i == 31) throw std::runtime_error("index " + std::to_string(i));
      });
      FAIL() << "expected an exception";
    } catch (const std::runtime_error& e) {
      EXPECT_STREQ(e.what(), "index 17");
    }
  }
}

TEST(Kernels, EmptyLoopIsNoOp) {
  std::atomic<int> calls{0};
  kernels::omp::for_each_index(0, [&](std::size_t) { ++calls; });
  EXPECT_EQ(calls.load(), 0);
}

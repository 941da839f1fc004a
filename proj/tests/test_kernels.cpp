#include <random>

#include <gtest/gtest.h>

#include "hallq/kernels.hpp"

using namespace hallq::kernels;

namespace {

// Union-find oracle for the orbits of x -> x + step and x -> mult * x mod n.
std::vector<std::uint32_t> oracle_labels(std::uint64_t n, std::uint64_t step, std::uint64_t mult) {
  std::vector<std::uint64_t> parent(n);
  for (std::uint64_t i = 0; i < n; ++i) parent[i] = i;
  std::function<std::uint64_t(std::uint64_t)> find = [&](std::uint64_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto unite = [&](std::uint64_t a, std::uint64_t b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (std::uint64_t x = 0; x < n; ++x) {
    unite(x, (x + step) % n);
    unite(x, (x * mult) % n);
  }
  std::vector<std::uint32_t> label(n);
  std::vector<std::int64_t> id(n, -1);
  std::uint32_t next = 0;
  for (std::uint64_t x = 0; x < n; ++x) {
    const auto r = find(x);
    if (id[r] < 0) id[r] = next++;
    label[x] = static_cast<std::uint32_t>(id[r]);
  }
  return label;
}

}  // namespace

TEST(Kernels, OrbitLabelsMatchOracle) {
  for (auto [n, step, mult] : {std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>{60, 12, 7}, {97, 0, 5},
                               {1000, 10, 3}, {1, 0, 1}, {4096, 64, 5}}) {
    ImageFn image = [=](std::uint64_t x, std::size_t g) { return g == 0 ? (x + step) % n : (x * mult) % n; };
    const auto expected = oracle_labels(n, step, mult);
    EXPECT_EQ(orbit_labels_serial(n, 2, image), expected);
    EXPECT_EQ(orbit_labels_parallel(n, 2, image), expected);
  }
}

TEST(Kernels, FiberHistogramMatchesLoop) {
  std::mt19937_64 rng(5);
  std::vector<std::uint32_t> label(5000);
  for (auto& l : label) l = static_cast<std::uint32_t>(rng() % 7);
  Fiber f{13, {1, 10, 200}, {5, 4, 3}};
  EXPECT_EQ(f.size(), 60u);
  std::vector<std::uint64_t> expected(7, 0);
  for (std::uint64_t i = 0; i < 5; ++i)
    for (std::uint64_t j = 0; j < 4; ++j)
      for (std::uint64_t k = 0; k < 3; ++k) ++expected[label[13 + i + 10 * j + 200 * k]];
  EXPECT_EQ(fiber_histogram_serial(f, label, 7), expected);
  EXPECT_EQ(fiber_histogram_parallel(f, label, 7), expected);
}

TEST(Kernels, ClassifyHistogram) {
  ClassifyFn cls = [](std::uint64_t i) -> std::optional<std::pair<std::uint32_t, std::uint32_t>> {
    if (i % 5 == 0) return std::nullopt;
    return std::pair{static_cast<std::uint32_t>(i % 3), static_cast<std::uint32_t>(i % 4)};
  };
  std::vector<std::uint64_t> expected(12, 0);
  for (std::uint64_t i = 0; i < 10000; ++i)
    if (auto c = cls(i)) ++expected[c->first * 4 + c->second];
  EXPECT_EQ(classify_histogram_serial(10000, 3, 4, cls), expected);
  EXPECT_EQ(classify_histogram_parallel(10000, 3, 4, cls), expected);
}

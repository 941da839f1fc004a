#pragma once

// The three enumeration loops that dominate run time, each in a serial
// reference form and an OpenMP form. Both forms return identical results.

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace hallq::kernels {

// image(code, generator) -> code of the generator applied to the point.
using ImageFn = std::function<std::uint64_t(std::uint64_t, std::size_t)>;

// Orbit labels of a group acting on {0, ..., n-1}, generated by num_gens
// permutations. Orbits are numbered by their least element.
std::vector<std::uint32_t> orbit_labels_serial(std::uint64_t n, std::size_t num_gens, const ImageFn& image);
std::vector<std::uint32_t> orbit_labels_parallel(std::uint64_t n, std::size_t num_gens, const ImageFn& image);

// A mixed-radix digit set added onto a base code: the point
// base + sum_j digit_j * stride_j for digit_j in [0, radix_j).
struct Fiber {
  std::uint64_t base = 0;
  std::vector<std::uint64_t> stride;
  std::vector<std::uint64_t> radix;
  std::uint64_t size() const;
};

// Histogram of label[code] over the fiber.
std::vector<std::uint64_t> fiber_histogram_serial(const Fiber& fiber, const std::vector<std::uint32_t>& label,
                                                  std::size_t num_labels);
std::vector<std::uint64_t> fiber_histogram_parallel(const Fiber& fiber, const std::vector<std::uint32_t>& label,
                                                    std::size_t num_labels);

// classify(index) -> (row, col) or nothing; returns a rows x cols histogram.
using ClassifyFn = std::function<std::optional<std::pair<std::uint32_t, std::uint32_t>>(std::uint64_t)>;
std::vector<std::uint64_t> classify_histogram_serial(std::uint64_t n, std::size_t rows, std::size_t cols,
                                                     const ClassifyFn& classify);
std::vector<std::uint64_t> classify_histogram_parallel(std::uint64_t n, std::size_t rows, std::size_t cols,
                                                       const ClassifyFn& classify);

}  // namespace hallq::kernels

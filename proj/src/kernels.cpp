#include "hallq/kernels.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace hallq::kernels {

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;
constexpr std::uint64_t kChunk = std::uint64_t{1} << 15;

std::uint64_t find_root(std::vector<std::uint64_t>& parent, std::uint64_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

std::uint64_t fiber_point(const Fiber& f, std::uint64_t index) {
  std::uint64_t code = f.base;
  for (std::size_t j = f.radix.size(); j-- > 0;) {
    code += (index % f.radix[j]) * f.stride[j];
    index /= f.radix[j];
  }
  return code;
}

}  // namespace

std::vector<std::uint32_t> orbit_labels_serial(std::uint64_t n, std::size_t num_gens, const ImageFn& image) {
  std::vector<std::uint32_t> label(n, kUnset);
  std::uint32_t next = 0;
  std::deque<std::uint64_t> queue;
  for (std::uint64_t start = 0; start < n; ++start) {
    if (label[start] != kUnset) continue;
    label[start] = next;
    queue.push_back(start);
    while (!queue.empty()) {
      const std::uint64_t x = queue.front();
      queue.pop_front();
      for (std::size_t g = 0; g < num_gens; ++g) {
        const std::uint64_t y = image(x, g);
        if (label[y] == kUnset) {
          label[y] = next;
          queue.push_back(y);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::uint32_t> orbit_labels_parallel(std::uint64_t n, std::size_t num_gens, const ImageFn& image) {
  std::vector<std::uint64_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::uint64_t{0});
  std::vector<std::uint64_t> img;
  for (std::uint64_t lo = 0; lo < n; lo += kChunk) {
    const std::uint64_t hi = std::min(n, lo + kChunk);
    const auto span = static_cast<std::int64_t>((hi - lo) * num_gens);
    img.assign(static_cast<std::size_t>(span), 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < span; ++k) {
      const auto uk = static_cast<std::uint64_t>(k);
      img[static_cast<std::size_t>(k)] = image(lo + uk / num_gens, static_cast<std::size_t>(uk % num_gens));
    }
    for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(span); ++k) {
      std::uint64_t a = find_root(parent, lo + k / num_gens);
      std::uint64_t b = find_root(parent, img[static_cast<std::size_t>(k)]);
      if (a == b) continue;
      if (b < a) std::swap(a, b);
      parent[b] = a;
    }
  }
  std::vector<std::uint32_t> label(n, kUnset);
  std::uint32_t next = 0;
  for (std::uint64_t x = 0; x < n; ++x) {
    const std::uint64_t r = find_root(parent, x);
    if (r == x) label[x] = next++;
    else label[x] = label[r];
  }
  return label;
}

std::uint64_t Fiber::size() const {
  std::uint64_t s = 1;
  for (auto r : radix) s *= r;
  return s;
}

std::vector<std::uint64_t> fiber_histogram_serial(const Fiber& fiber, const std::vector<std::uint32_t>& label,
                                                  std::size_t num_labels) {
  std::vector<std::uint64_t> hist(num_labels, 0);
  std::vector<std::uint64_t> digit(fiber.radix.size(), 0);
  std::uint64_t code = fiber.base;
  while (true) {
    ++hist[label[code]];
    std::size_t j = digit.size();
    while (j > 0 && digit[j - 1] + 1 == fiber.radix[j - 1]) {
      --j;
      code -= digit[j] * fiber.stride[j];
      digit[j] = 0;
    }
    if (j == 0) return hist;
    ++digit[j - 1];
    code += fiber.stride[j - 1];
  }
}

std::vector<std::uint64_t> fiber_histogram_parallel(const Fiber& fiber, const std::vector<std::uint32_t>& label,
                                                    std::size_t num_labels) {
  const auto total = static_cast<std::int64_t>(fiber.size());
  std::vector<std::uint64_t> hist(num_labels, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(num_labels, 0);
#pragma omp for schedule(static)
    for (std::int64_t k = 0; k < total; ++k) ++local[label[fiber_point(fiber, static_cast<std::uint64_t>(k))]];
#pragma omp critical
    for (std::size_t i = 0; i < num_labels; ++i) hist[i] += local[i];
  }
  return hist;
}

std::vector<std::uint64_t> classify_histogram_serial(std::uint64_t n, std::size_t rows, std::size_t cols,
                                                     const ClassifyFn& classify) {
  std::vector<std::uint64_t> hist(rows * cols, 0);
  for (std::uint64_t k = 0; k < n; ++k)
    if (auto rc = classify(k)) ++hist[rc->first * cols + rc->second];
  return hist;
}

std::vector<std::uint64_t> classify_histogram_parallel(std::uint64_t n, std::size_t rows, std::size_t cols,
                                                       const ClassifyFn& classify) {
  std::vector<std::uint64_t> hist(rows * cols, 0);
  const auto total = static_cast<std::int64_t>(n);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(rows * cols, 0);
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t k = 0; k < total; ++k)
      if (auto rc = classify(static_cast<std::uint64_t>(k))) ++local[rc->first * cols + rc->second];
#pragma omp critical
    for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += local[i];
  }
  return hist;
}

}  // namespace hallq::kernels

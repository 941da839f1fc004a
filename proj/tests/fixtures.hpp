#pragma once

#include <memory>

#include <gtest/gtest.h>

#include "hallq/error.hpp"
#include "hallq/hall.hpp"

namespace fixtures {

using hallq::quiver::QuiverWithAut;

inline QuiverWithAut a2() { return {{"1", "2"}, {{"h", 0, 1}}, {0, 1}, {0}}; }
inline QuiverWithAut kronecker() { return {{"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}}, {0, 1}, {0, 1}}; }
// 1 -> 2 <- 3 with the swap 1 <-> 3.
inline QuiverWithAut a3_fold() { return {{"1", "2", "3"}, {{"h1", 0, 1}, {"h3", 2, 1}}, {2, 1, 0}, {1, 0}}; }
inline QuiverWithAut a3() { return {{"1", "2", "3"}, {{"h1", 0, 1}, {"h3", 2, 1}}, {0, 1, 2}, {0, 1}}; }

inline std::unique_ptr<hallq::hall::Workbench> bench(const QuiverWithAut& q, int p, int e = 1,
                                                     hallq::hall::Options opts = {}) {
  hallq::quiver::Folded folded(q);
  return std::make_unique<hallq::hall::Workbench>(hallq::rep::make_context(folded, p, e), opts);
}

}  // namespace fixtures

#define EXPECT_HALLQ_ERROR(stmt, expected_kind)                             \
  do {                                                                     \
    try {                                                                  \
      stmt;                                                                \
      ADD_FAILURE() << "expected " << hallq::to_string(expected_kind);     \
    } catch (const hallq::Error& err_) {                                   \
      EXPECT_EQ(err_.kind(), expected_kind) << err_.what();                \
    }                                                                      \
  } while (0)

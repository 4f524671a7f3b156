#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "lcchord/parallel.hpp"

using lcchord::parallel_map;

TEST(ParallelMap, KeepsItemOrder) {
  std::vector<int> items(1000);
  for (int i = 0; i < 1000; ++i) items[i] = i;
  for (unsigned jobs : {1u, 3u, 8u}) {
    const auto out = parallel_map(std::span<const int>(items), [](int x) { return x * x; }, jobs);
    ASSERT_EQ(out.size(), items.size());
    for (int i = 0; i < 1000; ++i) EXPECT_EQ(out[i], i * i);
  }
}

TEST(ParallelMap, EmptyInput) {
  const std::vector<int> none;
  EXPECT_TRUE(parallel_map(std::span<const int>(none), [](int x) { return x; }, 4).empty());
}

TEST(ParallelMap, RethrowsLowestIndexError) {
  std::vector<int> items{0, 1, 2, 3, 4, 5};
  try {
    parallel_map(
        std::span<const int>(items),
        [](int x) -> int {
          if (x >= 2) throw std::runtime_error(std::to_string(x));
          return x;
        },
        4);
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "2");
  }
}

#pragma once

// Independent rank oracle for the property suites: fraction-free Gaussian
// elimination (Bareiss / Montante). Shares no code with the Smith normal
// form path it cross-checks. Divisions are asserted exact.

#include "zerocyc/int_matrix.hpp"

#include <cassert>
#include <cstddef>

namespace testsupport {

inline std::size_t elimination_rank(zerocyc::IntMatrix a) {
  using zerocyc::Int;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c) == 0) ++p;
    if (p == m) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Int num = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        assert(num % prev == 0);
        a(i, j) = num / prev;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

}  // namespace testsupport

#pragma once

// Slow reference computations used only by tests. None of them share code
// with the library paths they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "stopset/bit_matrix.hpp"
#include "stopset/exact.hpp"

namespace oracle {

using Grid = std::vector<std::vector<int>>;

inline Grid to_grid(const stopset::BitMatrix& m) {
  Grid g(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      g[i][j] = m.test(i, j) ? 1 : 0;
    }
  }
  return g;
}

inline stopset::BitMatrix from_grid(const Grid& g) {
  stopset::BitMatrix m(g.size(), g.empty() ? 0 : g[0].size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g[i].size(); ++j) {
      if (g[i][j]) {
        m.set(i, j);
      }
    }
  }
  return m;
}

inline int row_weight_on(const Grid& g, std::size_t row, const std::vector<std::size_t>& cols) {
  int w = 0;
  for (std::size_t c : cols) {
    w += g[row][c];
  }
  return w;
}

inline bool is_stopping(const Grid& g, const std::vector<std::size_t>& cols) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (row_weight_on(g, i, cols) == 1) {
      return false;
    }
  }
  return true;
}

inline bool is_codeword(const Grid& g, const std::vector<std::size_t>& cols) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (row_weight_on(g, i, cols) % 2 != 0) {
      return false;
    }
  }
  return true;
}

// Visits every subset of {0..n-1} as an explicit index list.
template <typename Visit>
void for_each_subset(std::size_t n, Visit visit) {
  std::vector<std::size_t> cols;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    cols.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if ((mask >> j) & 1U) {
        cols.push_back(j);
      }
    }
    visit(cols);
  }
}

inline std::vector<std::int64_t> stopping_counts(const Grid& g) {
  const std::size_t n = g.empty() ? 0 : g[0].size();
  std::vector<std::int64_t> c(n + 1, 0);
  for_each_subset(n, [&](const std::vector<std::size_t>& s) {
    if (is_stopping(g, s)) ++c[s.size()];
  });
  return c;
}

inline std::vector<std::int64_t> weight_counts(const Grid& g) {
  const std::size_t n = g.empty() ? 0 : g[0].size();
  std::vector<std::int64_t> c(n + 1, 0);
  for_each_subset(n, [&](const std::vector<std::size_t>& s) {
    if (is_codeword(g, s)) ++c[s.size()];
  });
  return c;
}

// Y(T,p) by testing every p-subset of columns. `rows` are 0-based.
inline std::int64_t type_p_count(const Grid& g, const std::vector<std::size_t>& rows,
                                 std::size_t p) {
  const std::size_t n = g.empty() ? 0 : g[0].size();
  std::int64_t count = 0;
  for_each_subset(n, [&](const std::vector<std::size_t>& s) {
    if (s.size() != p) return;
    for (std::size_t r : rows) {
      if (row_weight_on(g, r, s) != 1) return;
    }
    for (std::size_t c : s) {
      int w = 0;
      for (std::size_t r : rows) w += g[r][c];
      if (w == 0) return;
    }
    ++count;
  });
  return count;
}

// Set partitions of {0..n-1} into k blocks via restricted growth strings.
inline std::int64_t partitions(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::int64_t count = 0;
  auto rec = [&](auto& self, int i, int blocks) -> void {
    if (i == n) {
      if (blocks == k) ++count;
      return;
    }
    for (int b = 0; b <= blocks && b < k; ++b) {
      a[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
  return count;
}

// Signed Stirling number of the first kind by counting permutations with k
// cycles.
inline std::int64_t signed_cycle_count(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t count = 0;
  do {
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      ++cycles;
      for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = true;
      }
    }
    if (cycles == k) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return ((n - k) % 2 == 0) ? count : -count;
}

inline stopset::BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                                        double density = 0.5) {
  std::bernoulli_distribution bit(density);
  stopset::BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (bit(rng)) m.set(i, j);
    }
  }
  return m;
}

} // namespace oracle

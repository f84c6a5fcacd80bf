#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "stopset/bit_matrix.hpp"
#include "stopset/combinatorics.hpp"
#include "stopset/enumerator.hpp"
#include "stopset/error.hpp"
#include "stopset/exact.hpp"

namespace stopset {

/// 0 means std::thread::hardware_concurrency().
inline unsigned resolve_workers(unsigned workers) {
  if (workers != 0) {
    return workers;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

struct BruteForceOptions {
  /// Subset masks must fit a 32-bit word, so the cap can only be lowered.
  std::size_t max_n = 31;
  unsigned workers = 0;
};

/// A column set S is stopping iff no row restricted to S has weight one.
inline bool is_stopping_set(std::span<const std::uint64_t> row_masks, std::uint64_t set) noexcept {
  for (std::uint64_t row : row_masks) {
    const std::uint64_t x = row & set;
    if (x != 0 && (x & (x - 1)) == 0) {
      return false;
    }
  }
  return true;
}

/// S is the support of a codeword iff every row restricted to S has even weight.
inline bool is_codeword_support(std::span<const std::uint64_t> row_masks,
                                std::uint64_t set) noexcept {
  for (std::uint64_t row : row_masks) {
    if (std::popcount(row & set) & 1) {
      return false;
    }
  }
  return true;
}

namespace detail {

inline std::vector<std::uint64_t> row_masks(const BitMatrix& h) {
  std::vector<std::uint64_t> rows(h.rows());
  for (std::size_t i = 0; i < h.rows(); ++i) {
    rows[i] = h.row_mask(i);
  }
  return rows;
}

// Counts subsets of {0..n-1} satisfying `accept`, by size. Masks are split
// into contiguous ranges, one per worker; the merge order is fixed.
template <typename Predicate>
Enumerator count_subsets(const BitMatrix& h, const BruteForceOptions& opts, Predicate accept) {
  const std::size_t n = h.cols();
  const std::size_t cap = std::min<std::size_t>(opts.max_n, 31);
  if (n > cap) {
    throw ResourceError("brute force needs n <= " + std::to_string(cap) + " but n=" +
                        std::to_string(n) +
                        "; use the inclusion-exclusion method or the Hamming closed forms");
  }
  const std::vector<std::uint64_t> rows = row_masks(h);
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t workers = std::min<std::uint64_t>(resolve_workers(opts.workers), total);

  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(n + 1, 0));
  auto run = [&](std::uint64_t w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    auto& counts = partial[w];
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      if (accept(std::span<const std::uint64_t>(rows), mask)) {
        ++counts[static_cast<std::size_t>(std::popcount(mask))];
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back(run, w);
    }
  }
  std::vector<Integer> coeffs(n + 1, 0);
  for (const auto& counts : partial) {
    for (std::size_t l = 0; l <= n; ++l) {
      coeffs[l] += counts[l];
    }
  }
  return Enumerator(std::move(coeffs));
}

// Gathers the bits of `value` selected by `select` into the low bits.
inline std::uint64_t extract_bits(std::uint64_t value, std::uint64_t select) noexcept {
  std::uint64_t out = 0;
  for (std::uint64_t bit = 1; select != 0; bit <<= 1) {
    const std::uint64_t low = select & (~select + 1);
    if (value & low) {
      out |= bit;
    }
    select ^= low;
  }
  return out;
}

} // namespace detail

/// Stopping set enumerator by testing every column subset.
inline Enumerator brute_force_stopping(const BitMatrix& h, const BruteForceOptions& opts = {}) {
  return detail::count_subsets(h, opts, is_stopping_set);
}

/// Weight enumerator of the null space of `h` by testing every column subset.
inline Enumerator brute_force_weight(const BitMatrix& h, const BruteForceOptions& opts = {}) {
  return detail::count_subsets(h, opts, is_codeword_support);
}

/// For a row set T: z counts columns that vanish on T, and Y[p] counts
/// p-subsets of columns whose restriction to T has every row of weight one
/// and every column nonzero.
struct CoverStats {
  IndexSet rows;
  std::size_t z = 0;
  std::vector<Integer> y;
};

namespace detail {

// `patterns[j]` is column j restricted to T, packed into the low t bits.
inline CoverStats cover_stats_from_patterns(IndexSet rows, std::size_t t,
                                            const std::vector<std::uint64_t>& patterns,
                                            std::size_t p_max) {
  CoverStats stats;
  stats.rows = std::move(rows);
  stats.y.assign(p_max + 1, 0);

  const std::size_t full = (std::size_t{1} << t) - 1;
  std::vector<std::uint64_t> multiplicity(full + 1, 0);
  for (std::uint64_t p : patterns) {
    ++multiplicity[p];
  }
  stats.z = multiplicity[0];

  std::vector<std::size_t> distinct;
  for (std::size_t p = 1; p <= full; ++p) {
    if (multiplicity[p] != 0) {
      distinct.push_back(p);
    }
  }

  // layer[mask] = ordered selections of k disjoint nonzero column patterns
  // (with multiplicity) whose union is mask.
  std::vector<Integer> layer(full + 1, 0);
  layer[0] = 1;
  Integer k_factorial = 1;
  for (std::size_t k = 0; k <= p_max; ++k) {
    if (k > 0) {
      k_factorial *= k;
    }
    // Patterns in one selection are disjoint and nonzero, hence pairwise
    // distinct, so every unordered selection appears exactly k! times.
    stats.y[k] = exact_divide(layer[full], k_factorial, "type-p subset count");
    if (k == p_max || k >= t) {
      break;
    }
    std::vector<Integer> next(full + 1, 0);
    for (std::size_t mask = 0; mask <= full; ++mask) {
      if (layer[mask] == 0) {
        continue;
      }
      for (std::size_t p : distinct) {
        if ((p & mask) == 0) {
          next[mask | p] += layer[mask] * multiplicity[p];
        }
      }
    }
    layer = std::move(next);
  }
  return stats;
}

} // namespace detail

/// z_T and Y(T, p) for p = 0..p_max. T is a 1-based ascending row set.
inline CoverStats cover_stats(const BitMatrix& h, const IndexSet& rows, std::size_t p_max) {
  detail::check_index_set(rows, h.rows(), "row");
  if (p_max > h.cols()) {
    throw DomainError("p_max exceeds the column count");
  }
  if (rows.size() > 24) {
    throw ResourceError("cover statistics support at most 24 rows in T");
  }
  std::vector<std::uint64_t> patterns(h.cols(), 0);
  for (std::size_t j = 0; j < h.cols(); ++j) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (h.test(rows[i] - 1, j)) {
        patterns[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return detail::cover_stats_from_patterns(rows, rows.size(), patterns, p_max);
}

struct InclusionExclusionOptions {
  std::size_t max_rows = 20;
};

/// Stopping set enumerator by inclusion-exclusion over row subsets T:
///   S_l = sum_T (-1)^|T| sum_p Y(T,p) C(z_T, l-p).
/// Cost grows as 2^r; n is unrestricted.
inline Enumerator theorem1_stopping(const BitMatrix& h, const InclusionExclusionOptions& opts = {}) {
  const std::size_t r = h.rows();
  const std::size_t n = h.cols();
  if (r > opts.max_rows) {
    throw ResourceError("inclusion-exclusion needs r <= " + std::to_string(opts.max_rows) +
                        " but r=" + std::to_string(r));
  }
  std::vector<std::uint64_t> columns(n);
  for (std::size_t j = 0; j < n; ++j) {
    columns[j] = h.column_pattern(j);
  }

  std::vector<Integer> s(n + 1, 0);
  std::vector<Integer> binom_z(n + 1);
  std::vector<std::uint64_t> patterns(n);
  for (std::uint64_t t_mask = 0; t_mask < (std::uint64_t{1} << r); ++t_mask) {
    const std::size_t t = static_cast<std::size_t>(std::popcount(t_mask));
    IndexSet rows;
    for (std::size_t i = 0; i < r; ++i) {
      if ((t_mask >> i) & 1U) {
        rows.push_back(i + 1);
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      patterns[j] = detail::extract_bits(columns[j], t_mask);
    }
    const CoverStats stats =
        detail::cover_stats_from_patterns(std::move(rows), t, patterns, std::min(t, n));

    // C(z, k) for k = 0..n
    binom_z[0] = 1;
    for (std::size_t k = 0; k < n; ++k) {
      binom_z[k + 1] = k < stats.z ? Integer(binom_z[k] * (stats.z - k) / (k + 1)) : Integer(0);
    }
    for (std::size_t p = 0; p < stats.y.size(); ++p) {
      if (stats.y[p] == 0) {
        continue;
      }
      for (std::size_t l = p; l <= n; ++l) {
        if (binom_z[l - p] == 0) {
          break;
        }
        Integer term = stats.y[p] * binom_z[l - p];
        if (t % 2 == 0) {
          s[l] += term;
        } else {
          s[l] -= term;
        }
      }
    }
  }
  for (std::size_t l = 0; l <= n; ++l) {
    if (s[l] < 0) {
      throw InvariantError("inclusion-exclusion produced a negative count at l=" +
                           std::to_string(l));
    }
  }
  return Enumerator(std::move(s));
}

} // namespace stopset

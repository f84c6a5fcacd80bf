#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "stopset/bit_matrix.hpp"
#include "stopset/error.hpp"
#include "stopset/exact.hpp"
#include "stopset/stopping.hpp"

namespace stopset {

/// Erased positions, 1-based and ascending.
using ErasurePattern = IndexSet;

enum class DecodeStatus { Recovered, Stuck };

struct DecodeOutcome {
  DecodeStatus status = DecodeStatus::Recovered;
  /// Positions still erased when decoding stopped; a stopping set when nonempty.
  IndexSet residual;
  /// Number of positions resolved.
  std::size_t steps = 0;

  friend bool operator==(const DecodeOutcome&, const DecodeOutcome&) = default;
};

inline std::string_view to_string(DecodeStatus s) {
  return s == DecodeStatus::Recovered ? "recovered" : "stuck";
}

/// Parses "2,3,5" into an ascending index set. Blank input is the empty set.
inline ErasurePattern parse_index_list(std::string_view text) {
  IndexSet out;
  std::size_t pos = 0;
  if (text.find_first_not_of(" \t") == std::string_view::npos) {
    return out;
  }
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && detail::is_space(item.front())) item.remove_prefix(1);
    while (!item.empty() && detail::is_space(item.back())) item.remove_suffix(1);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string_view::npos ||
        item.size() > 18) {
      throw FormatError("invalid index '" + std::string(item) + "' in list");
    }
    out.push_back(std::stoull(std::string(item)));
    pos = end + 1;
  }
  return make_index_set(std::move(out));
}

namespace detail {

// Covering row for the current residual: the restriction has weight exactly
// one. Returns the covered column or npos.
inline std::size_t covered_column(std::span<const std::uint64_t> row,
                                  const std::vector<std::uint64_t>& residual) {
  std::size_t found = static_cast<std::size_t>(-1);
  for (std::size_t w = 0; w < row.size(); ++w) {
    const std::uint64_t x = row[w] & residual[w];
    if (x == 0) {
      continue;
    }
    if ((x & (x - 1)) != 0 || found != static_cast<std::size_t>(-1)) {
      return static_cast<std::size_t>(-1);
    }
    found = w * BitMatrix::kWordBits + static_cast<std::size_t>(std::countr_zero(x));
  }
  return found;
}

inline std::vector<std::uint64_t> erasure_words(const BitMatrix& h, const ErasurePattern& erased) {
  check_index_set(erased, h.cols(), "erasure");
  std::vector<std::uint64_t> words(h.words_per_row(), 0);
  for (std::size_t j : erased) {
    words[(j - 1) / BitMatrix::kWordBits] |= std::uint64_t{1} << ((j - 1) % BitMatrix::kWordBits);
  }
  return words;
}

inline DecodeOutcome make_outcome(const std::vector<std::uint64_t>& residual, std::size_t steps) {
  DecodeOutcome out;
  out.steps = steps;
  for (std::size_t w = 0; w < residual.size(); ++w) {
    for (std::uint64_t x = residual[w]; x != 0; x &= x - 1) {
      out.residual.push_back(w * BitMatrix::kWordBits + std::countr_zero(x) + 1);
    }
  }
  out.status = out.residual.empty() ? DecodeStatus::Recovered : DecodeStatus::Stuck;
  return out;
}

} // namespace detail

/// Peeling decoder on the binary erasure channel. Each step takes the lowest
/// row whose restriction to the erased set has weight one, resolves that
/// position, and rescans from the first row.
inline DecodeOutcome peel(const BitMatrix& h, const ErasurePattern& erased) {
  std::vector<std::uint64_t> residual = detail::erasure_words(h, erased);
  std::size_t steps = 0;
  for (std::size_t i = 0; i < h.rows();) {
    const std::size_t col = detail::covered_column(h.row_words(i), residual);
    if (col == static_cast<std::size_t>(-1)) {
      ++i;
      continue;
    }
    residual[col / BitMatrix::kWordBits] &= ~(std::uint64_t{1} << (col % BitMatrix::kWordBits));
    ++steps;
    i = 0;
  }
  return detail::make_outcome(residual, steps);
}

/// Same decoder, but each step picks uniformly among all covering rows.
template <typename Urbg>
DecodeOutcome peel_random_order(const BitMatrix& h, const ErasurePattern& erased, Urbg& rng) {
  std::vector<std::uint64_t> residual = detail::erasure_words(h, erased);
  std::size_t steps = 0;
  std::vector<std::size_t> candidates;
  for (;;) {
    candidates.clear();
    for (std::size_t i = 0; i < h.rows(); ++i) {
      const std::size_t col = detail::covered_column(h.row_words(i), residual);
      if (col != static_cast<std::size_t>(-1)) {
        candidates.push_back(col);
      }
    }
    if (candidates.empty()) {
      break;
    }
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    const std::size_t col = candidates[pick(rng)];
    residual[col / BitMatrix::kWordBits] &= ~(std::uint64_t{1} << (col % BitMatrix::kWordBits));
    ++steps;
  }
  return detail::make_outcome(residual, steps);
}

/// Residual of the peeling decoder for n <= 64, as a column mask.
inline std::uint64_t peel_mask(std::span<const std::uint64_t> row_masks, std::uint64_t erased) noexcept {
  for (std::size_t i = 0; i < row_masks.size();) {
    const std::uint64_t x = row_masks[i] & erased;
    if (x != 0 && (x & (x - 1)) == 0) {
      erased &= ~x;
      i = 0;
    } else {
      ++i;
    }
  }
  return erased;
}

/// U_l = number of size-l erasure patterns on which peeling fails.
struct FailureProfile {
  std::vector<Integer> counts;

  [[nodiscard]] std::size_t length() const noexcept {
    return counts.empty() ? 0 : counts.size() - 1;
  }
};

/// Runs the decoder on all 2^n erasure patterns.
inline FailureProfile exhaustive_failure_profile(const BitMatrix& h, std::size_t max_n = 20) {
  const std::size_t n = h.cols();
  if (n > std::min<std::size_t>(max_n, 32)) {
    throw ResourceError("exhaustive failure profile needs n <= " + std::to_string(max_n) +
                        " but n=" + std::to_string(n));
  }
  const std::vector<std::uint64_t> rows = detail::row_masks(h);
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (peel_mask(rows, mask) != 0) {
      ++counts[static_cast<std::size_t>(std::popcount(mask))];
    }
  }
  return {std::vector<Integer>(counts.begin(), counts.end())};
}

/// sum_l U_l eps^l (1-eps)^{n-l}.
inline double exact_failure_probability(const FailureProfile& u, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw DomainError("erasure probability must lie in [0, 1]");
  }
  const std::size_t n = u.length();
  double total = 0.0;
  for (std::size_t l = 0; l < u.counts.size(); ++l) {
    if (u.counts[l] == 0) {
      continue;
    }
    total += u.counts[l].convert_to<double>() * std::pow(epsilon, static_cast<double>(l)) *
             std::pow(1.0 - epsilon, static_cast<double>(n - l));
  }
  return total;
}

/// SplitMix64 finalizer; derives independent generator seeds.
inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct MonteCarloEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t failures = 0;
  std::uint64_t trials = 0;
};

struct MonteCarloOptions {
  unsigned workers = 1;
  /// Trials per substream. Part of the reproducibility contract.
  std::uint64_t block_size = 4096;
};

/// Failure rate of the peeling decoder on a BEC(epsilon), estimated from
/// `trials` independent erasure patterns.
///
/// Trials are grouped in blocks of `block_size`. Block b draws from
/// std::mt19937_64 seeded with splitmix64(seed ^ splitmix64(b)); each column
/// is erased when (draw >> 11) * 2^-53 < epsilon, in column order. Blocks are
/// dealt round-robin to workers and failures summed, so the result does not
/// depend on the worker count.
inline MonteCarloEstimate monte_carlo_failure(const BitMatrix& h, double epsilon,
                                              std::uint64_t trials, std::uint64_t seed,
                                              const MonteCarloOptions& opts = {}) {
  if (trials == 0) {
    throw DomainError("Monte Carlo needs at least one trial");
  }
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw DomainError("erasure probability must lie in [0, 1]");
  }
  if (opts.block_size == 0) {
    throw DomainError("Monte Carlo block size must be positive");
  }
  const std::size_t n = h.cols();
  const std::vector<std::uint64_t> rows = detail::row_masks(h);
  const bool narrow = n <= 64;
  const std::uint64_t blocks = (trials + opts.block_size - 1) / opts.block_size;
  const std::uint64_t workers =
      std::min<std::uint64_t>(resolve_workers(opts.workers), blocks);

  auto run_block = [&](std::uint64_t b) {
    std::mt19937_64 gen(splitmix64(seed ^ splitmix64(b)));
    const std::uint64_t first = b * opts.block_size;
    const std::uint64_t count = std::min(opts.block_size, trials - first);
    std::uint64_t failures = 0;
    ErasurePattern erased;
    for (std::uint64_t k = 0; k < count; ++k) {
      std::uint64_t mask = 0;
      erased.clear();
      for (std::size_t j = 0; j < n; ++j) {
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        if (u < epsilon) {
          if (narrow) {
            mask |= std::uint64_t{1} << j;
          } else {
            erased.push_back(j + 1);
          }
        }
      }
      const bool stuck = narrow ? peel_mask(rows, mask) != 0
                                : peel(h, erased).status == DecodeStatus::Stuck;
      failures += stuck ? 1 : 0;
    }
    return failures;
  };

  std::vector<std::uint64_t> per_worker(workers, 0);
  auto run = [&](std::uint64_t w) {
    for (std::uint64_t b = w; b < blocks; b += workers) {
      per_worker[w] += run_block(b);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back(run, w);
    }
  }

  MonteCarloEstimate est;
  est.trials = trials;
  for (std::uint64_t f : per_worker) {
    est.failures += f;
  }
  est.estimate = static_cast<double>(est.failures) / static_cast<double>(trials);
  est.standard_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(trials));
  return est;
}

} // namespace stopset

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stopset/error.hpp"

namespace stopset {

/// Sorted set of 1-based row or column indices.
using IndexSet = std::vector<std::size_t>;

/// Dense binary matrix with bit-packed rows.
///
/// Element accessors (`test`, `set`) use 0-based positions like any C++
/// container. Every function that takes an IndexSet (submatrix, cover
/// statistics, erasure patterns) uses 1-based indices.
///
/// Bits past column `cols()` in the last word of each row are always zero.
class BitMatrix {
public:
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kMaxCols = std::size_t{1} << 20;

  BitMatrix() = default;

  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_per_row_((cols + kWordBits - 1) / kWordBits),
        bits_(rows * words_per_row_, 0) {
    if (cols > kMaxCols) {
      throw ResourceError("matrix has " + std::to_string(cols) + " columns; at most " +
                          std::to_string(kMaxCols) + " are supported");
    }
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] std::size_t words_per_row() const noexcept { return words_per_row_; }

  [[nodiscard]] bool test(std::size_t row, std::size_t col) const noexcept {
    return (bits_[row * words_per_row_ + col / kWordBits] >> (col % kWordBits)) & 1U;
  }

  void set(std::size_t row, std::size_t col, bool value = true) noexcept {
    std::uint64_t& w = bits_[row * words_per_row_ + col / kWordBits];
    const std::uint64_t bit = std::uint64_t{1} << (col % kWordBits);
    w = value ? (w | bit) : (w & ~bit);
  }

  [[nodiscard]] std::span<const std::uint64_t> row_words(std::size_t row) const noexcept {
    return {bits_.data() + row * words_per_row_, words_per_row_};
  }

  /// Row as a single machine word; only meaningful when cols() <= 64.
  [[nodiscard]] std::uint64_t row_mask(std::size_t row) const noexcept {
    return words_per_row_ == 0 ? 0 : bits_[row * words_per_row_];
  }

  [[nodiscard]] std::size_t row_weight(std::size_t row) const noexcept {
    std::size_t w = 0;
    for (std::uint64_t word : row_words(row)) {
      w += static_cast<std::size_t>(std::popcount(word));
    }
    return w;
  }

  /// Column as a bit vector over rows (bit i = entry in row i); needs rows() <= 64.
  [[nodiscard]] std::uint64_t column_pattern(std::size_t col) const noexcept {
    std::uint64_t p = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      p |= static_cast<std::uint64_t>(test(i, col)) << i;
    }
    return p;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

namespace detail {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

inline void check_index_set(const IndexSet& set, std::size_t limit, std::string_view what) {
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (set[k] < 1 || set[k] > limit) {
      throw DomainError(std::string(what) + " index " + std::to_string(set[k]) +
                        " outside 1.." + std::to_string(limit));
    }
    if (k > 0 && set[k] <= set[k - 1]) {
      throw DomainError(std::string(what) + " indices must be strictly increasing");
    }
  }
}

} // namespace detail

/// Normalizes an index set: sorts and removes duplicates.
inline IndexSet make_index_set(IndexSet indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return indices;
}

/// Parses one row per line of '0'/'1' characters. Whitespace inside a line is
/// ignored and blank lines are skipped.
inline BitMatrix parse_matrix(std::string_view text) {
  std::vector<std::string> rows;
  std::size_t width = 0;
  std::size_t first_line = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++line_no;
    std::string row;
    for (char c : text.substr(pos, end - pos)) {
      if (c == '0' || c == '1') {
        row.push_back(c);
      } else if (!detail::is_space(c)) {
        throw FormatError("line " + std::to_string(line_no) + ": unexpected character '" +
                          std::string(1, c) + "'");
      }
    }
    if (!row.empty()) {
      if (rows.empty()) {
        width = row.size();
        first_line = line_no;
      } else if (row.size() != width) {
        throw FormatError("line " + std::to_string(line_no) + ": ragged row of length " +
                          std::to_string(row.size()) + ", expected " + std::to_string(width) +
                          " (from line " + std::to_string(first_line) + ")");
      }
      rows.push_back(std::move(row));
    }
    pos = end + 1;
  }
  if (rows.empty()) {
    throw FormatError("matrix text contains no rows");
  }
  BitMatrix m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      if (rows[i][j] == '1') {
        m.set(i, j);
      }
    }
  }
  return m;
}

inline BitMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FormatError("cannot open matrix file '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

/// Canonical text form: one row per line, newline-terminated.
inline std::string to_text(const BitMatrix& m) {
  std::string out;
  out.reserve(m.rows() * (m.cols() + 1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out.push_back(m.test(i, j) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

/// Full-rank m x (2^m - 1) Hamming parity-check matrix. Column j (1-based)
/// is the binary encoding of j with row 1 holding the least significant bit.
inline BitMatrix hamming_parity_matrix(int m) {
  if (m < 2 || m > 31) {
    throw DomainError("Hamming parameter m=" + std::to_string(m) + " outside 2..31");
  }
  const std::size_t n = (std::size_t{1} << m) - 1;
  BitMatrix h(static_cast<std::size_t>(m), n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t value = j + 1;
    for (int i = 0; i < m; ++i) {
      if ((value >> i) & 1U) {
        h.set(static_cast<std::size_t>(i), j);
      }
    }
  }
  return h;
}

/// Rank over GF(2) by row reduction.
inline std::size_t rank_gf2(const BitMatrix& m) {
  const std::size_t wpr = m.words_per_row();
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto w = m.row_words(i);
    rows.emplace_back(w.begin(), w.end());
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
    const std::size_t word = col / BitMatrix::kWordBits;
    const std::uint64_t bit = std::uint64_t{1} << (col % BitMatrix::kWordBits);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][word] & bit)) {
      ++pivot;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && (rows[i][word] & bit)) {
        for (std::size_t k = word; k < wpr; ++k) {
          rows[i][k] ^= rows[rank][k];
        }
      }
    }
    ++rank;
  }
  return rank;
}

/// Rows `row_set` and columns `col_set` of `m`, both 1-based and ascending.
inline BitMatrix submatrix(const BitMatrix& m, const IndexSet& col_set, const IndexSet& row_set) {
  detail::check_index_set(col_set, m.cols(), "column");
  detail::check_index_set(row_set, m.rows(), "row");
  BitMatrix out(row_set.size(), col_set.size());
  for (std::size_t i = 0; i < row_set.size(); ++i) {
    for (std::size_t j = 0; j < col_set.size(); ++j) {
      if (m.test(row_set[i] - 1, col_set[j] - 1)) {
        out.set(i, j);
      }
    }
  }
  return out;
}

/// Column j of the result is column perm[j] (0-based) of `m`.
inline BitMatrix permute_columns(const BitMatrix& m, std::span<const std::size_t> perm) {
  if (perm.size() != m.cols()) {
    throw DomainError("permutation length does not match column count");
  }
  std::vector<bool> seen(m.cols(), false);
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t j = 0; j < perm.size(); ++j) {
    if (perm[j] >= m.cols() || seen[perm[j]]) {
      throw DomainError("not a permutation");
    }
    seen[perm[j]] = true;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m.test(i, perm[j])) {
        out.set(i, j);
      }
    }
  }
  return out;
}

} // namespace stopset

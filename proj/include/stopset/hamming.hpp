#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stopset/combinatorics.hpp"
#include "stopset/enumerator.hpp"
#include "stopset/error.hpp"
#include "stopset/exact.hpp"

// Closed forms for the full-rank m x (2^m - 1) Hamming parity-check matrix.
// Every coefficient depends on m only, so none of these build the matrix.

namespace stopset {

namespace detail {

inline void check_hamming_index(int m, std::int64_t l) {
  if (m < 2) {
    throw DomainError("Hamming parameter m=" + std::to_string(m) + " must be at least 2");
  }
  if (l < 0 || (m < 63 && l > (std::int64_t{1} << m) - 1)) {
    throw DomainError("index l=" + std::to_string(l) + " outside 0..2^" + std::to_string(m) +
                      "-1");
  }
}

} // namespace detail

/// S_l = sum_t (-1)^t C(m,t) sum_p S(t,p) 2^{(m-t)p} C(2^{m-t}-1, l-p).
inline Integer hamming_Sl_doublesum(int m, std::int64_t l, const StirlingTables& tables) {
  detail::check_hamming_index(m, l);
  if (m > 62) {
    throw ResourceError("double-sum route supports m <= 62");
  }
  Integer sum = 0;
  for (int t = 0; t <= m; ++t) {
    const std::int64_t zeros = (std::int64_t{1} << (m - t)) - 1;
    Integer inner = 0;
    for (std::int64_t p = 0; p <= std::min<std::int64_t>(l, t); ++p) {
      const Integer& s2 = tables.second(t, p);
      if (s2 == 0) {
        continue;
      }
      inner += s2 * pow2(static_cast<unsigned>((m - t) * p)) * binomial(zeros, l - p);
    }
    Integer term = binomial(m, t) * inner;
    sum += (t % 2 == 0) ? term : Integer(-term);
  }
  return sum;
}

inline Integer hamming_Sl_doublesum(int m, std::int64_t l) {
  detail::check_hamming_index(m, l);
  return hamming_Sl_doublesum(m, l, StirlingTables(static_cast<std::size_t>(std::max(m, 1))));
}

/// S_l = (1/l!) sum_{q=0}^{l} sum_{v=q}^{min(2q,l)} (-1)^v C(l,v) b(q,v) (2^{l-q} - (l-v))^m.
/// `b` needs capacity >= l.
inline Integer hamming_Sl_theorem2(int m, std::int64_t l, const BTable& b) {
  detail::check_hamming_index(m, l);
  Integer sum = 0;
  for (std::int64_t q = 0; q <= l; ++q) {
    const Integer base_pow = pow2(static_cast<unsigned>(l - q));
    for (std::int64_t v = q; v <= std::min(2 * q, l); ++v) {
      const Integer& bqv = b.at(q, v);
      if (bqv == 0) {
        continue;
      }
      Integer term = binomial(l, v) * bqv * ipow(base_pow - (l - v), static_cast<unsigned>(m));
      sum += (v % 2 == 0) ? term : Integer(-term);
    }
  }
  return exact_divide(sum, factorial(static_cast<unsigned>(l)), "Theorem 2 sum / l!");
}

inline Integer hamming_Sl_theorem2(int m, std::int64_t l) {
  detail::check_hamming_index(m, l);
  return hamming_Sl_theorem2(m, l, BTable(static_cast<std::size_t>(l)));
}

/// S_3 = (5^m - 3^{m+1} + 2^{m+1}) / 6.
inline Integer mceliece_S3(int m) {
  if (m < 2) {
    throw DomainError("Hamming parameter m=" + std::to_string(m) + " must be at least 2");
  }
  const auto e = static_cast<unsigned>(m);
  return exact_divide(ipow(5, e) - ipow(3, e + 1) + ipow(2, e + 1), 6, "S_3 / 6");
}

/// Number of weight-l codewords of the length 2^m - 1 Hamming code:
///   A_l = [C(n,l) + (-1)^{ceil(l/2)} n C((n-1)/2, floor(l/2))] / (n+1).
inline Integer hamming_Al(int m, std::int64_t l) {
  detail::check_hamming_index(m, l);
  if (m > 62) {
    throw ResourceError("weight closed form supports m <= 62");
  }
  const std::int64_t n = (std::int64_t{1} << m) - 1;
  Integer second = Integer(n) * binomial((n - 1) / 2, l / 2);
  if (((l + 1) / 2) % 2 != 0) {
    second = -second;
  }
  return exact_divide(binomial(n, l) + second, Integer(n) + 1, "A_l / (n+1)");
}

enum class HammingMethod { Theorem2, DoubleSum };

/// Coefficients 0..upto (default: all of 0..2^m-1) by one closed form.
inline Enumerator hamming_stopping_enumerator(int m, HammingMethod method,
                                              std::optional<std::int64_t> upto = {}) {
  if (m < 2 || m > 30) {
    throw DomainError("Hamming parameter m=" + std::to_string(m) + " outside 2..30");
  }
  const std::int64_t n = (std::int64_t{1} << m) - 1;
  const std::int64_t last = upto ? std::min(*upto, n) : n;
  std::vector<Integer> coeffs;
  coeffs.reserve(static_cast<std::size_t>(last + 1));
  if (method == HammingMethod::Theorem2) {
    const BTable b(static_cast<std::size_t>(last));
    for (std::int64_t l = 0; l <= last; ++l) {
      coeffs.push_back(hamming_Sl_theorem2(m, l, b));
    }
  } else {
    const StirlingTables tables(static_cast<std::size_t>(m));
    for (std::int64_t l = 0; l <= last; ++l) {
      coeffs.push_back(hamming_Sl_doublesum(m, l, tables));
    }
  }
  return Enumerator(std::move(coeffs));
}

inline Enumerator hamming_weight_enumerator(int m) {
  if (m < 2 || m > 30) {
    throw DomainError("Hamming parameter m=" + std::to_string(m) + " outside 2..30");
  }
  const std::int64_t n = (std::int64_t{1} << m) - 1;
  std::vector<Integer> coeffs;
  for (std::int64_t l = 0; l <= n; ++l) {
    coeffs.push_back(hamming_Al(m, l));
  }
  return Enumerator(std::move(coeffs));
}

/// Exact union-bound bracket lower <= middle <= upper.
struct Sandwich {
  Integer lower;
  Integer middle;
  Integer upper;

  [[nodiscard]] bool holds() const { return lower <= middle && middle <= upper; }
};

/// l! S_l counts m x l matrices with distinct nonzero columns and no row of
/// weight one, which brackets it between
///   (2^l - l)^m - (l + C(l,2)) 2^{(l-1)m}  and  (2^l - l)^m.
inline Sandwich sandwich_check_S(int m, std::int64_t l) {
  if (m < 2 || l < 2) {
    throw DomainError("stopping-set sandwich needs m >= 2 and l >= 2");
  }
  const auto mm = static_cast<unsigned>(m);
  const Integer upper = ipow(pow2(static_cast<unsigned>(l)) - l, mm);
  const Integer slack = (Integer(l) + binomial(l, 2)) * pow2(static_cast<unsigned>((l - 1) * m));
  // No l-subsets exist past the code length.
  const Integer middle = l < (std::int64_t{1} << m) ? hamming_Sl_theorem2(m, l) : Integer(0);
  return {upper - slack, factorial(static_cast<unsigned>(l)) * middle, upper};
}

/// l! A_l counts m x l matrices with distinct nonzero columns and even-weight
/// rows, bracketed by
///   2^{(l-1)m} - (l + C(l,2)) 2^{(l-2)m}  and  2^{(l-1)m}.
inline Sandwich sandwich_check_A(int m, std::int64_t l) {
  if (m < 2 || l < 3) {
    throw DomainError("weight sandwich needs m >= 2 and l >= 3");
  }
  const Integer upper = pow2(static_cast<unsigned>((l - 1) * m));
  const Integer slack = (Integer(l) + binomial(l, 2)) * pow2(static_cast<unsigned>((l - 2) * m));
  const Integer middle = l < (std::int64_t{1} << m) ? hamming_Al(m, l) : Integer(0);
  return {upper - slack, factorial(static_cast<unsigned>(l)) * middle, upper};
}

/// l! S_l / (2^l - l)^m, which tends to 1 as m grows.
inline Rational asymptotic_ratio(int m, std::int64_t l) {
  if (m < 3 || l < 3) {
    throw DomainError("asymptotic ratio needs m >= 3 and l >= 3");
  }
  const Sandwich s = sandwich_check_S(m, l);
  return Rational(s.middle, s.upper);
}

/// l! A_l / 2^{(l-1)m}, which tends to 1 as m grows.
inline Rational asymptotic_ratio_A(int m, std::int64_t l) {
  if (m < 3 || l < 3) {
    throw DomainError("asymptotic ratio needs m >= 3 and l >= 3");
  }
  const Sandwich s = sandwich_check_A(m, l);
  return Rational(s.middle, s.upper);
}

} // namespace stopset

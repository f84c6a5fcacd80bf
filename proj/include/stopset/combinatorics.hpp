#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stopset/error.hpp"
#include "stopset/exact.hpp"

namespace stopset {

/// C(n, k), zero when k < 0 or k > n.
inline Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) {
    throw DomainError("binomial: n=" + std::to_string(n) + " is negative");
  }
  if (k < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  Integer r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) {
    r *= i;
  }
  return r;
}

/// Signed Stirling numbers of the first kind s(n,k) and second-kind numbers
/// S(n,k) for 0 <= n <= max_n, built bottom-up by their recurrences.
/// Immutable after construction.
class StirlingTables {
public:
  explicit StirlingTables(std::size_t max_n) : max_n_(max_n) {
    first_.assign(max_n + 1, std::vector<Integer>(max_n + 1, 0));
    second_.assign(max_n + 1, std::vector<Integer>(max_n + 1, 0));
    first_[0][0] = 1;
    second_[0][0] = 1;
    for (std::size_t n = 0; n < max_n; ++n) {
      for (std::size_t k = 1; k <= n + 1; ++k) {
        // s(n+1,k) = s(n,k-1) - n s(n,k)
        first_[n + 1][k] = first_[n][k - 1] - Integer(n) * (k <= n ? first_[n][k] : Integer(0));
        // S(n+1,k) = S(n,k-1) + k S(n,k)
        second_[n + 1][k] = second_[n][k - 1] + Integer(k) * (k <= n ? second_[n][k] : Integer(0));
      }
    }
  }

  [[nodiscard]] std::size_t max_n() const noexcept { return max_n_; }

  [[nodiscard]] const Integer& first(std::int64_t n, std::int64_t k) const {
    return lookup(first_, n, k);
  }

  [[nodiscard]] const Integer& second(std::int64_t n, std::int64_t k) const {
    return lookup(second_, n, k);
  }

private:
  const Integer& lookup(const std::vector<std::vector<Integer>>& t, std::int64_t n,
                        std::int64_t k) const {
    static const Integer kZero = 0;
    if (n < 0) {
      throw DomainError("Stirling number with negative n");
    }
    if (static_cast<std::size_t>(n) > max_n_) {
      throw ResourceError("Stirling table capacity " + std::to_string(max_n_) +
                          " exceeded by n=" + std::to_string(n));
    }
    if (k < 0 || k > n) {
      return kZero;
    }
    return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

  std::size_t max_n_;
  std::vector<std::vector<Integer>> first_;
  std::vector<std::vector<Integer>> second_;
};

inline Integer stirling_first(std::int64_t n, std::int64_t k) {
  if (n < 0) {
    throw DomainError("Stirling number with negative n");
  }
  return StirlingTables(static_cast<std::size_t>(n)).first(n, k);
}

inline Integer stirling_second(std::int64_t n, std::int64_t k) {
  if (n < 0) {
    throw DomainError("Stirling number with negative n");
  }
  return StirlingTables(static_cast<std::size_t>(n)).second(n, k);
}

/// S(n,k) = (1/k!) sum_i (-1)^i C(k,i) (k-i)^n, with 0^0 = 1.
inline Integer stirling_second_explicit(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) {
    throw DomainError("Stirling number with negative argument");
  }
  Integer sum = 0;
  for (std::int64_t i = 0; i <= k; ++i) {
    Integer term = binomial(k, i) * ipow(Integer(k - i), static_cast<unsigned>(n));
    sum += (i % 2 == 0) ? term : Integer(-term);
  }
  return exact_divide(sum, factorial(static_cast<unsigned>(k)), "explicit Stirling sum");
}

/// b(q,v) = sum_{p=0}^{v} (-1)^p C(v,p) s(p+1, p-q+1). `tables` needs
/// capacity >= v + 1.
inline Integer b_definition(std::int64_t q, std::int64_t v, const StirlingTables& tables) {
  if (q < 0 || v < 0) {
    throw DomainError("b(q,v) needs nonnegative arguments");
  }
  Integer sum = 0;
  for (std::int64_t p = 0; p <= v; ++p) {
    const Integer& s = tables.first(p + 1, p - q + 1);
    if (s == 0) {
      continue;
    }
    Integer term = binomial(v, p) * s;
    sum += (p % 2 == 0) ? term : Integer(-term);
  }
  return sum;
}

inline Integer b_definition(std::int64_t q, std::int64_t v) {
  if (q < 0 || v < 0) {
    throw DomainError("b(q,v) needs nonnegative arguments");
  }
  return b_definition(q, v, StirlingTables(static_cast<std::size_t>(v + 1)));
}

/// Table of b(q,v) for 0 <= q,v <= capacity, filled from the boundary values
///   b(q,v) = 0 if q > v or q = 0 < v,  b(q,q) = q!
/// and b(q,v) = v b(q-1,v-1) - (v-1) b(q-1,v-2) for q >= 1, v >= 2.
class BTable {
public:
  explicit BTable(std::size_t capacity)
      : capacity_(capacity), values_((capacity + 1) * (capacity + 1), 0) {
    Integer fact = 1;
    for (std::size_t q = 0; q <= capacity; ++q) {
      if (q > 0) {
        fact *= q;
      }
      for (std::size_t v = 0; v <= capacity; ++v) {
        Integer& b = values_[q * (capacity + 1) + v];
        if (q > v || (q == 0 && v > 0)) {
          b = 0;
        } else if (q == v) {
          b = fact;
        } else {
          b = Integer(v) * get(q - 1, v - 1) - Integer(v - 1) * get(q - 1, v - 2);
        }
      }
    }
  }

  [[nodiscard]] std::size_t capacity() const noexcept { return capacity_; }

  /// Zero outside the stored rectangle only where the support rule says so;
  /// asking beyond capacity is a resource error.
  [[nodiscard]] const Integer& at(std::int64_t q, std::int64_t v) const {
    if (q < 0 || v < 0) {
      throw DomainError("b(q,v) needs nonnegative arguments");
    }
    if (static_cast<std::size_t>(q) > capacity_ || static_cast<std::size_t>(v) > capacity_) {
      throw ResourceError("b table capacity " + std::to_string(capacity_) + " exceeded");
    }
    return get(static_cast<std::size_t>(q), static_cast<std::size_t>(v));
  }

private:
  [[nodiscard]] const Integer& get(std::size_t q, std::size_t v) const {
    return values_[q * (capacity_ + 1) + v];
  }

  std::size_t capacity_;
  std::vector<Integer> values_;
};

inline Integer b_recursive(std::int64_t q, std::int64_t v) {
  if (q < 0 || v < 0) {
    throw DomainError("b(q,v) needs nonnegative arguments");
  }
  return BTable(static_cast<std::size_t>(std::max(q, v))).at(q, v);
}

namespace detail {

// Sums prod 1/k_i over chains prev <_2 k <_2 ... ending at `last`, where
// `remaining` interior values are still to be placed.
inline Rational gap2_chain_sum(std::int64_t prev, std::int64_t remaining, std::int64_t last) {
  if (remaining == 0) {
    return last - prev >= 2 ? Rational(1) : Rational(0);
  }
  Rational sum = 0;
  // The remaining - 1 values after k and the final gap need 2 * remaining more.
  for (std::int64_t k = prev + 2; k + 2 * remaining <= last; ++k) {
    sum += gap2_chain_sum(k, remaining - 1, last) / k;
  }
  return sum;
}

} // namespace detail

/// b(q,v) = (-1)^{v-q} v! sum prod_{i=1}^{v-q} 1/k_i over integer chains
/// 0 = k_0, k_{v-q+1} = v + 2 with consecutive gaps of at least two.
/// Zero for v < q. Evaluated with exact rationals.
inline Integer b_explicit(std::int64_t q, std::int64_t v) {
  if (q < 0 || v < 0) {
    throw DomainError("b(q,v) needs nonnegative arguments");
  }
  if (v < q) {
    return 0;
  }
  Rational value = detail::gap2_chain_sum(0, v - q, v + 2) * factorial(static_cast<unsigned>(v));
  if ((v - q) % 2 != 0) {
    value = -value;
  }
  if (boost::multiprecision::denominator(value) != 1) {
    throw InvariantError("explicit b(" + std::to_string(q) + "," + std::to_string(v) +
                         ") is not an integer");
  }
  return boost::multiprecision::numerator(value);
}

} // namespace stopset

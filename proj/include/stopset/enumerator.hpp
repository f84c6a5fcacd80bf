#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stopset/error.hpp"
#include "stopset/exact.hpp"

namespace stopset {

/// Polynomial sum_l c_l x^l with exact coefficients, l = 0..n. Used for the
/// stopping set enumerator S(x), the weight enumerator A(x) and failure
/// profiles.
class Enumerator {
public:
  Enumerator() = default;
  explicit Enumerator(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}

  /// Code length n; the enumerator has n + 1 coefficients.
  [[nodiscard]] std::size_t length() const noexcept {
    return coeffs_.empty() ? 0 : coeffs_.size() - 1;
  }
  [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
  [[nodiscard]] const Integer& operator[](std::size_t l) const { return coeffs_.at(l); }
  [[nodiscard]] const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

  /// Smallest l >= 1 with a nonzero coefficient: the minimum stopping set size
  /// for S(x), the minimum distance for A(x). Absent when every such
  /// coefficient is zero.
  [[nodiscard]] std::optional<std::size_t> min_support() const {
    for (std::size_t l = 1; l < coeffs_.size(); ++l) {
      if (coeffs_[l] != 0) {
        return l;
      }
    }
    return std::nullopt;
  }

  [[nodiscard]] Integer total() const {
    Integer t = 0;
    for (const auto& c : coeffs_) {
      t += c;
    }
    return t;
  }

  friend bool operator==(const Enumerator&, const Enumerator&) = default;

private:
  std::vector<Integer> coeffs_;
};

/// "1 + 10 x^3 + 23 x^4 + ..." listing nonzero terms only.
inline std::string to_polynomial_string(const Enumerator& e) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t l = 0; l < e.size(); ++l) {
    const Integer& c = e[l];
    if (c == 0) {
      continue;
    }
    if (!first) {
      out << (c < 0 ? " - " : " + ");
    } else if (c < 0) {
      out << '-';
    }
    const Integer mag = c < 0 ? Integer(-c) : c;
    if (l == 0) {
      out << mag;
    } else {
      if (mag != 1) {
        out << mag << ' ';
      }
      out << 'x';
      if (l > 1) {
        out << '^' << l;
      }
    }
    first = false;
  }
  if (first) {
    out << '0';
  }
  return out.str();
}

/// {"n": <length>, "coeffs": ["1", "0", ...]}; `upto` truncates the
/// coefficient list but keeps n. `n` overrides the length when `e` itself was
/// computed only up to a prefix.
inline nlohmann::json to_json(const Enumerator& e, std::optional<std::size_t> upto = {},
                              std::optional<std::size_t> n = {}) {
  nlohmann::json coeffs = nlohmann::json::array();
  const std::size_t last = upto ? std::min(*upto, e.length()) : e.length();
  for (std::size_t l = 0; l <= last && l < e.size(); ++l) {
    coeffs.push_back(to_decimal(e[l]));
  }
  return nlohmann::json{{"n", n.value_or(e.length())}, {"coeffs", std::move(coeffs)}};
}

/// Inverse of to_json for a complete (untruncated) coefficient list.
inline Enumerator enumerator_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw FormatError("enumerator JSON needs a \"coeffs\" array");
  }
  std::vector<Integer> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) {
      throw FormatError("enumerator coefficients must be decimal strings");
    }
    coeffs.push_back(parse_decimal(c.get<std::string>()));
  }
  if (j.contains("n") && j["n"].get<std::size_t>() + 1 != coeffs.size()) {
    throw FormatError("enumerator JSON: n does not match coefficient count");
  }
  return Enumerator(std::move(coeffs));
}

/// CSV with header "l,<column>" and one row per coefficient.
inline void write_csv(std::ostream& out, const Enumerator& e, const std::string& column,
                      std::optional<std::size_t> upto = {}) {
  out << "l," << column << '\n';
  const std::size_t last = upto ? std::min(*upto, e.length()) : e.length();
  for (std::size_t l = 0; l <= last && l < e.size(); ++l) {
    out << l << ',' << e[l] << '\n';
  }
}

} // namespace stopset

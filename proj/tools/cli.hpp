#pragma once

// Command implementations for the `stopset` tool. Each command writes its
// result to `out`, diagnostics to `err`, and returns a process exit code.

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stopset/stopset.hpp"

namespace stopset::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kInputFormat = 3,
  kResourceLimit = 4,
};

enum class OutputFormat { Text, Json, Csv };

/// Brute-force column cap, optionally lowered by STOPSET_MAX_BRUTE_N.
inline std::size_t brute_force_cap() {
  std::size_t cap = BruteForceOptions{}.max_n;
  if (const char* env = std::getenv("STOPSET_MAX_BRUTE_N")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v < cap) {
      cap = v;
    }
  }
  return cap;
}

inline void emit_enumerator(std::ostream& out, const Enumerator& e, OutputFormat format,
                            const std::string& column, std::optional<std::size_t> upto = {},
                            std::optional<std::size_t> n = {}) {
  switch (format) {
  case OutputFormat::Json:
    out << to_json(e, upto, n).dump() << '\n';
    break;
  case OutputFormat::Csv:
    write_csv(out, e, column, upto);
    break;
  case OutputFormat::Text: {
    if (upto && *upto < e.length()) {
      std::vector<Integer> head(e.coeffs().begin(),
                                e.coeffs().begin() + static_cast<std::ptrdiff_t>(*upto + 1));
      out << to_polynomial_string(Enumerator(std::move(head))) << '\n';
    } else {
      out << to_polynomial_string(e) << '\n';
    }
    break;
  }
  }
}

struct HammingArgs {
  int m = 3;
  std::string method = "theorem2";
  std::optional<std::int64_t> upto;
  OutputFormat format = OutputFormat::Text;
  unsigned workers = 0;
};

inline int cmd_hamming(const HammingArgs& a, std::ostream& out, std::ostream& err) {
  if (a.m < 2) {
    err << "error: Hamming parameter m must be at least 2\n";
    return kUsage;
  }
  if (a.upto && *a.upto < 0) {
    err << "error: --upto must be nonnegative\n";
    return kUsage;
  }
  Enumerator e;
  if (a.method == "theorem2") {
    e = hamming_stopping_enumerator(a.m, HammingMethod::Theorem2, a.upto);
  } else if (a.method == "doublesum") {
    e = hamming_stopping_enumerator(a.m, HammingMethod::DoubleSum, a.upto);
  } else if (a.method == "inclusion-exclusion") {
    if (a.m > 20) {
      err << "error: inclusion-exclusion supports m <= 20\n";
      return kResourceLimit;
    }
    e = theorem1_stopping(hamming_parity_matrix(a.m));
  } else if (a.method == "brute") {
    if (a.m > 5) {
      err << "error: brute force supports m <= 5\n";
      return kResourceLimit;
    }
    if (a.m == 5) {
      err << "warning: brute force over 2^31 column subsets takes minutes\n";
    }
    e = brute_force_stopping(hamming_parity_matrix(a.m), {brute_force_cap(), a.workers});
  } else {
    err << "error: unknown method '" << a.method << "'\n";
    return kUsage;
  }
  std::optional<std::size_t> upto;
  if (a.upto) {
    upto = static_cast<std::size_t>(*a.upto);
  }
  const std::size_t n = (std::size_t{1} << a.m) - 1;
  emit_enumerator(out, e, a.format, "S_l", upto, n);
  return kOk;
}

struct EnumerateArgs {
  std::string matrix_file;
  std::string kind = "stopping";
  std::string method = "brute";
  OutputFormat format = OutputFormat::Text;
  unsigned workers = 0;
};

inline int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  const BitMatrix h = read_matrix_file(a.matrix_file);
  const BruteForceOptions brute{brute_force_cap(), a.workers};
  Enumerator e;
  if (a.kind == "stopping") {
    if (a.method == "brute") {
      e = brute_force_stopping(h, brute);
    } else if (a.method == "inclusion-exclusion") {
      e = theorem1_stopping(h);
    } else {
      err << "error: unknown method '" << a.method << "'\n";
      return kUsage;
    }
  } else if (a.kind == "weight") {
    if (a.method != "brute") {
      err << "error: the weight enumerator is only available by brute force\n";
      return kUsage;
    }
    e = brute_force_weight(h, brute);
  } else {
    err << "error: unknown kind '" << a.kind << "'\n";
    return kUsage;
  }
  emit_enumerator(out, e, a.format, a.kind == "weight" ? "A_l" : "S_l");
  return kOk;
}

struct BTableArgs {
  int qmax = 7;
  int vmax = 7;
  OutputFormat format = OutputFormat::Text;
};

inline int cmd_btable(const BTableArgs& a, std::ostream& out, std::ostream& err) {
  if (a.qmax < 0 || a.vmax < 0 || a.qmax > 64 || a.vmax > 64) {
    err << "error: --qmax and --vmax must lie in 0..64\n";
    return kUsage;
  }
  const BTable b(static_cast<std::size_t>(std::max(a.qmax, a.vmax)));
  switch (a.format) {
  case OutputFormat::Json: {
    nlohmann::json rows = nlohmann::json::array();
    for (int q = 0; q <= a.qmax; ++q) {
      nlohmann::json row = nlohmann::json::array();
      for (int v = 0; v <= a.vmax; ++v) {
        row.push_back(to_decimal(b.at(q, v)));
      }
      rows.push_back(std::move(row));
    }
    out << nlohmann::json{{"qmax", a.qmax}, {"vmax", a.vmax}, {"b", std::move(rows)}}.dump()
        << '\n';
    break;
  }
  case OutputFormat::Csv:
    out << "q";
    for (int v = 0; v <= a.vmax; ++v) {
      out << ',' << v;
    }
    out << '\n';
    for (int q = 0; q <= a.qmax; ++q) {
      out << q;
      for (int v = 0; v <= a.vmax; ++v) {
        out << ',' << b.at(q, v);
      }
      out << '\n';
    }
    break;
  case OutputFormat::Text: {
    std::size_t width = 3;
    for (int q = 0; q <= a.qmax; ++q) {
      for (int v = 0; v <= a.vmax; ++v) {
        width = std::max(width, to_decimal(b.at(q, v)).size() + 1);
      }
    }
    const auto w = static_cast<int>(width);
    out << std::setw(w) << "q\\v";
    for (int v = 0; v <= a.vmax; ++v) {
      out << std::setw(w) << v;
    }
    out << '\n';
    for (int q = 0; q <= a.qmax; ++q) {
      out << std::setw(w) << q;
      for (int v = 0; v <= a.vmax; ++v) {
        out << std::setw(w) << to_decimal(b.at(q, v));
      }
      out << '\n';
    }
    break;
  }
  }
  return kOk;
}

struct PeelArgs {
  std::string matrix_file;
  std::string erase;
  OutputFormat format = OutputFormat::Text;
};

inline int cmd_peel(const PeelArgs& a, std::ostream& out, std::ostream& err) {
  if (a.format == OutputFormat::Csv) {
    err << "error: peel supports text and json output\n";
    return kUsage;
  }
  const BitMatrix h = read_matrix_file(a.matrix_file);
  const DecodeOutcome outcome = peel(h, parse_index_list(a.erase));
  if (a.format == OutputFormat::Json) {
    out << nlohmann::json{{"status", to_string(outcome.status)},
                          {"residual", outcome.residual},
                          {"steps", outcome.steps}}
               .dump()
        << '\n';
  } else {
    out << (outcome.status == DecodeStatus::Recovered ? "Recovered" : "Stuck") << " {";
    for (std::size_t k = 0; k < outcome.residual.size(); ++k) {
      out << (k ? "," : "") << outcome.residual[k];
    }
    out << "} steps=" << outcome.steps << '\n';
  }
  return kOk;
}

struct BecArgs {
  std::string matrix_file;
  double epsilon = 0.0;
  bool exact = false;
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  OutputFormat format = OutputFormat::Json;
};

inline int cmd_bec(const BecArgs& a, std::ostream& out, std::ostream& err) {
  if (!a.exact && !a.trials) {
    err << "error: bec needs --exact and/or --trials\n";
    return kUsage;
  }
  if (a.format == OutputFormat::Csv) {
    err << "error: bec supports text and json output\n";
    return kUsage;
  }
  const BitMatrix h = read_matrix_file(a.matrix_file);
  nlohmann::json j{{"epsilon", a.epsilon}};
  if (a.exact) {
    j["exact"] = exact_failure_probability(exhaustive_failure_profile(h), a.epsilon);
  }
  if (a.trials) {
    const MonteCarloEstimate est =
        monte_carlo_failure(h, a.epsilon, *a.trials, a.seed, {a.workers, MonteCarloOptions{}.block_size});
    j["estimate"] = est.estimate;
    j["stderr"] = est.standard_error;
    j["trials"] = est.trials;
    j["seed"] = a.seed;
  }
  if (a.format == OutputFormat::Json) {
    out << j.dump() << '\n';
  } else {
    for (const auto& [key, value] : j.items()) {
      out << key << ' ' << value.dump() << '\n';
    }
  }
  return kOk;
}

/// Runs `body`, mapping library exceptions to exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kInputFormat;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

} // namespace stopset::cli

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vasun {

using Symbol = std::string;
using Word = std::vector<Symbol>;

/// One symbol per character: word("abab") == {"a","b","a","b"}.
Word word(std::string_view letters);

/// Concatenated when every symbol is a single character, space separated
/// otherwise; the empty word prints as "ε".
std::string to_string(const Word& w);

/// Length-lexicographic order on words.
struct LengthLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Malformed objects: unknown ids, mismatched alphabets or dimensions.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured search or size budget was exceeded. Never a verdict.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Work counters filled in by decompose when Limits::usage is set.
struct Usage {
  std::size_t mgts_processed = 0;
  std::size_t refinements = 0;
  std::size_t perfect = 0;
};

/// Explicit budgets for every search in the library. Defaults are sized so the
/// bundled fixtures finish in seconds.
struct Limits {
  std::int64_t max_token = 48;           // per-place cap on concrete markings in searches
  std::size_t max_states = 4'000'000;    // explored states in breadth-first searches
  std::size_t max_worklist = 20'000;     // MGTS processed by decompose
  std::size_t max_basis = 50'000;        // Hilbert basis / frontier size in the solver
  std::size_t max_chains = 20'000;       // MGTS emitted by a single refinement
  std::size_t max_km_nodes = 20'000;     // coverability graph nodes
  Usage* usage = nullptr;                // accumulates work counters when set
};

}  // namespace vasun

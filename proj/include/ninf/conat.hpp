#ifndef NINF_CONAT_HPP
#define NINF_CONAT_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ninf {

using Index = std::uint64_t;

/// Thrown when the process-wide step budget is exhausted.
class FuelExhausted : public std::runtime_error {
public:
  explicit FuelExhausted(std::uint64_t limit);
  std::uint64_t limit() const noexcept { return limit_; }

private:
  std::uint64_t limit_;
};

// Step budget
//------------------------------------------------------------------------------
// The budget counts generator evaluations across every CoNat in the process.
// It is unlimited unless a ScopedStepBudget is alive; a scope allows `limit`
// further evaluations counted from its construction.

std::uint64_t steps_used() noexcept;
std::optional<std::uint64_t> step_limit() noexcept;

class ScopedStepBudget {
public:
  explicit ScopedStepBudget(std::uint64_t limit);
  ~ScopedStepBudget();
  ScopedStepBudget(const ScopedStepBudget&) = delete;
  ScopedStepBudget& operator=(const ScopedStepBudget&) = delete;

private:
  std::uint64_t saved_limit_;
};

/// Per-thread observation counters. `bit_reads` counts bit_at calls,
/// `max_index` is the largest index passed to bit_at.
struct ReadCounters {
  std::uint64_t bit_reads = 0;
  std::optional<Index> max_index;
};

const ReadCounters& read_counters() noexcept;
void reset_read_counters() noexcept;

// CoNat
//------------------------------------------------------------------------------

/// An element of N-infinity: a lazily computed, memoized, non-increasing
/// infinite bit sequence.
///
/// Copies share the underlying memo. Values are safe to read from several
/// threads at once; the memo is two monotone watermarks published with
/// atomic max/min, so racing writers can only agree.
class CoNat {
public:
  using Generator = std::function<bool(Index)>;

  /// finite(n) = 1^n 0^omega.
  static CoNat finite(Index n);
  /// The all-ones sequence.
  static CoNat omega();
  /// Prepends a 1.
  static CoNat succ(const CoNat& p);
  /// Normalizes an arbitrary bit stream by running AND: bit n is
  /// f(0) & ... & f(n).
  static CoNat from_fn(Generator f);

  bool bit_at(Index n) const;

private:
  friend CoNat tail(const CoNat& p);
  struct Impl;
  static CoNat monotone(Generator f);
  explicit CoNat(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

inline CoNat finite(Index n) { return CoNat::finite(n); }
inline CoNat omega() { return CoNat::omega(); }
inline CoNat succ(const CoNat& p) { return CoNat::succ(p); }
inline CoNat from_fn(CoNat::Generator f) { return CoNat::from_fn(std::move(f)); }
inline bool bit_at(const CoNat& p, Index n) { return p.bit_at(n); }

/// Drops the leading bit: tail(succ(p)) agrees with p, tail(finite(0)) is
/// finite(0).
CoNat tail(const CoNat& p);

/// Prefix equality on the first m bits. Extensional equality is undecidable.
bool eq_upto(const CoNat& p, const CoNat& q, Index m);

std::vector<bool> prefix_bits(const CoNat& p, Index m);

/// ASCII rendering of the first m bits, index 0 first: finite(3) at m = 5
/// renders as "11100".
std::string prefix_string(const CoNat& p, Index m);

// Classification
//------------------------------------------------------------------------------

struct Finite {
  Index n;
  bool operator==(const Finite&) const = default;
};

struct AtLeast {
  Index fuel;
  bool operator==(const AtLeast&) const = default;
};

using Classification = std::variant<Finite, AtLeast>;

/// Finite(n) if the first 0 occurs at some n < fuel, otherwise AtLeast(fuel).
/// Deciding "finite or omega" outright is LPO, so the answer is bounded.
/// Throws std::invalid_argument when fuel is 0.
Classification classify(const CoNat& p, Index fuel);

std::string to_string(const Classification& c);

} // namespace ninf

#endif // NINF_CONAT_HPP

#ifndef NINF_SEARCH_HPP
#define NINF_SEARCH_HPP

#include "ninf/conat.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>

namespace ninf {

/// A decidable predicate on N-infinity.
///
/// The evaluator must be pure and must inspect only finitely many bits of
/// its argument. When a modulus m is declared, the evaluator promises never
/// to read a bit at index >= m.
class Predicate {
public:
  using Fn = std::function<bool(const CoNat&)>;

  explicit Predicate(Fn fn, std::optional<Index> modulus = std::nullopt)
      : fn_(std::move(fn)), modulus_(modulus) {}

  bool operator()(const CoNat& p) const { return fn_(p); }
  const std::optional<Index>& declared_modulus() const noexcept { return modulus_; }

private:
  Fn fn_;
  std::optional<Index> modulus_;
};

struct HoldsEverywhere {};

struct Counterexample {
  CoNat witness;
  Classification classification;
};

using SearchOutcome = std::variant<HoldsEverywhere, Counterexample>;

/// Work done by one search. `predicate_evals` counts calls of the
/// predicate, `bit_reads` counts bit_at calls on the calling thread.
struct SearchStats {
  std::uint64_t predicate_evals = 0;
  std::uint64_t bit_reads = 0;
};

/// The selection functional: bit n of epsilon(q) is 1 iff q(finite(k)) holds
/// for every k <= n. Nothing is evaluated until a bit is observed, and each
/// q(finite(k)) is evaluated at most once.
CoNat epsilon(const Predicate& q);

/// q holds on all of N-infinity iff it holds at epsilon(q).
bool forall(const Predicate& q, SearchStats* stats = nullptr);

/// Default counterexample classification fuel: 2 * modulus when declared
/// (at least 1), else 1024.
Index default_classification_fuel(const Predicate& q);

SearchOutcome find_counterexample(const Predicate& q, std::optional<Index> classification_fuel = std::nullopt,
                                  SearchStats* stats = nullptr);

/// Omniscience of a finite, fully enumerated domain.
template <class T, class Pred>
bool finite_forall(std::span<const T> domain, Pred&& pred) {
  for (const T& v : domain)
    if (!pred(v))
      return false;
  return true;
}

/// True iff q(omega) and q(finite(n)) for all n <= m. Once m reaches q's
/// modulus this agrees with forall(q). Throws std::invalid_argument if m is
/// below the declared modulus.
bool check_density(const Predicate& q, Index m);

} // namespace ninf

#endif // NINF_SEARCH_HPP

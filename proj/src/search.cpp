#include "ninf/search.hpp"

#include <memory>

namespace ninf {

namespace {

struct Counted {
  Predicate q;
  std::shared_ptr<std::uint64_t> evals = std::make_shared<std::uint64_t>(0);

  bool operator()(const CoNat& p) const {
    ++*evals;
    return q(p);
  }
};

// Bit n is q(finite(0)) & ... & q(finite(n)); the running AND inside from_fn
// is the recursion, and the CoNat memo is the per-search cache of q(finite(k)).
template <class Q>
CoNat select(Q q) {
  return from_fn([q = std::move(q)](Index k) { return q(finite(k)); });
}

struct Run {
  CoNat witness;
  bool holds;
};

Run run(const Predicate& q, SearchStats* stats) {
  Counted counted{q};
  const std::uint64_t reads_before = read_counters().bit_reads;
  CoNat w = select(counted);
  const bool holds = counted(w);
  if (stats) {
    stats->predicate_evals = *counted.evals;
    stats->bit_reads = read_counters().bit_reads - reads_before;
  }
  return {std::move(w), holds};
}

} // namespace

CoNat epsilon(const Predicate& q) { return select(q); }

bool forall(const Predicate& q, SearchStats* stats) { return run(q, stats).holds; }

Index default_classification_fuel(const Predicate& q) {
  if (const auto& m = q.declared_modulus())
    return *m == 0 ? 1 : 2 * *m;
  return 1024;
}

SearchOutcome find_counterexample(const Predicate& q, std::optional<Index> classification_fuel,
                                  SearchStats* stats) {
  Run r = run(q, stats);
  if (r.holds)
    return HoldsEverywhere{};
  const Index fuel = classification_fuel.value_or(default_classification_fuel(q));
  Classification c = classify(r.witness, fuel);
  return Counterexample{std::move(r.witness), c};
}

bool check_density(const Predicate& q, Index m) {
  if (const auto& mod = q.declared_modulus(); mod && m < *mod)
    throw std::invalid_argument("check_density: bound " + std::to_string(m) + " is below the declared modulus " +
                                std::to_string(*mod));
  if (!q(omega()))
    return false;
  for (Index n = 0; n <= m; ++n)
    if (!q(finite(n)))
      return false;
  return true;
}

} // namespace ninf

#ifndef NINF_ORACLE_HPP
#define NINF_ORACLE_HPP

#include "ninf/search.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

// Brute-force ground truth for predicates with a known modulus. None of this
// goes through epsilon; it only evaluates the predicate on finite(0..m).
namespace ninf::oracle {

/// finite(0), ..., finite(m). Every element of N-infinity agrees on its
/// first m bits with exactly one member; omega is represented by finite(m).
std::vector<CoNat> representatives(Index m);

/// q(finite(n)) for all n <= m. Equals universal quantification over
/// N-infinity whenever q reads no bit at index >= m.
bool brute_force_forall(const Predicate& q, Index m);

/// Least n <= m with q(finite(n)) false.
std::optional<Index> least_failing(const Predicate& q, Index m);

/// Batch kernels: out[i] = brute_force_forall(qs[i], moduli[i]).
/// The serial version is the reference; the parallel version splits the
/// batch across OpenMP threads and must agree with it element for element.
std::vector<std::uint8_t> brute_force_forall_batch(std::span<const Predicate> qs, std::span<const Index> moduli);
std::vector<std::uint8_t> brute_force_forall_batch_parallel(std::span<const Predicate> qs,
                                                            std::span<const Index> moduli);

/// Same shape, deciding each predicate with epsilon. Used to compare the two
/// routes at scale.
std::vector<std::uint8_t> search_forall_batch(std::span<const Predicate> qs);
std::vector<std::uint8_t> search_forall_batch_parallel(std::span<const Predicate> qs);

} // namespace ninf::oracle

#endif // NINF_ORACLE_HPP

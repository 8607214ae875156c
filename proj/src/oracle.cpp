#include "ninf/oracle.hpp"

#include <exception>
#include <stdexcept>

namespace ninf::oracle {

std::vector<CoNat> representatives(Index m) {
  std::vector<CoNat> reps;
  reps.reserve(m + 1);
  for (Index n = 0; n <= m; ++n)
    reps.push_back(finite(n));
  return reps;
}

bool brute_force_forall(const Predicate& q, Index m) { return !least_failing(q, m).has_value(); }

std::optional<Index> least_failing(const Predicate& q, Index m) {
  for (Index n = 0; n <= m; ++n)
    if (!q(finite(n)))
      return n;
  return std::nullopt;
}

namespace {

void check_sizes(std::span<const Predicate> qs, std::span<const Index> moduli) {
  if (qs.size() != moduli.size())
    throw std::invalid_argument("brute_force_forall_batch: predicate and modulus counts differ");
}

// Runs body(i) for every i in [0, n) across OpenMP threads. The first
// exception thrown by any iteration is rethrown on the calling thread.
template <class Body>
void parallel_for(std::int64_t n, Body&& body) {
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(ninf_oracle_error)
      if (!error)
        error = std::current_exception();
    }
  }
  if (error)
    std::rethrow_exception(error);
}

} // namespace

std::vector<std::uint8_t> brute_force_forall_batch(std::span<const Predicate> qs, std::span<const Index> moduli) {
  check_sizes(qs, moduli);
  std::vector<std::uint8_t> out(qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i)
    out[i] = brute_force_forall(qs[i], moduli[i]);
  return out;
}

std::vector<std::uint8_t> brute_force_forall_batch_parallel(std::span<const Predicate> qs,
                                                            std::span<const Index> moduli) {
  check_sizes(qs, moduli);
  std::vector<std::uint8_t> out(qs.size());
  parallel_for(static_cast<std::int64_t>(qs.size()),
               [&](std::size_t i) { out[i] = brute_force_forall(qs[i], moduli[i]); });
  return out;
}

std::vector<std::uint8_t> search_forall_batch(std::span<const Predicate> qs) {
  std::vector<std::uint8_t> out(qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i)
    out[i] = forall(qs[i]);
  return out;
}

std::vector<std::uint8_t> search_forall_batch_parallel(std::span<const Predicate> qs) {
  std::vector<std::uint8_t> out(qs.size());
  parallel_for(static_cast<std::int64_t>(qs.size()), [&](std::size_t i) { out[i] = forall(qs[i]); });
  return out;
}

} // namespace ninf::oracle

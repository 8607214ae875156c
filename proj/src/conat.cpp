#include "ninf/conat.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

namespace ninf {

namespace {

constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

std::atomic<std::uint64_t> g_steps_used{0};
std::atomic<std::uint64_t> g_step_limit{kUnlimited};

thread_local ReadCounters t_counters;

void charge_step() {
  const std::uint64_t used = g_steps_used.fetch_add(1, std::memory_order_relaxed) + 1;
  const std::uint64_t limit = g_step_limit.load(std::memory_order_relaxed);
  if (used > limit)
    throw FuelExhausted(limit);
}

void atomic_max(std::atomic<Index>& slot, Index value) {
  Index cur = slot.load(std::memory_order_acquire);
  while (cur < value && !slot.compare_exchange_weak(cur, value, std::memory_order_acq_rel))
    ;
}

void atomic_min(std::atomic<Index>& slot, Index value) {
  Index cur = slot.load(std::memory_order_acquire);
  while (cur > value && !slot.compare_exchange_weak(cur, value, std::memory_order_acq_rel))
    ;
}

} // namespace

FuelExhausted::FuelExhausted(std::uint64_t limit)
    : std::runtime_error("step budget of " + std::to_string(limit) + " generator evaluations exhausted"),
      limit_(limit) {}

std::uint64_t steps_used() noexcept { return g_steps_used.load(std::memory_order_relaxed); }

std::optional<std::uint64_t> step_limit() noexcept {
  const std::uint64_t limit = g_step_limit.load(std::memory_order_relaxed);
  if (limit == kUnlimited)
    return std::nullopt;
  return limit;
}

ScopedStepBudget::ScopedStepBudget(std::uint64_t limit)
    : saved_limit_(g_step_limit.load(std::memory_order_relaxed)) {
  const std::uint64_t used = steps_used();
  const std::uint64_t absolute = limit > kUnlimited - used ? kUnlimited - 1 : used + limit;
  // An enclosing scope's tighter limit still applies.
  g_step_limit.store(std::min(absolute, saved_limit_), std::memory_order_relaxed);
}

ScopedStepBudget::~ScopedStepBudget() { g_step_limit.store(saved_limit_, std::memory_order_relaxed); }

const ReadCounters& read_counters() noexcept { return t_counters; }

void reset_read_counters() noexcept { t_counters = ReadCounters{}; }

// CoNat
//------------------------------------------------------------------------------

// Memo invariant: every bit below `ones_below` is 1, and bit `zero_at` is 0
// (hence so is every later bit). Both only move towards each other.
struct CoNat::Impl {
  Generator generator;
  // Direct generators are already non-increasing and may be sampled at any
  // index; the rest go through the running AND from the watermark.
  bool direct = false;
  std::atomic<Index> ones_below{0};
  std::atomic<Index> zero_at{std::numeric_limits<Index>::max()};

  bool evaluate(Index k) const {
    charge_step();
    return generator(k);
  }
};

CoNat CoNat::monotone(Generator f) {
  auto impl = std::make_shared<Impl>();
  impl->generator = std::move(f);
  impl->direct = true;
  return CoNat(std::move(impl));
}

CoNat CoNat::finite(Index n) {
  auto impl = std::make_shared<Impl>();
  // The value is fully known up front; no generator evaluation is ever needed.
  impl->generator = [n](Index m) { return m < n; };
  impl->direct = true;
  impl->ones_below.store(n);
  impl->zero_at.store(n);
  return CoNat(std::move(impl));
}

CoNat CoNat::omega() {
  auto impl = std::make_shared<Impl>();
  impl->generator = [](Index) { return true; };
  impl->direct = true;
  impl->ones_below.store(std::numeric_limits<Index>::max());
  return CoNat(std::move(impl));
}

CoNat CoNat::succ(const CoNat& p) {
  return monotone([p](Index n) { return n == 0 ? true : p.bit_at(n - 1); });
}

CoNat CoNat::from_fn(Generator f) {
  auto impl = std::make_shared<Impl>();
  impl->generator = std::move(f);
  return CoNat(std::move(impl));
}

bool CoNat::bit_at(Index n) const {
  ++t_counters.bit_reads;
  if (!t_counters.max_index || *t_counters.max_index < n)
    t_counters.max_index = n;

  Impl& m = *impl_;
  if (n < m.ones_below.load(std::memory_order_acquire))
    return true;
  if (n >= m.zero_at.load(std::memory_order_acquire))
    return false;

  if (m.direct) {
    const bool b = m.evaluate(n);
    if (b)
      atomic_max(m.ones_below, n + 1);
    else
      atomic_min(m.zero_at, n);
    return b;
  }

  for (Index k = m.ones_below.load(std::memory_order_acquire); k <= n; ++k) {
    if (k >= m.zero_at.load(std::memory_order_acquire))
      return false;
    if (!m.evaluate(k)) {
      atomic_min(m.zero_at, k);
      return false;
    }
    atomic_max(m.ones_below, k + 1);
  }
  return true;
}

CoNat tail(const CoNat& p) {
  return CoNat::monotone([p](Index n) { return p.bit_at(n + 1); });
}

bool eq_upto(const CoNat& p, const CoNat& q, Index m) {
  for (Index k = 0; k < m; ++k)
    if (p.bit_at(k) != q.bit_at(k))
      return false;
  return true;
}

std::vector<bool> prefix_bits(const CoNat& p, Index m) {
  std::vector<bool> bits;
  bits.reserve(m);
  for (Index k = 0; k < m; ++k)
    bits.push_back(p.bit_at(k));
  return bits;
}

std::string prefix_string(const CoNat& p, Index m) {
  std::string s;
  s.reserve(m);
  for (Index k = 0; k < m; ++k)
    s.push_back(p.bit_at(k) ? '1' : '0');
  return s;
}

Classification classify(const CoNat& p, Index fuel) {
  if (fuel == 0)
    throw std::invalid_argument("classify: fuel must be at least 1");
  if (p.bit_at(fuel - 1))
    return AtLeast{fuel};
  // Bits are non-increasing: binary search for the first 0 in [0, fuel-1].
  Index lo = 0, hi = fuel - 1;
  while (lo < hi) {
    const Index mid = lo + (hi - lo) / 2;
    if (p.bit_at(mid))
      lo = mid + 1;
    else
      hi = mid;
  }
  return Finite{lo};
}

std::string to_string(const Classification& c) {
  if (const auto* f = std::get_if<Finite>(&c))
    return "finite " + std::to_string(f->n);
  return "at least " + std::to_string(std::get<AtLeast>(c).fuel);
}

} // namespace ninf

#ifndef NINF_TABOO_HPP
#define NINF_TABOO_HPP

#include "ninf/conat.hpp"
#include "ninf/search.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

// Decision gadgets behind "Cantor-Bernstein implies excluded middle".
// A proposition is modelled by the left summand of A + B: it holds exactly
// when some map can reach inl.
namespace ninf::taboo {

struct Inl {
  bool operator==(const Inl&) const = default;
};

template <class B>
struct Inr {
  B value;
};

template <class B>
bool operator==(const Inr<B>& a, const Inr<B>& b) {
  return a.value == b.value;
}

template <class B>
using Sum = std::variant<Inl, Inr<B>>;

using SumElem = Sum<CoNat>;
using NatSum = Sum<Index>;

template <class B>
bool is_left(const Sum<B>& s) {
  return std::holds_alternative<Inl>(s);
}

/// x |-> inr(x).
SumElem f_inject(const CoNat& x);

/// inl |-> finite(0), inr(x) |-> succ(x). Images are told apart by bit 0.
CoNat g_embed(const SumElem& s);

/// The same pair of injections over the naturals: n |-> inr(n), and
/// inl |-> 0, inr(n) |-> n + 1.
NatSum nat_inject(Index n);
Index nat_embed(const NatSum& s);

/// Same variant, and Right payloads agree on their first m bits.
bool sum_eq_upto(const SumElem& a, const SumElem& b, Index m);

/// With y = h(x): f(x) = y or x = g(y).
template <class X, class H, class F, class G, class EqX = std::equal_to<>, class EqY = std::equal_to<>>
bool cbbb_check(H&& h, F&& f, G&& g, const X& x, EqX eq_x = {}, EqY eq_y = {}) {
  const auto y = h(x);
  return eq_y(f(x), y) || eq_x(x, g(y));
}

/// cbbb_check on N-infinity, where both equalities are prefix equalities of
/// length m.
template <class H, class F, class G>
bool cbbb_check_upto(H&& h, F&& f, G&& g, const CoNat& x, Index m) {
  return cbbb_check(
      std::forward<H>(h), std::forward<F>(f), std::forward<G>(g), x,
      [m](const CoNat& a, const CoNat& b) { return eq_upto(a, b, m); },
      [m](const SumElem& a, const SumElem& b) { return sum_eq_upto(a, b, m); });
}

struct Inhabited {
  CoNat witness;
};

struct Empty {};

using Decision = std::variant<Inhabited, Empty>;

using SumMap = std::function<SumElem(const CoNat&)>;

/// Decides whether h reaches inl, by searching N-infinity for a zero of
/// x |-> (h(x) is inr). h must be pure and continuous.
///
/// Inhabited(w) always satisfies is_left(h(w)). Empty means no point maps to
/// inl; it means the left summand is empty only if h is surjective, which is
/// the caller's contract and is not checked.
Decision sur_decides(const SumMap& h, SearchStats* stats = nullptr);

/// Search on the naturals, for contrast: the first n < fuel with p(n) false,
/// or nullopt when p(0..fuel-1) all hold. nullopt is "unknown", not "holds".
std::optional<Index> bounded_lpo(const std::function<bool(Index)>& p, Index fuel);

// Demo maps for the decide-sum command.
//------------------------------------------------------------------------------

/// Names of the shipped maps: "all-right", "left-at-zero", "left-at-4bar".
const std::vector<std::string>& demo_map_names();
std::optional<SumMap> demo_map(std::string_view name);

} // namespace ninf::taboo

#endif // NINF_TABOO_HPP

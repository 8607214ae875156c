#include "ninf/taboo.hpp"

namespace ninf::taboo {

SumElem f_inject(const CoNat& x) { return Inr<CoNat>{x}; }

CoNat g_embed(const SumElem& s) {
  if (is_left(s))
    return finite(0);
  return succ(std::get<Inr<CoNat>>(s).value);
}

NatSum nat_inject(Index n) { return Inr<Index>{n}; }

Index nat_embed(const NatSum& s) {
  if (is_left(s))
    return 0;
  return std::get<Inr<Index>>(s).value + 1;
}

bool sum_eq_upto(const SumElem& a, const SumElem& b, Index m) {
  if (a.index() != b.index())
    return false;
  if (is_left(a))
    return true;
  return eq_upto(std::get<Inr<CoNat>>(a).value, std::get<Inr<CoNat>>(b).value, m);
}

Decision sur_decides(const SumMap& h, SearchStats* stats) {
  const Predicate reaches_right([h](const CoNat& x) { return !is_left(h(x)); });
  SearchOutcome outcome = find_counterexample(reaches_right, std::nullopt, stats);
  if (auto* c = std::get_if<Counterexample>(&outcome))
    return Inhabited{std::move(c->witness)};
  return Empty{};
}

std::optional<Index> bounded_lpo(const std::function<bool(Index)>& p, Index fuel) {
  for (Index n = 0; n < fuel; ++n)
    if (!p(n))
      return n;
  return std::nullopt;
}

const std::vector<std::string>& demo_map_names() {
  static const std::vector<std::string> names{"all-right", "left-at-zero", "left-at-4bar"};
  return names;
}

std::optional<SumMap> demo_map(std::string_view name) {
  if (name == "all-right")
    return SumMap([](const CoNat& p) -> SumElem { return Inr<CoNat>{p}; });
  // The inverse of g_embed: 0 goes left, succ(x) goes to inr(x).
  if (name == "left-at-zero")
    return SumMap([](const CoNat& p) -> SumElem {
      if (!p.bit_at(0))
        return Inl{};
      return Inr<CoNat>{tail(p)};
    });
  if (name == "left-at-4bar")
    return SumMap([](const CoNat& p) -> SumElem {
      if (p.bit_at(3) && !p.bit_at(4))
        return Inl{};
      return Inr<CoNat>{p};
    });
  return std::nullopt;
}

} // namespace ninf::taboo

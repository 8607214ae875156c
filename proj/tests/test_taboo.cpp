#include "ninf/taboo.hpp"

#include "ninf/oracle.hpp"
#include "support/generators.hpp"

#include <doctest.h>

namespace ninf {
using namespace taboo;
using ninf::testing::Rng;

namespace {

const CoNat& right_value(const SumElem& s) { return std::get<Inr<CoNat>>(s).value; }

} // namespace

TEST_CASE("f_inject") {
  const SumElem a = f_inject(finite(0));
  REQUIRE_FALSE(is_left(a));
  CHECK(eq_upto(right_value(a), finite(0), 32));
  CHECK(eq_upto(right_value(f_inject(omega())), omega(), 32));
  CHECK_FALSE(sum_eq_upto(f_inject(finite(2)), f_inject(finite(3)), 4));
}

TEST_CASE("g_embed") {
  CHECK(eq_upto(g_embed(Inl{}), finite(0), 32));
  CHECK(eq_upto(g_embed(Inr<CoNat>{finite(1)}), finite(2), 32));
  Rng rng(61);
  for (int i = 0; i < 200; ++i)
    CHECK(bit_at(g_embed(Inr<CoNat>{ninf::testing::random_conat(rng)}), 0));
  CHECK_FALSE(bit_at(g_embed(Inl{}), 0));
}

TEST_CASE("g_embed is injective up to prefixes") {
  Rng rng(67);
  auto random_sum = [&]() -> SumElem {
    if (std::bernoulli_distribution(0.2)(rng))
      return Inl{};
    return Inr<CoNat>{ninf::testing::random_conat(rng)};
  };
  for (int i = 0; i < 500; ++i) {
    const SumElem s = random_sum();
    const SumElem t = random_sum();
    const Index m = std::uniform_int_distribution<Index>(0, 40)(rng);
    if (eq_upto(g_embed(s), g_embed(t), m + 1)) {
      CHECK(s.index() == t.index());
      if (!is_left(s))
        CHECK(eq_upto(right_value(s), right_value(t), m));
    }
  }
}

TEST_CASE("sur_decides") {
  SUBCASE("all right") {
    CHECK(std::holds_alternative<Empty>(sur_decides(*demo_map("all-right"))));
  }
  SUBCASE("left at zero") {
    const Decision d = sur_decides(*demo_map("left-at-zero"));
    REQUIRE(std::holds_alternative<Inhabited>(d));
    const CoNat& w = std::get<Inhabited>(d).witness;
    CHECK(eq_upto(w, finite(0), 1));
    CHECK(is_left((*demo_map("left-at-zero"))(w)));
  }
  SUBCASE("left at 4bar") {
    // Brute force first: among finite(0..5) only finite(4) maps left.
    const SumMap h = *demo_map("left-at-4bar");
    const Predicate right([h](const CoNat& x) { return !is_left(h(x)); }, 5);
    CHECK(oracle::least_failing(right, 5) == Index{4});

    const Decision d = sur_decides(h);
    REQUIRE(std::holds_alternative<Inhabited>(d));
    const CoNat& w = std::get<Inhabited>(d).witness;
    CHECK(classify(w, 100) == Classification{Finite{4}});
    CHECK(is_left(h(w)));
  }
  SUBCASE("unknown name") {
    CHECK_FALSE(demo_map("nope").has_value());
    CHECK(demo_map_names().size() == 3);
  }
}

TEST_CASE("sur_decides soundness on random maps") {
  Rng rng(71);
  for (int i = 0; i < 200; ++i) {
    // Left exactly on finite(t) for a random target t, or nowhere.
    const Index target = std::uniform_int_distribution<Index>(0, 30)(rng);
    const bool ever = std::bernoulli_distribution(0.7)(rng);
    const SumMap h = [target, ever](const CoNat& p) -> SumElem {
      const bool at_target = (target == 0 || p.bit_at(target - 1)) && !p.bit_at(target);
      if (ever && at_target)
        return Inl{};
      return Inr<CoNat>{p};
    };
    const Decision d = sur_decides(h);
    if (const auto* in = std::get_if<Inhabited>(&d)) {
      CHECK(ever);
      CHECK(is_left(h(in->witness)));
      CHECK(classify(in->witness, 64) == Classification{Finite{target}});
    } else {
      CHECK_FALSE(ever);
      CHECK_FALSE(is_left(h(omega())));
      for (Index n = 0; n <= 40; ++n)
        CHECK_FALSE(is_left(h(finite(n))));
    }
  }
}

TEST_CASE("cbbb_check over the naturals") {
  auto shift = [](Index n) -> NatSum { return Inr<Index>{n}; };
  CHECK(cbbb_check(shift, nat_inject, nat_embed, Index{5}));

  auto left_at_zero = [](Index n) -> NatSum {
    if (n == 0)
      return Inl{};
    return Inr<Index>{n};
  };
  CHECK(cbbb_check(left_at_zero, nat_inject, nat_embed, Index{0}));

  auto three_to_seven = [](Index n) -> NatSum { return Inr<Index>{n == 3 ? 7 : n}; };
  CHECK_FALSE(cbbb_check(three_to_seven, nat_inject, nat_embed, Index{3}));

  for (Index n = 0; n <= 1000; ++n)
    CHECK(cbbb_check(shift, nat_inject, nat_embed, n));
}

TEST_CASE("cbbb_check on N-infinity with prefix equality") {
  auto shift = [](const CoNat& x) -> SumElem { return Inr<CoNat>{x}; };
  CHECK(cbbb_check_upto(shift, f_inject, g_embed, finite(3), 32));
  // h = g inverse: finite(0) goes left, succ(x) goes to inr(x).
  const SumMap back = *demo_map("left-at-zero");
  CHECK(cbbb_check_upto(back, f_inject, g_embed, finite(0), 32));
  CHECK(cbbb_check_upto(back, f_inject, g_embed, finite(5), 32));
  auto off = [](const CoNat&) -> SumElem { return Inr<CoNat>{finite(9)}; };
  CHECK_FALSE(cbbb_check_upto(off, f_inject, g_embed, finite(3), 32));
}

TEST_CASE("bounded_lpo") {
  CHECK_FALSE(bounded_lpo([](Index) { return true; }, 1000).has_value());
  CHECK(bounded_lpo([](Index n) { return n != 17; }, 1000) == Index{17});
  CHECK_FALSE(bounded_lpo([](Index n) { return n != 1'000'000; }, 1000).has_value());
  CHECK_FALSE(bounded_lpo([](Index) { return false; }, 0).has_value());
}

} // namespace ninf

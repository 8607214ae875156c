#include "ninf/oracle.hpp"

#include "ninf/dsl.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

#include <doctest.h>

namespace ninf {

TEST_CASE("representatives") {
  const auto r0 = oracle::representatives(0);
  REQUIRE(r0.size() == 1);
  CHECK(eq_upto(r0[0], finite(0), 16));

  const auto r2 = oracle::representatives(2);
  REQUIRE(r2.size() == 3);
  for (Index n = 0; n < 3; ++n)
    CHECK(eq_upto(r2[n], finite(n), 16));

  // Each of 00, 10, 11 is the 2-prefix of exactly one member.
  for (const std::string s : {"00", "10", "11"}) {
    int hits = 0;
    for (const auto& p : r2)
      hits += prefix_string(p, 2) == s;
    CHECK(hits == 1);
  }
}

TEST_CASE("brute_force_forall") {
  const Predicate always([](const CoNat&) { return true; });
  for (Index m : {0, 1, 5, 40})
    CHECK(oracle::brute_force_forall(always, m));
  CHECK_FALSE(oracle::brute_force_forall(dsl::compile(dsl::parse("bit(0)")), 1));
  const auto q = dsl::compile(dsl::parse("!(bit(5) & !bit(6))"));
  CHECK_FALSE(oracle::brute_force_forall(q, 7));
  CHECK(oracle::least_failing(q, 7) == Index{6});
  CHECK(oracle::brute_force_forall(q, 5)); // too small a bound misses it
}

TEST_CASE("oracle agrees with the reference interpreter and with search") {
  ninf::testing::Rng rng(3);
  ninf::testing::ExprGen gen(rng);
  for (int i = 0; i < 300; ++i) {
    const dsl::Expr e = gen();
    const Index m = dsl::modulus(e);
    const Predicate q = dsl::compile(e);
    CAPTURE(dsl::print(e));
    const bool brute = oracle::brute_force_forall(q, m);
    CHECK(brute == ninf::testing::Reference::forall(e, m));
    CHECK(brute == forall(q));
    if (!brute) {
      const auto n = oracle::least_failing(q, m);
      REQUIRE(n.has_value());
      CHECK(eq_upto(epsilon(q), finite(*n), m));
    }
  }
}

TEST_CASE("parallel batch kernels match the serial reference") {
  ninf::testing::Rng rng(5);
  ninf::testing::ExprGen gen(rng);
  std::vector<Predicate> qs;
  std::vector<Index> moduli;
  for (int i = 0; i < 500; ++i) {
    const dsl::Expr e = gen();
    qs.push_back(dsl::compile(e));
    moduli.push_back(dsl::modulus(e));
  }
  const auto serial = oracle::brute_force_forall_batch(qs, moduli);
  CHECK(oracle::brute_force_forall_batch_parallel(qs, moduli) == serial);
  CHECK(oracle::search_forall_batch(qs) == serial);
  CHECK(oracle::search_forall_batch_parallel(qs) == serial);

  CHECK_THROWS_AS(oracle::brute_force_forall_batch(qs, std::span<const Index>(moduli).first(3)),
                  std::invalid_argument);
}

TEST_CASE("parallel kernel rethrows worker exceptions") {
  std::vector<Predicate> qs(64, Predicate([](const CoNat&) { return true; }));
  qs[40] = Predicate([](const CoNat&) -> bool { throw std::runtime_error("boom"); });
  std::vector<Index> moduli(64, 3);
  CHECK_THROWS_AS(oracle::brute_force_forall_batch_parallel(qs, moduli), std::runtime_error);
}

} // namespace ninf

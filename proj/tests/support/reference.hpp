#ifndef NINF_TESTS_REFERENCE_HPP
#define NINF_TESTS_REFERENCE_HPP

// Test-only ground truth that shares no code with the library's evaluation
// paths: expressions are interpreted directly (quantifiers as loops) over
// plain bit vectors, and quantification enumerates non-increasing strings.

#include "ninf/dsl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ninf::testing {

class Reference {
public:
  /// Truth value of e when bit k is bits[k] (bits past the end read 0).
  static bool eval(const dsl::Expr& e, const std::vector<bool>& bits) {
    std::map<std::string, std::vector<Index>> env;
    return eval_in(e, bits, env);
  }

  /// 1^n 0^(len-n).
  static std::vector<bool> finite_bits(Index n, Index len) {
    std::vector<bool> b(len, false);
    for (Index k = 0; k < n && k < len; ++k)
      b[k] = true;
    return b;
  }

  /// Universal quantification over every non-increasing string of length
  /// len + 1. Any len at or above the expression's true read-set covers N-infinity.
  static bool forall(const dsl::Expr& e, Index len) {
    for (Index n = 0; n <= len + 1; ++n)
      if (!eval(e, finite_bits(n, len + 1)))
        return false;
    return true;
  }

  /// Least n with e false on 1^n 0..., searching n <= len + 1.
  static std::optional<Index> least_zero(const dsl::Expr& e, Index len) {
    for (Index n = 0; n <= len + 1; ++n)
      if (!eval(e, finite_bits(n, len + 1)))
        return n;
    return std::nullopt;
  }

private:
  static bool read(const std::vector<bool>& bits, Index k) { return k < bits.size() && bits[k]; }

  static bool eval_in(const dsl::Expr& e, const std::vector<bool>& bits, std::map<std::string, std::vector<Index>>& env) {
    using namespace dsl;
    if (auto* b = std::get_if<BitAt>(&e.node)) {
      if (auto* k = std::get_if<Index>(&b->index))
        return read(bits, *k);
      return read(bits, env.at(std::get<std::string>(b->index)).back());
    }
    if (std::holds_alternative<ConstTrue>(e.node))
      return true;
    if (std::holds_alternative<ConstFalse>(e.node))
      return false;
    if (auto* a = std::get_if<IsAtLeast>(&e.node))
      return a->n == 0 || read(bits, a->n - 1);
    if (auto* n = std::get_if<Not>(&e.node))
      return !eval_in(*n->operand, bits, env);
    if (auto* a = std::get_if<And>(&e.node))
      return eval_in(*a->lhs, bits, env) && eval_in(*a->rhs, bits, env);
    if (auto* o = std::get_if<Or>(&e.node))
      return eval_in(*o->lhs, bits, env) || eval_in(*o->rhs, bits, env);
    if (auto* i = std::get_if<Implies>(&e.node))
      return !eval_in(*i->lhs, bits, env) || eval_in(*i->rhs, bits, env);
    const auto& q = std::get<AllBelow>(e.node);
    auto& slot = env[q.var];
    bool all = true;
    for (Index i = 0; i < q.bound && all; ++i) {
      slot.push_back(i);
      all = eval_in(*q.body, bits, env);
      slot.pop_back();
    }
    return all;
  }
};

} // namespace ninf::testing

#endif // NINF_TESTS_REFERENCE_HPP

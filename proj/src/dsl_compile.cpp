#include "ninf/dsl.hpp"

#include <algorithm>
#include <cstdint>
#include <string_view>
#include <utility>

namespace ninf::dsl {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

// Innermost binding last.
using Env = std::vector<std::pair<std::string_view, Index>>;

Index lookup(const Env& env, const IndexRef& ref) {
  if (const auto* k = std::get_if<Index>(&ref))
    return *k;
  const auto& name = std::get<std::string>(ref);
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    if (it->first == name)
      return it->second;
  throw std::invalid_argument("unbound variable '" + name + "'");
}

// For modulus, a variable is bound to the quantifier's bound, which is one
// past the largest index it takes.
Index modulus_in(const Expr& e, Env& env) {
  return std::visit(Overloaded{
                        [&](const BitAt& b) -> Index {
                          if (std::holds_alternative<Index>(b.index))
                            return std::get<Index>(b.index) + 1;
                          return lookup(env, b.index);
                        },
                        [](const ConstTrue&) -> Index { return 0; },
                        [](const ConstFalse&) -> Index { return 0; },
                        [](const IsAtLeast& a) -> Index { return a.n; },
                        [&](const Not& n) { return modulus_in(*n.operand, env); },
                        [&](const And& a) { return std::max(modulus_in(*a.lhs, env), modulus_in(*a.rhs, env)); },
                        [&](const Or& o) { return std::max(modulus_in(*o.lhs, env), modulus_in(*o.rhs, env)); },
                        [&](const Implies& i) {
                          return std::max(modulus_in(*i.lhs, env), modulus_in(*i.rhs, env));
                        },
                        [&](const AllBelow& q) -> Index {
                          if (q.bound == 0)
                            return 0;
                          env.emplace_back(q.var, q.bound);
                          const Index m = modulus_in(*q.body, env);
                          env.pop_back();
                          return m;
                        },
                    },
                    e.node);
}

// Compiled form: a quantifier-free tree stored in one vector.
enum class Op : std::uint8_t { Bit, True, False, Not, And, Or, Implies };

struct Node {
  Op op;
  std::uint32_t lhs = 0, rhs = 0;
  Index bit = 0;
};

struct Program {
  std::vector<Node> nodes;
  std::uint32_t root = 0;

  bool eval(std::uint32_t i, const CoNat& p) const {
    const Node& n = nodes[i];
    switch (n.op) {
    case Op::Bit: return p.bit_at(n.bit);
    case Op::True: return true;
    case Op::False: return false;
    case Op::Not: return !eval(n.lhs, p);
    case Op::And: return eval(n.lhs, p) && eval(n.rhs, p);
    case Op::Or: return eval(n.lhs, p) || eval(n.rhs, p);
    case Op::Implies: return !eval(n.lhs, p) || eval(n.rhs, p);
    }
    return false;
  }
};

class Builder {
public:
  Program finish(const Expr& e) {
    Env env;
    program_.root = build(e, env);
    return std::move(program_);
  }

private:
  std::uint32_t push(Node n) {
    if (program_.nodes.size() >= kMaxCompiledNodes)
      throw ExpansionTooLarge("expression expands to more than " + std::to_string(kMaxCompiledNodes) + " nodes");
    program_.nodes.push_back(n);
    return static_cast<std::uint32_t>(program_.nodes.size() - 1);
  }

  std::uint32_t bit_node(Index k) { return push({Op::Bit, 0, 0, k}); }

  std::uint32_t build(const Expr& e, Env& env) {
    return std::visit(Overloaded{
                          [&](const BitAt& b) { return bit_node(lookup(env, b.index)); },
                          [&](const ConstTrue&) { return push({Op::True}); },
                          [&](const ConstFalse&) { return push({Op::False}); },
                          [&](const IsAtLeast& a) { return a.n == 0 ? push({Op::True}) : bit_node(a.n - 1); },
                          [&](const Not& n) {
                            const auto x = build(*n.operand, env);
                            return push({Op::Not, x});
                          },
                          [&](const And& a) { return binary(Op::And, *a.lhs, *a.rhs, env); },
                          [&](const Or& o) { return binary(Op::Or, *o.lhs, *o.rhs, env); },
                          [&](const Implies& i) { return binary(Op::Implies, *i.lhs, *i.rhs, env); },
                          [&](const AllBelow& q) {
                            if (q.bound == 0)
                              return push({Op::True});
                            return unroll(q, 0, q.bound, env);
                          },
                      },
                      e.node);
  }

  std::uint32_t binary(Op op, const Expr& lhs, const Expr& rhs, Env& env) {
    const auto l = build(lhs, env);
    const auto r = build(rhs, env);
    return push({op, l, r});
  }

  // Balanced conjunction of body[var := i] for i in [lo, hi), in index order.
  std::uint32_t unroll(const AllBelow& q, Index lo, Index hi, Env& env) {
    if (hi - lo == 1) {
      env.emplace_back(q.var, lo);
      const auto x = build(*q.body, env);
      env.pop_back();
      return x;
    }
    const Index mid = lo + (hi - lo) / 2;
    const auto l = unroll(q, lo, mid, env);
    const auto r = unroll(q, mid, hi, env);
    return push({Op::And, l, r});
  }

  Program program_;
};

} // namespace

Index modulus(const Expr& e) {
  Env env;
  return modulus_in(e, env);
}

Predicate compile(const Expr& e) {
  auto program = std::make_shared<const Program>(Builder{}.finish(e));
  return Predicate([program](const CoNat& p) { return program->eval(program->root, p); }, modulus(e));
}

} // namespace ninf::dsl

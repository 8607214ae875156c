#ifndef NINF_DSL_HPP
#define NINF_DSL_HPP

#include "ninf/search.hpp"

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

// A small predicate language over N-infinity.
//
//   expr  := imp
//   imp   := or ("=>" imp)?
//   or    := and ("|" and)*
//   and   := unary ("&" unary)*
//   unary := "!" unary | atom
//   atom  := "true" | "false" | "bit(" index ")" | "atleast(" nat ")"
//          | "all" name "<" nat "." expr | "(" expr ")"
//   index := nat | name            (name must be bound by an enclosing "all")
//
// Every index is a literal or a variable with a literal bound, so each
// expression has a finite modulus of continuity.
namespace ninf::dsl {

/// Heap box with value semantics, for the recursive alternatives of Expr.
template <class T>
class Box {
public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other)
      ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }

  bool operator==(const Box& other) const { return *ptr_ == *other.ptr_; }

private:
  std::unique_ptr<T> ptr_;
};

struct Expr;

/// A literal index or the name of a bound variable.
using IndexRef = std::variant<Index, std::string>;

struct BitAt {
  IndexRef index;
  bool operator==(const BitAt&) const = default;
};
struct ConstTrue {
  bool operator==(const ConstTrue&) const = default;
};
struct ConstFalse {
  bool operator==(const ConstFalse&) const = default;
};
struct Not {
  Box<Expr> operand;
  bool operator==(const Not&) const = default;
};
struct And {
  Box<Expr> lhs, rhs;
  bool operator==(const And&) const = default;
};
struct Or {
  Box<Expr> lhs, rhs;
  bool operator==(const Or&) const = default;
};
struct Implies {
  Box<Expr> lhs, rhs;
  bool operator==(const Implies&) const = default;
};
/// Conjunction of body[var := i] over i < bound.
struct AllBelow {
  Index bound;
  std::string var;
  Box<Expr> body;
  bool operator==(const AllBelow&) const = default;
};
/// atleast(0) is true; atleast(n) is bit(n - 1).
struct IsAtLeast {
  Index n;
  bool operator==(const IsAtLeast&) const = default;
};

struct Expr {
  std::variant<BitAt, ConstTrue, ConstFalse, Not, And, Or, Implies, AllBelow, IsAtLeast> node;
  bool operator==(const Expr&) const = default;
};

// Builders.
Expr bit(Index k);
Expr bit(std::string var);
Expr constant(bool value);
Expr negate(Expr e);
Expr conj(Expr lhs, Expr rhs);
Expr disj(Expr lhs, Expr rhs);
Expr implies(Expr lhs, Expr rhs);
Expr all_below(Index bound, std::string var, Expr body);
Expr at_least(Index n);

// Parsing
//------------------------------------------------------------------------------

class ParseError : public std::runtime_error {
public:
  enum class Kind { Syntax, IndexTooLarge };

  ParseError(Kind kind, std::size_t offset, std::vector<std::string> expected, const std::string& message);

  Kind kind() const noexcept { return kind_; }
  /// 0-based byte offset into the input.
  std::size_t offset() const noexcept { return offset_; }
  /// Sorted token names that would have been accepted at `offset`.
  const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
  Kind kind_;
  std::size_t offset_;
  std::vector<std::string> expected_;
};

struct ParseOptions {
  /// Largest bit index an expression may read.
  Index max_index = Index{1} << 16;
  std::size_t max_depth = 1000;
};

Expr parse(std::string_view text, const ParseOptions& options = {});

/// Canonical text: single spaces around binary operators, parentheses only
/// where precedence or associativity needs them. parse(print(e)) == e.
std::string print(const Expr& e);

/// One more than the largest bit index the expression can read; 0 if it
/// reads none.
Index modulus(const Expr& e);

/// Thrown by compile when expanding bounded quantifiers would exceed the
/// node limit.
class ExpansionTooLarge : public std::length_error {
public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kMaxCompiledNodes = std::size_t{1} << 24;

/// Compiles to a Predicate whose declared modulus is modulus(e). Bounded
/// quantifiers are unrolled here, so evaluation is a walk over a fixed tree.
Predicate compile(const Expr& e);

} // namespace ninf::dsl

#endif // NINF_DSL_HPP

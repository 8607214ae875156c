#include "ninf/dsl.hpp"

namespace ninf::dsl {

namespace {

// Binding strength. A quantifier body extends as far right as possible, so
// "all" binds loosest of all.
enum Prec : int { kAll = 0, kImplies = 1, kOr = 2, kAnd = 3, kNot = 4, kAtom = 5 };

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string index_text(const IndexRef& ref) {
  if (const auto* k = std::get_if<Index>(&ref))
    return std::to_string(*k);
  return std::get<std::string>(ref);
}

void emit(const Expr& e, int needed, std::string& out) {
  const int own = std::visit(Overloaded{
                                 [](const AllBelow&) { return int{kAll}; },
                                 [](const Implies&) { return int{kImplies}; },
                                 [](const Or&) { return int{kOr}; },
                                 [](const And&) { return int{kAnd}; },
                                 [](const Not&) { return int{kNot}; },
                                 [](const auto&) { return int{kAtom}; },
                             },
                             e.node);
  const bool paren = own < needed;
  if (paren)
    out += '(';
  std::visit(Overloaded{
                 [&](const BitAt& b) { out += "bit(" + index_text(b.index) + ")"; },
                 [&](const ConstTrue&) { out += "true"; },
                 [&](const ConstFalse&) { out += "false"; },
                 [&](const IsAtLeast& a) { out += "atleast(" + std::to_string(a.n) + ")"; },
                 [&](const Not& n) {
                   out += '!';
                   emit(*n.operand, kNot, out);
                 },
                 [&](const And& a) {
                   emit(*a.lhs, kAnd, out);
                   out += " & ";
                   emit(*a.rhs, kNot, out);
                 },
                 [&](const Or& o) {
                   emit(*o.lhs, kOr, out);
                   out += " | ";
                   emit(*o.rhs, kAnd, out);
                 },
                 [&](const Implies& i) {
                   emit(*i.lhs, kOr, out);
                   out += " => ";
                   emit(*i.rhs, kImplies, out);
                 },
                 [&](const AllBelow& q) {
                   out += "all " + q.var + " < " + std::to_string(q.bound) + ". ";
                   emit(*q.body, kAll, out);
                 },
             },
             e.node);
  if (paren)
    out += ')';
}

} // namespace

std::string print(const Expr& e) {
  std::string out;
  emit(e, kAll, out);
  return out;
}

} // namespace ninf::dsl

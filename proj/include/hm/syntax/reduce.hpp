#pragma once

#include "hm/syntax/term.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hm::syntax {

enum class TermClass { Value, Configuration, General };
std::string to_string(TermClass c);

// Typing rule that concluded a node.
enum class Rule { N, C1, C2, L, A, Var, Sym, Iter };
std::string to_string(Rule r);

struct TypedNode {
    Rule rule;
    TyPtr ty;
    unsigned exec = 0;
};

struct TypedTerm {
    TermPtr raw;
    Context ctx;
    TyPtr ty;
    unsigned exec = 0;
    TermClass cls = TermClass::General;
};

TypedTerm typecheck(const Context& ctx, const TermPtr& t);
// The rule, type and execution number at a node, with `ctx` the context of that node.
TypedNode type_node(const Context& ctx, const TermPtr& t);

// Addresses a subterm: child steps from the root.
struct PathStep {
    enum Kind { Fn, Arg, Body, Scrut, Override, Default, IterF, IterX, IterArg } kind;
    std::uint64_t key = 0;  // Override key or IterArg index
    bool operator==(const PathStep&) const = default;
};
using Path = std::vector<PathStep>;
std::string to_string(const Path& p);

enum class RedexKind { Beta, Theta1, Theta2, Theta3 };
std::string to_string(RedexKind k);

struct Redex {
    Path path;
    RedexKind kind;
};

// Redexes outside default schemas, outermost first.
std::vector<Redex> redexes(const TermPtr& t);
TermPtr subterm(const TermPtr& t, const Path& p);
TermPtr step_beta_theta(const TermPtr& t, const Path& redex);

TermPtr parallel_step(const TermPtr& t);

struct FuelExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};
constexpr unsigned kDefaultNfFuel = 1000;
TermPtr normal_form(const TermPtr& t, unsigned fuel = kDefaultNfFuel);

struct OpStep {
    TypedTerm term;
    bool noop = false;  // the input was already a value
};
OpStep op_step(const TypedTerm& t);

}  // namespace hm::syntax

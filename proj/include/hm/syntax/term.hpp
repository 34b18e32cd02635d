#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hm::syntax {

struct SyntaxError : std::runtime_error {
    SyntaxError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at offset " + std::to_string(pos)), offset(pos) {}
    std::size_t offset;
};
struct TypeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Ty;
using TyPtr = std::shared_ptr<const Ty>;
struct Ty {
    TyPtr dom, cod;  // both null for N
    bool is_nat() const { return !dom; }
};
TyPtr nat_ty();
TyPtr arrow_ty(TyPtr a, TyPtr b);
bool ty_eq(const TyPtr& a, const TyPtr& b);
std::string print_ty(const TyPtr& t);
// A₁ ⇒ … ⇒ A_k ⇒ N as {A₁, …, A_k}.
std::vector<TyPtr> arguments(const TyPtr& t);

enum class TermKind { Var, Num, Sym, Case, Lam, App, Iter };

struct Term;
using TermPtr = std::shared_ptr<const Term>;
struct Family;
using FamilyPtr = std::shared_ptr<const Family>;

// Affine numeral mul·y + add over a family binder y.
struct Affine {
    std::string binder;
    std::uint64_t mul = 1;
    std::int64_t add = 0;
};

struct Term {
    TermKind kind;
    std::string name;      // Var, Lam binder
    std::uint64_t n = 0;   // Num
    Affine sym;            // Sym; Iter count
    TyPtr ty;              // Lam binder type; Iter carrier type A
    TermPtr a, b;          // App fn/arg; Lam body in a; Case scrutinee in a; Iter f̲ in a and x̲ in b
    FamilyPtr fam;         // Case; Iter continuation (null for [y ↦ y])
    std::vector<TermPtr> args;  // Iter: x̲₁ … x̲_k
};

// n ↦ overrides[n] if present, else body with the binder instantiated at n.
struct Family {
    std::map<std::uint64_t, TermPtr> overrides;
    std::string binder;
    TermPtr body;
};

TermPtr var(std::string x);
TermPtr num(std::uint64_t n);
TermPtr sym(Affine a);  // mul = 0 gives a numeral
TermPtr lam(std::string x, TyPtr ty, TermPtr body);
TermPtr app(TermPtr f, TermPtr x);
TermPtr apps(TermPtr f, const std::vector<TermPtr>& xs);
TermPtr case_of(TermPtr scrut, FamilyPtr fam);
// nf(case(f̲^count x̲ x̲₁ … x̲_k)[cont]); a constant count evaluates immediately.
TermPtr iter(Affine count, TyPtr a, TermPtr f_eta, TermPtr x_eta, std::vector<TermPtr> args,
             FamilyPtr cont = nullptr);
FamilyPtr family(std::map<std::uint64_t, TermPtr> overrides, std::string binder, TermPtr body);

std::string fresh(const std::string& hint);

// η-expanded variable x̲^A = λx₁…x_k. case(x x̲₁ … x̲_k)[y ↦ y].
TermPtr eta_var(const std::string& x, const TyPtr& a);
TermPtr succ_term();
TermPtr pred_term();
TermPtr cond_term();
TermPtr itr_term(const TyPtr& a);

using Context = std::vector<std::pair<std::string, TyPtr>>;

TermPtr parse(const std::string& text, const Context& ctx = {});
TyPtr parse_ty(const std::string& text);
std::string print(const TermPtr& t);

std::size_t size(const TermPtr& t);
bool alpha_eq(const TermPtr& s, const TermPtr& t);

// Free term variables.
std::vector<std::string> free_vars(const TermPtr& t);

TermPtr substitute(const TermPtr& body, const TermPtr& arg, const std::string& x);
// The family member at n.
TermPtr instance(const Family& f, std::uint64_t n);
// Replaces the binder's placeholders by the affine `by`.
TermPtr rebind(const TermPtr& body, const std::string& binder, const Affine& by);
// Drops overrides that coincide with the default's instance.
FamilyPtr canonical_family(const FamilyPtr& f);

}  // namespace hm::syntax

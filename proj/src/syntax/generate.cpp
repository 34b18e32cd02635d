#include "hm/syntax/generate.hpp"

#include <algorithm>

namespace hm::syntax {

TermGenerator::TermGenerator(std::uint64_t seed, GenOptions opts) : rng_(seed), opts_(opts) {}

unsigned TermGenerator::pick(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng_); }
bool TermGenerator::coin(double p) { return std::bernoulli_distribution(p)(rng_); }
std::string TermGenerator::name(const char* base) { return base + std::to_string(++counter_); }

TyPtr TermGenerator::type() {
    auto n = nat_ty();
    switch (pick(4)) {
        case 0: return arrow_ty(n, n);
        case 1: return arrow_ty(n, arrow_ty(n, n));
        case 2: return arrow_ty(arrow_ty(n, n), n);
        default: return n;
    }
}

TermPtr TermGenerator::term(const Context& ctx, const TyPtr& ty) {
    Env env{ctx, {}};
    return gen(env, ty, opts_.max_size);
}

TermPtr TermGenerator::value(const Context& ctx, const TyPtr& ty) {
    Env env{ctx, {}};
    return gen_value(env, ty, opts_.max_size);
}

TermPtr TermGenerator::configuration(const Context& ctx, const TyPtr& ty) {
    Env env{ctx, {}};
    return gen_config(env, ty, opts_.max_size);
}

namespace {
TyPtr small_arg_type(unsigned k) { return k == 0 ? nat_ty() : arrow_ty(nat_ty(), nat_ty()); }
}  // namespace

// case(x M₁ … M_k)[F] for a variable x whose type ends in N; null if none fits.
TermPtr TermGenerator::var_spine(Env& env, const TyPtr& ty, unsigned budget, bool values) {
    if (!ty->is_nat() || env.ctx.empty()) return nullptr;
    const auto [x, xt] = env.ctx[pick(static_cast<unsigned>(env.ctx.size()))];
    std::vector<TermPtr> args;
    unsigned share = std::max(1u, budget / (1 + static_cast<unsigned>(arguments(xt).size()) + 1));
    for (const auto& a : arguments(xt)) args.push_back(values ? gen_value(env, a, share) : gen(env, a, share));
    return case_of(apps(var(x), args), gen_family(env, share, values));
}

FamilyPtr TermGenerator::gen_family(Env& env, unsigned budget, bool values) {
    std::map<std::uint64_t, TermPtr> ov;
    unsigned k = pick(3);
    for (unsigned i = 0; i < k; ++i)
        ov[pick(static_cast<unsigned>(opts_.max_numeral) + 1)] =
            values ? gen_value(env, nat_ty(), budget / 2) : gen(env, nat_ty(), budget / 2);
    std::string y = name("y");
    env.binders.push_back(y);
    TermPtr body;
    if (coin(0.5)) {
        body = sym({y, 1 + pick(2), static_cast<std::int64_t>(pick(2))});
    } else {
        body = values ? gen_value(env, nat_ty(), budget / 2) : gen(env, nat_ty(), budget / 2);
    }
    env.binders.pop_back();
    return family(std::move(ov), y, body);
}

TermPtr TermGenerator::gen_value(Env& env, const TyPtr& ty, unsigned budget) {
    if (budget <= 1 && coin(0.5)) {
        std::vector<std::string> fit;
        for (const auto& [x, xt] : env.ctx)
            if (ty_eq(xt, ty)) fit.push_back(x);
        if (!fit.empty()) return eta_var(fit[pick(static_cast<unsigned>(fit.size()))], ty);
    }
    if (!ty->is_nat()) {
        std::string x = name("x");
        env.ctx.emplace_back(x, ty->dom);
        TermPtr body = gen_value(env, ty->cod, budget > 0 ? budget - 1 : 0);
        env.ctx.pop_back();
        return lam(x, ty->dom, body);
    }
    if (budget >= 2 && coin(0.75))
        if (TermPtr s = var_spine(env, ty, budget - 1, true)) return s;
    if (!env.binders.empty() && coin(0.5))
        return sym({env.binders[pick(static_cast<unsigned>(env.binders.size()))], 1 + pick(2), pick(2)});
    return num(pick(static_cast<unsigned>(opts_.max_numeral) + 1));
}

TermPtr TermGenerator::gen_config(Env& env, const TyPtr& ty, unsigned budget) {
    if (budget < 3 || coin(0.25)) return gen_value(env, ty, budget);
    if (!ty->is_nat() && coin(0.3)) {
        std::string x = name("x");
        env.ctx.emplace_back(x, ty->dom);
        TermPtr body = gen_config(env, ty->cod, budget - 1);
        env.ctx.pop_back();
        return lam(x, ty->dom, body);
    }
    TyPtr a = small_arg_type(pick(2));
    unsigned left = 1 + pick(budget - 2);
    return app(gen_config(env, arrow_ty(a, ty), left), gen_config(env, a, budget - 1 - left));
}

TermPtr TermGenerator::gen(Env& env, const TyPtr& ty, unsigned budget) {
    if (budget <= 1) return gen_value(env, ty, 0);
    switch (pick(5)) {
        case 0:
            if (TermPtr s = var_spine(env, ty, budget - 1, false)) return s;
            break;
        case 1:
            if (ty->is_nat()) {
                TermPtr inner = coin(0.5) ? case_of(gen(env, ty, budget / 3), gen_family(env, budget / 3, false))
                                          : gen(env, ty, budget / 2);
                return case_of(inner, gen_family(env, budget / 3, false));
            }
            break;
        case 2: {
            TyPtr a = small_arg_type(pick(2));
            unsigned left = 1 + pick(budget - 1);
            return app(gen(env, arrow_ty(a, ty), left), gen(env, a, budget > left + 1 ? budget - 1 - left : 1));
        }
        case 3:
            if (ty->is_nat()) {
                TermPtr f = coin(0.5) ? succ_term() : pred_term();
                return app(f, gen(env, ty, budget - 1));
            }
            if (ty_eq(ty, arrow_ty(nat_ty(), nat_ty())) && coin(0.4)) {
                // Closed arguments: iterating an open non-linear function grows normal forms geometrically.
                Env closed;
                TermPtr f = coin(0.5) ? succ_term() : gen_value(closed, ty, budget / 2);
                return apps(itr_term(nat_ty()), {f, gen(closed, nat_ty(), budget / 2)});
            }
            break;
        default: break;
    }
    if (!ty->is_nat()) {
        std::string x = name("x");
        env.ctx.emplace_back(x, ty->dom);
        TermPtr body = gen(env, ty->cod, budget - 1);
        env.ctx.pop_back();
        return lam(x, ty->dom, body);
    }
    return gen_value(env, ty, budget);
}

}  // namespace hm::syntax

#include "hm/core/move.hpp"
#include "hm/syntax/reduce.hpp"

#include <set>

namespace hm::syntax {

std::string to_string(TermClass c) {
    switch (c) {
        case TermClass::Value: return "value";
        case TermClass::Configuration: return "configuration";
        case TermClass::General: return "general";
    }
    return "?";
}

std::string to_string(Rule r) {
    static const char* const names[] = {"N", "C1", "C2", "L", "A", "Var", "Sym", "Iter"};
    return names[static_cast<int>(r)];
}

namespace {

struct Info {
    Rule rule;
    TyPtr ty;
    unsigned exec = 0;
    bool value = true;   // only N, C1, L below
    bool config = true;  // only N, C1, L, A below
};

struct Checker {
    Context ctx;                      // innermost last
    std::vector<std::string> binders; // family binders in scope

    TyPtr lookup(const std::string& x) const {
        for (std::size_t i = ctx.size(); i-- > 0;)
            if (ctx[i].first == x) return ctx[i].second;
        throw TypeError("unbound variable " + x);
    }

    bool binder_in_scope(const std::string& b) const {
        for (const auto& x : binders)
            if (x == b) return true;
        return false;
    }

    void expect(const TyPtr& want, const TyPtr& got, const TermPtr& at, const char* role) const {
        if (!ty_eq(want, got))
            throw TypeError(std::string(role) + " of " + print(at) + " has type " + print_ty(got) + ", expected " +
                            print_ty(want));
    }

    // Overrides and default of a family, all at N.
    Info family(const Family& f, const TermPtr& at) {
        Info acc{Rule::N, nat_ty(), 0, true, true};
        auto fold = [&](const Info& i) {
            expect(nat_ty(), i.ty, at, "branch");
            acc.exec = std::max(acc.exec, i.exec);
            acc.value = acc.value && i.value;
            acc.config = acc.config && i.config;
        };
        for (const auto& [k, m] : f.overrides) fold(infer(m));
        binders.push_back(f.binder);
        Info d = infer(f.body);
        binders.pop_back();
        fold(d);
        return acc;
    }

    Info infer(const TermPtr& t) {
        switch (t->kind) {
            case TermKind::Num: return {Rule::N, nat_ty()};
            case TermKind::Sym:
                if (!binder_in_scope(t->sym.binder)) throw TypeError("placeholder outside its branch family");
                return {Rule::Sym, nat_ty()};
            case TermKind::Var: return {Rule::Var, lookup(t->name), 0, false, false};
            case TermKind::Lam: {
                ctx.emplace_back(t->name, t->ty);
                Info b = infer(t->a);
                ctx.pop_back();
                return {Rule::L, arrow_ty(t->ty, b.ty), b.exec, b.value, b.config};
            }
            case TermKind::App: {
                Info f = infer(t->a), x = infer(t->b);
                if (f.ty->is_nat()) throw TypeError("applying " + print(t->a) + " of type N");
                expect(f.ty->dom, x.ty, t->b, "argument");
                return {Rule::A, f.ty->cod, std::max(f.exec, x.exec) + 1, false, f.config && x.config};
            }
            case TermKind::Case: return case_node(t);
            case TermKind::Iter: {
                if (!binder_in_scope(t->sym.binder)) throw TypeError("iteration count outside its branch family");
                Info f = infer(t->a), x = infer(t->b);
                expect(arrow_ty(t->ty, t->ty), f.ty, t->a, "iterated function");
                expect(t->ty, x.ty, t->b, "iteration base");
                auto tys = arguments(t->ty);
                if (tys.size() != t->args.size()) throw TypeError("iteration arity mismatch");
                for (std::size_t i = 0; i < tys.size(); ++i) expect(tys[i], infer(t->args[i]).ty, t->args[i], "argument");
                if (t->fam) family(*t->fam, t);
                return {Rule::Iter, nat_ty()};
            }
        }
        throw TypeError("unknown term");
    }

    Info case_node(const TermPtr& t) {
        Info br = family(*t->fam, t);
        // C1: the scrutinee is x V₁ … V_k with values of execution number 0.
        std::vector<TermPtr> spine;
        TermPtr h = t->a;
        while (h->kind == TermKind::App) {
            spine.push_back(h->b);
            h = h->a;
        }
        if (h->kind == TermKind::Var) {
            TyPtr ty = lookup(h->name);
            bool c1 = br.value && br.exec == 0;
            for (std::size_t i = spine.size(); i-- > 0;) {
                if (ty->is_nat()) throw TypeError("applying variable " + h->name + " of type N");
                Info v = infer(spine[i]);
                expect(ty->dom, v.ty, spine[i], "argument");
                c1 = c1 && v.value && v.exec == 0;
                ty = ty->cod;
            }
            expect(nat_ty(), ty, t->a, "scrutinee");
            if (c1) return {Rule::C1, nat_ty()};
            return {Rule::C2, nat_ty(), 0, false, false};
        }
        Info s = infer(t->a);
        expect(nat_ty(), s.ty, t->a, "scrutinee");
        return {Rule::C2, nat_ty(), 0, false, false};
    }
};

}  // namespace

TypedNode type_node(const Context& ctx, const TermPtr& t) {
    Checker c{ctx, {}};
    Info i = c.infer(t);
    return {i.rule, i.ty, i.exec};
}

TypedTerm typecheck(const Context& ctx, const TermPtr& t) {
    std::set<std::string> seen;
    for (const auto& [x, ty] : ctx)
        if (!seen.insert(x).second) throw TypeError("context repeats variable " + x);
    Checker c{ctx, {}};
    Info i = c.infer(t);
    TermClass cls = i.value ? TermClass::Value : i.config ? TermClass::Configuration : TermClass::General;
    return {t, ctx, i.ty, i.exec, cls};
}

}  // namespace hm::syntax

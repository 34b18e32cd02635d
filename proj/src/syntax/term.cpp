#include "hm/syntax/term.hpp"

#include "detail.hpp"

#include <atomic>
#include <set>
#include <stdexcept>

namespace hm::syntax {

TyPtr nat_ty() {
    static const TyPtr n = std::make_shared<const Ty>();
    return n;
}

TyPtr arrow_ty(TyPtr a, TyPtr b) { return std::make_shared<const Ty>(Ty{std::move(a), std::move(b)}); }

bool ty_eq(const TyPtr& a, const TyPtr& b) {
    if (a->is_nat() || b->is_nat()) return a->is_nat() == b->is_nat();
    return ty_eq(a->dom, b->dom) && ty_eq(a->cod, b->cod);
}

std::string print_ty(const TyPtr& t) {
    if (t->is_nat()) return "N";
    std::string d = print_ty(t->dom);
    if (!t->dom->is_nat()) d = "(" + d + ")";
    return d + " => " + print_ty(t->cod);
}

std::vector<TyPtr> arguments(const TyPtr& t) {
    std::vector<TyPtr> out;
    for (TyPtr c = t; !c->is_nat(); c = c->cod) out.push_back(c->dom);
    return out;
}

namespace {
TermPtr make(Term t) { return std::make_shared<const Term>(std::move(t)); }
}  // namespace

TermPtr var(std::string x) { return make(Term{TermKind::Var, std::move(x)}); }

TermPtr num(std::uint64_t n) {
    Term t{TermKind::Num};
    t.n = n;
    return make(std::move(t));
}

TermPtr sym(Affine a) {
    if (a.mul == 0) {
        if (a.add < 0) throw std::domain_error("negative numeral " + std::to_string(a.add));
        return num(static_cast<std::uint64_t>(a.add));
    }
    Term t{TermKind::Sym};
    t.sym = std::move(a);
    return make(std::move(t));
}

TermPtr lam(std::string x, TyPtr ty, TermPtr body) {
    Term t{TermKind::Lam, std::move(x)};
    t.ty = std::move(ty);
    t.a = std::move(body);
    return make(std::move(t));
}

TermPtr app(TermPtr f, TermPtr x) {
    Term t{TermKind::App};
    t.a = std::move(f);
    t.b = std::move(x);
    return make(std::move(t));
}

TermPtr apps(TermPtr f, const std::vector<TermPtr>& xs) {
    for (const auto& x : xs) f = app(std::move(f), x);
    return f;
}

TermPtr case_of(TermPtr scrut, FamilyPtr fam) {
    Term t{TermKind::Case};
    t.a = std::move(scrut);
    t.fam = std::move(fam);
    return make(std::move(t));
}

TermPtr iter(Affine count, TyPtr a, TermPtr f_eta, TermPtr x_eta, std::vector<TermPtr> args, FamilyPtr cont) {
    if (count.mul == 0 && count.add < 0) throw std::domain_error("negative iteration count");
    Term t{TermKind::Iter};
    t.sym = std::move(count);
    t.ty = std::move(a);
    t.a = std::move(f_eta);
    t.b = std::move(x_eta);
    t.args = std::move(args);
    t.fam = std::move(cont);
    if (t.sym.mul == 0) return detail::iterate(t, static_cast<std::uint64_t>(t.sym.add));
    return make(std::move(t));
}

FamilyPtr family(std::map<std::uint64_t, TermPtr> overrides, std::string binder, TermPtr body) {
    return std::make_shared<const Family>(Family{std::move(overrides), std::move(binder), std::move(body)});
}

std::string fresh(const std::string& hint) {
    static std::atomic<std::uint64_t> counter{0};
    std::string base;
    for (char c : hint)
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) base += c;
    if (base.empty()) base = "v";
    return "_" + base + std::to_string(++counter);
}

TermPtr eta_var(const std::string& x, const TyPtr& a) {
    auto tys = arguments(a);
    std::vector<std::string> xs;
    std::vector<TermPtr> etas;
    for (const auto& t : tys) {
        xs.push_back(fresh("x"));
        etas.push_back(eta_var(xs.back(), t));
    }
    std::string y = fresh("y");
    TermPtr body = case_of(apps(var(x), etas), family({}, y, sym({y, 1, 0})));
    for (std::size_t i = tys.size(); i-- > 0;) body = lam(xs[i], tys[i], body);
    return body;
}

TermPtr succ_term() {
    std::string x = fresh("x"), y = fresh("y");
    return lam(x, nat_ty(), case_of(var(x), family({}, y, sym({y, 1, 1}))));
}

TermPtr pred_term() {
    std::string x = fresh("x"), y = fresh("y");
    return lam(x, nat_ty(), case_of(var(x), family({{0, num(0)}}, y, sym({y, 1, -1}))));
}

TermPtr cond_term() {
    std::string x = fresh("x"), y = fresh("y"), z = fresh("z"), w = fresh("w");
    auto n = nat_ty();
    TermPtr body = case_of(var(z), family({{0, eta_var(x, n)}}, w, eta_var(y, n)));
    return lam(x, n, lam(y, n, lam(z, n, body)));
}

TermPtr itr_term(const TyPtr& a) {
    std::string f = fresh("f"), x = fresh("x"), y = fresh("y"), z = fresh("z");
    auto tys = arguments(a);
    std::vector<std::string> xs;
    std::vector<TermPtr> etas;
    for (const auto& t : tys) {
        xs.push_back(fresh("x"));
        etas.push_back(eta_var(xs.back(), t));
    }
    TyPtr fa = arrow_ty(a, a);
    TermPtr body = case_of(var(y), family({}, z, iter({z, 1, 0}, a, eta_var(f, fa), eta_var(x, a), etas)));
    for (std::size_t i = tys.size(); i-- > 0;) body = lam(xs[i], tys[i], body);
    return lam(f, fa, lam(x, a, lam(y, nat_ty(), body)));
}

std::size_t size(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Var:
        case TermKind::Num:
        case TermKind::Sym: return 1;
        case TermKind::Lam: return 1 + size(t->a);
        case TermKind::App: return 1 + size(t->a) + size(t->b);
        case TermKind::Case: {
            std::size_t s = 1 + size(t->a) + size(t->fam->body);
            for (const auto& [k, m] : t->fam->overrides) s += size(m);
            return s;
        }
        case TermKind::Iter: {
            std::size_t s = 1 + size(t->a) + size(t->b);
            for (const auto& m : t->args) s += size(m);
            if (t->fam) {
                s += size(t->fam->body);
                for (const auto& [k, m] : t->fam->overrides) s += size(m);
            }
            return s;
        }
    }
    return 1;
}

namespace {

void collect_free(const TermPtr& t, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (t->kind) {
        case TermKind::Var:
            if (!bound.count(t->name)) out.insert(t->name);
            return;
        case TermKind::Num:
        case TermKind::Sym: return;
        case TermKind::Lam: {
            bool fresh_bind = bound.insert(t->name).second;
            collect_free(t->a, bound, out);
            if (fresh_bind) bound.erase(t->name);
            return;
        }
        case TermKind::App:
            collect_free(t->a, bound, out);
            collect_free(t->b, bound, out);
            return;
        case TermKind::Case:
            collect_free(t->a, bound, out);
            for (const auto& [k, m] : t->fam->overrides) collect_free(m, bound, out);
            collect_free(t->fam->body, bound, out);
            return;
        case TermKind::Iter:
            collect_free(t->a, bound, out);
            collect_free(t->b, bound, out);
            for (const auto& m : t->args) collect_free(m, bound, out);
            if (t->fam) {
                for (const auto& [k, m] : t->fam->overrides) collect_free(m, bound, out);
                collect_free(t->fam->body, bound, out);
            }
            return;
    }
}

}  // namespace

std::set<std::string> detail::free_var_set(const TermPtr& t) {
    std::set<std::string> bound, out;
    collect_free(t, bound, out);
    return out;
}

void detail::free_syms(const TermPtr& t, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (t->kind) {
        case TermKind::Var:
        case TermKind::Num: return;
        case TermKind::Sym:
            if (!bound.count(t->sym.binder)) out.insert(t->sym.binder);
            return;
        case TermKind::Lam: free_syms(t->a, bound, out); return;
        case TermKind::App:
            free_syms(t->a, bound, out);
            free_syms(t->b, bound, out);
            return;
        case TermKind::Case: {
            free_syms(t->a, bound, out);
            for (const auto& [k, m] : t->fam->overrides) free_syms(m, bound, out);
            bool fresh_bind = bound.insert(t->fam->binder).second;
            free_syms(t->fam->body, bound, out);
            if (fresh_bind) bound.erase(t->fam->binder);
            return;
        }
        case TermKind::Iter:
            if (!bound.count(t->sym.binder)) out.insert(t->sym.binder);
            free_syms(t->a, bound, out);
            free_syms(t->b, bound, out);
            for (const auto& m : t->args) free_syms(m, bound, out);
            if (t->fam) {
                for (const auto& [k, m] : t->fam->overrides) free_syms(m, bound, out);
                bool fresh_bind = bound.insert(t->fam->binder).second;
                free_syms(t->fam->body, bound, out);
                if (fresh_bind) bound.erase(t->fam->binder);
            }
            return;
    }
}

bool detail::counts_over(const TermPtr& t, const std::string& binder) {
    auto in_fam = [&](const FamilyPtr& f) {
        for (const auto& [k, m] : f->overrides)
            if (counts_over(m, binder)) return true;
        return f->binder != binder && counts_over(f->body, binder);
    };
    switch (t->kind) {
        case TermKind::Var:
        case TermKind::Num:
        case TermKind::Sym: return false;
        case TermKind::Lam: return counts_over(t->a, binder);
        case TermKind::App: return counts_over(t->a, binder) || counts_over(t->b, binder);
        case TermKind::Case: return counts_over(t->a, binder) || in_fam(t->fam);
        case TermKind::Iter: {
            if (t->sym.binder == binder || counts_over(t->a, binder) || counts_over(t->b, binder)) return true;
            for (const auto& m : t->args)
                if (counts_over(m, binder)) return true;
            return t->fam && in_fam(t->fam);
        }
    }
    return false;
}

std::vector<std::string> free_vars(const TermPtr& t) {
    auto s = detail::free_var_set(t);
    return {s.begin(), s.end()};
}

namespace {

TermPtr rename_var(const TermPtr& t, const std::string& from, const std::string& to) {
    return substitute(t, var(to), from);
}

// Renames a family's binder when it would capture one of `avoid`.
FamilyPtr freshen_binder(const FamilyPtr& f, const std::set<std::string>& avoid) {
    if (!avoid.count(f->binder)) return f;
    std::string b = fresh(f->binder);
    return family(f->overrides, b, rebind(f->body, f->binder, {b, 1, 0}));
}

struct Subst {
    const TermPtr& arg;
    const std::string& x;
    std::set<std::string> fv;
    std::set<std::string> syms;

    FamilyPtr fam(const FamilyPtr& f0) const {
        FamilyPtr f = freshen_binder(f0, syms);
        std::map<std::uint64_t, TermPtr> ov;
        for (const auto& [k, m] : f->overrides) ov.emplace(k, go(m));
        return family(std::move(ov), f->binder, go(f->body));
    }

    TermPtr go(const TermPtr& t) const {
        switch (t->kind) {
            case TermKind::Var: return t->name == x ? arg : t;
            case TermKind::Num:
            case TermKind::Sym: return t;
            case TermKind::Lam: {
                if (t->name == x) return t;
                if (fv.count(t->name)) {
                    std::string y = fresh(t->name);
                    return lam(y, t->ty, go(rename_var(t->a, t->name, y)));
                }
                return lam(t->name, t->ty, go(t->a));
            }
            case TermKind::App: return app(go(t->a), go(t->b));
            case TermKind::Case: return case_of(go(t->a), fam(t->fam));
            case TermKind::Iter: {
                std::vector<TermPtr> args;
                for (const auto& m : t->args) args.push_back(go(m));
                return iter(t->sym, t->ty, go(t->a), go(t->b), std::move(args), t->fam ? fam(t->fam) : nullptr);
            }
        }
        return t;
    }
};

}  // namespace

TermPtr substitute(const TermPtr& body, const TermPtr& arg, const std::string& x) {
    Subst s{arg, x, detail::free_var_set(arg), {}};
    std::set<std::string> bound;
    detail::free_syms(arg, bound, s.syms);
    return s.go(body);
}

namespace {

Affine compose(const Affine& inner, const Affine& by) {
    // inner = c·b + d with b := by.mul·z + by.add
    return {by.binder, inner.mul * by.mul, static_cast<std::int64_t>(inner.mul) * by.add + inner.add};
}

TermPtr rebind_go(const TermPtr& t, const std::string& binder, const Affine& by);

FamilyPtr rebind_fam(const FamilyPtr& f0, const std::string& binder, const Affine& by) {
    std::map<std::uint64_t, TermPtr> ov;
    for (const auto& [k, m] : f0->overrides) ov.emplace(k, rebind_go(m, binder, by));
    if (f0->binder == binder) return family(std::move(ov), binder, f0->body);
    FamilyPtr f = by.mul != 0 ? freshen_binder(f0, {by.binder}) : f0;
    return family(std::move(ov), f->binder, rebind_go(f->body, binder, by));
}

TermPtr rebind_go(const TermPtr& t, const std::string& binder, const Affine& by) {
    switch (t->kind) {
        case TermKind::Var:
        case TermKind::Num: return t;
        case TermKind::Sym: return t->sym.binder == binder ? sym(compose(t->sym, by)) : t;
        case TermKind::Lam: return lam(t->name, t->ty, rebind_go(t->a, binder, by));
        case TermKind::App: return app(rebind_go(t->a, binder, by), rebind_go(t->b, binder, by));
        case TermKind::Case: return case_of(rebind_go(t->a, binder, by), rebind_fam(t->fam, binder, by));
        case TermKind::Iter: {
            Affine c = t->sym.binder == binder ? compose(t->sym, by) : t->sym;
            std::vector<TermPtr> args;
            for (const auto& m : t->args) args.push_back(rebind_go(m, binder, by));
            return iter(c, t->ty, rebind_go(t->a, binder, by), rebind_go(t->b, binder, by), std::move(args),
                        t->fam ? rebind_fam(t->fam, binder, by) : nullptr);
        }
    }
    return t;
}

}  // namespace

TermPtr rebind(const TermPtr& body, const std::string& binder, const Affine& by) {
    return rebind_go(body, binder, by);
}

TermPtr instance(const Family& f, std::uint64_t n) {
    auto it = f.overrides.find(n);
    if (it != f.overrides.end()) return it->second;
    return rebind(f.body, f.binder, {"", 0, static_cast<std::int64_t>(n)});
}

FamilyPtr canonical_family(const FamilyPtr& f) {
    // Instances of an iteration schema cost a normalization each; such overrides stay.
    if (f->overrides.empty() || detail::counts_over(f->body, f->binder)) return f;
    std::map<std::uint64_t, TermPtr> ov;
    for (const auto& [k, m] : f->overrides) {
        TermPtr d;
        try {
            d = rebind(f->body, f->binder, {"", 0, static_cast<std::int64_t>(k)});
        } catch (const std::domain_error&) {
            ov.emplace(k, m);  // the default is undefined at k
            continue;
        }
        if (!alpha_eq(m, d)) ov.emplace(k, m);
    }
    if (ov.size() == f->overrides.size()) return f;
    return family(std::move(ov), f->binder, f->body);
}

}  // namespace hm::syntax

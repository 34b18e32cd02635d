#include "hm/syntax/reduce.hpp"

#include "detail.hpp"
#include "hm/core/move.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>

namespace hm::syntax {

std::string to_string(RedexKind k) {
    static const char* const names[] = {"beta", "theta1", "theta2", "theta3"};
    return names[static_cast<int>(k)];
}

std::string to_string(const Path& p) {
    std::string s;
    for (const auto& st : p) {
        if (!s.empty()) s += ".";
        switch (st.kind) {
            case PathStep::Fn: s += "fn"; break;
            case PathStep::Arg: s += "arg"; break;
            case PathStep::Body: s += "body"; break;
            case PathStep::Scrut: s += "scrut"; break;
            case PathStep::Override: s += "case" + std::to_string(st.key); break;
            case PathStep::Default: s += "default"; break;
            case PathStep::IterF: s += "iterf"; break;
            case PathStep::IterX: s += "iterx"; break;
            case PathStep::IterArg: s += "iterarg" + std::to_string(st.key); break;
        }
    }
    return s.empty() ? "root" : s;
}

namespace {

bool var_headed(TermPtr t) {
    while (t->kind == TermKind::App) t = t->a;
    return t->kind == TermKind::Var;
}

std::optional<RedexKind> redex_kind(const TermPtr& t) {
    if (t->kind == TermKind::App && t->a->kind == TermKind::Lam) return RedexKind::Beta;
    if (t->kind != TermKind::Case) return std::nullopt;
    if (t->a->kind == TermKind::Num) return RedexKind::Theta1;
    if (t->a->kind == TermKind::Case) return var_headed(t->a->a) ? RedexKind::Theta2 : RedexKind::Theta3;
    if (t->a->kind == TermKind::Iter) return RedexKind::Theta3;
    return std::nullopt;
}

// case(case(M)[P])[Q] ↦ case(M)[x ↦ case(P_x)[Q]]
FamilyPtr compose(const FamilyPtr& p, const FamilyPtr& q) {
    std::map<std::uint64_t, TermPtr> ov;
    for (const auto& [k, m] : p->overrides) ov.emplace(k, case_of(m, q));
    std::string x = fresh(p->binder);
    return family(std::move(ov), x, case_of(rebind(p->body, p->binder, {x, 1, 0}), q));
}

// case(iter(…)[K])[Q] ↦ iter(…)[K;Q], the case-of-case commutation under nf.
TermPtr with_cont(const Term& it, const FamilyPtr& q) {
    return iter(it.sym, it.ty, it.a, it.b, it.args, it.fam ? compose(it.fam, q) : q);
}

TermPtr contract(const TermPtr& t) {
    auto k = redex_kind(t);
    if (!k) throw DomainError("not a redex: " + print(t));
    switch (*k) {
        case RedexKind::Beta: return substitute(t->a->a, t->b, t->a->name);
        case RedexKind::Theta1: return instance(*t->fam, t->a->n);
        case RedexKind::Theta2:
        case RedexKind::Theta3:
            if (t->a->kind == TermKind::Iter) return with_cont(*t->a, t->fam);
            return case_of(t->a->a, compose(t->a->fam, t->fam));
    }
    return t;
}

void collect(const TermPtr& t, Path& at, std::vector<Redex>& out) {
    if (auto k = redex_kind(t)) out.push_back({at, *k});
    auto down = [&](PathStep st, const TermPtr& c) {
        at.push_back(st);
        collect(c, at, out);
        at.pop_back();
    };
    switch (t->kind) {
        case TermKind::Var:
        case TermKind::Num:
        case TermKind::Sym:
        case TermKind::Iter: return;
        case TermKind::Lam: down({PathStep::Body}, t->a); return;
        case TermKind::App:
            down({PathStep::Fn}, t->a);
            down({PathStep::Arg}, t->b);
            return;
        case TermKind::Case:
            down({PathStep::Scrut}, t->a);
            for (const auto& [k, m] : t->fam->overrides) down({PathStep::Override, k}, m);
            down({PathStep::Default}, t->fam->body);
            return;
    }
}

TermPtr child(const TermPtr& t, const PathStep& st) {
    switch (st.kind) {
        case PathStep::Fn:
            if (t->kind == TermKind::App) return t->a;
            break;
        case PathStep::Arg:
            if (t->kind == TermKind::App) return t->b;
            break;
        case PathStep::Body:
            if (t->kind == TermKind::Lam) return t->a;
            break;
        case PathStep::Scrut:
            if (t->kind == TermKind::Case) return t->a;
            break;
        case PathStep::Override:
            if (t->kind == TermKind::Case) {
                auto it = t->fam->overrides.find(st.key);
                if (it != t->fam->overrides.end()) return it->second;
            }
            break;
        case PathStep::Default:
            if (t->kind == TermKind::Case) return t->fam->body;
            break;
        case PathStep::IterF:
            if (t->kind == TermKind::Iter) return t->a;
            break;
        case PathStep::IterX:
            if (t->kind == TermKind::Iter) return t->b;
            break;
        case PathStep::IterArg:
            if (t->kind == TermKind::Iter && st.key < t->args.size()) return t->args[st.key];
            break;
    }
    throw DomainError("path step does not exist");
}

TermPtr replace(const TermPtr& t, const Path& p, std::size_t i, const std::function<TermPtr(const TermPtr&)>& f) {
    if (i == p.size()) return f(t);
    TermPtr c = replace(child(t, p[i]), p, i + 1, f);
    switch (p[i].kind) {
        case PathStep::Fn: return app(c, t->b);
        case PathStep::Arg: return app(t->a, c);
        case PathStep::Body: return lam(t->name, t->ty, c);
        case PathStep::Scrut: return case_of(c, t->fam);
        case PathStep::Override: {
            auto ov = t->fam->overrides;
            ov[p[i].key] = c;
            return case_of(t->a, family(std::move(ov), t->fam->binder, t->fam->body));
        }
        case PathStep::Default: return case_of(t->a, family(t->fam->overrides, t->fam->binder, c));
        case PathStep::IterF: return iter(t->sym, t->ty, c, t->b, t->args, t->fam);
        case PathStep::IterX: return iter(t->sym, t->ty, t->a, c, t->args, t->fam);
        case PathStep::IterArg: {
            auto args = t->args;
            args[p[i].key] = c;
            return iter(t->sym, t->ty, t->a, t->b, std::move(args), t->fam);
        }
    }
    return t;
}

// Critical instances of family binders found while reducing a schema symbolically.
using Critical = std::map<std::string, std::set<std::uint64_t>>;

std::optional<std::uint64_t> value_of(const Family& g, std::uint64_t v) {
    auto it = g.overrides.find(v);
    TermPtr r = it != g.overrides.end() ? it->second : nullptr;
    if (!r) {
        if (g.body->kind == TermKind::Num) return g.body->n;
        if (g.body->kind != TermKind::Sym || g.body->sym.binder != g.binder) return std::nullopt;
        auto x = static_cast<std::int64_t>(g.body->sym.mul * v) + g.body->sym.add;
        if (x < 0) return std::nullopt;
        return static_cast<std::uint64_t>(x);
    }
    if (r->kind != TermKind::Num) return std::nullopt;
    return r->n;
}

// nf(f̲^c x̲) = slope·c + icpt for c ≥ from, and `prefix` lists the values below `from`.
struct Orbit {
    std::vector<std::uint64_t> prefix;
    std::uint64_t slope;
    std::int64_t icpt;
};

// Exact closed form of an iteration of a numeral function whose orbit is eventually
// constant or arithmetic past every override.
std::optional<Orbit> orbit_closed_form(const Term& it) {
    if (!it.ty->is_nat() || !it.args.empty()) return std::nullopt;
    TermPtr f = normal_form(it.a), x = normal_form(it.b);
    if (x->kind != TermKind::Num || f->kind != TermKind::Lam) return std::nullopt;
    TermPtr c = f->a;
    if (c->kind != TermKind::Case || c->a->kind != TermKind::Var || c->a->name != f->name) return std::nullopt;
    const Family& g = *c->fam;
    std::uint64_t max_ov = g.overrides.empty() ? 0 : g.overrides.rbegin()->first;
    const Term& d = *g.body;
    bool shift = d.kind == TermKind::Sym && d.sym.binder == g.binder && d.sym.mul == 1 && d.sym.add > 0;
    std::vector<std::uint64_t> vs{x->n};
    const std::uint64_t limit = max_ov + 256;
    while (vs.size() < limit) {
        std::uint64_t v = vs.back();
        auto nx = value_of(g, v);
        if (!nx) return std::nullopt;
        if (*nx == v) return Orbit{{vs.begin(), vs.end() - 1}, 0, static_cast<std::int64_t>(v)};
        if (shift && v > max_ov) {
            auto from = static_cast<std::int64_t>(vs.size() - 1);
            return Orbit{{vs.begin(), vs.end() - 1}, static_cast<std::uint64_t>(d.sym.add),
                         static_cast<std::int64_t>(v) - d.sym.add * from};
        }
        vs.push_back(*nx);
    }
    return std::nullopt;
}

// Replaces a default of the shape iter[a·y+b] by overrides plus an affine default.
FamilyPtr close_iteration(const FamilyPtr& f) {
    const TermPtr& body = f->body;
    if (body->kind != TermKind::Iter || body->sym.binder != f->binder) return f;
    auto orbit = orbit_closed_form(*body);
    if (!orbit) return f;
    const Affine& cnt = body->sym;
    auto under = [&](TermPtr v) { return body->fam ? case_of(std::move(v), body->fam) : v; };
    auto ov = f->overrides;
    for (std::uint64_t n = 0;; ++n) {
        std::int64_t c = static_cast<std::int64_t>(cnt.mul * n) + cnt.add;
        if (c >= static_cast<std::int64_t>(orbit->prefix.size())) break;
        if (c >= 0 && !ov.count(n)) ov.emplace(n, under(num(orbit->prefix[static_cast<std::size_t>(c)])));
    }
    Affine v{f->binder, orbit->slope * cnt.mul,
             static_cast<std::int64_t>(orbit->slope) * cnt.add + orbit->icpt};
    TermPtr d = v.mul == 0 ? num(static_cast<std::uint64_t>(v.add)) : sym(v);
    return family(std::move(ov), f->binder, under(d));
}

struct Par {
    Critical crit;

    TermPtr go(const TermPtr& t) {
        switch (t->kind) {
            case TermKind::Var:
            case TermKind::Num:
            case TermKind::Sym: return t;
            case TermKind::Lam: return lam(t->name, t->ty, go(t->a));
            case TermKind::App:
                if (t->a->kind == TermKind::Lam) return substitute(go(t->a->a), go(t->b), t->a->name);
                return app(go(t->a), go(t->b));
            case TermKind::Case: return case_node(t);
            case TermKind::Iter: {
                std::vector<TermPtr> args;
                for (const auto& m : t->args) args.push_back(go(m));
                return iter(t->sym, t->ty, go(t->a), go(t->b), std::move(args), t->fam ? fam(t->fam) : nullptr);
            }
        }
        return t;
    }

    TermPtr case_node(const TermPtr& t) {
        const TermPtr& s = t->a;
        if (s->kind == TermKind::Num) return go(instance(*t->fam, s->n));
        if (s->kind == TermKind::Case) return case_of(go(s->a), compose(fam(s->fam), fam(t->fam)));
        if (s->kind == TermKind::Iter) return go(with_cont(*s, t->fam));
        if (s->kind == TermKind::Sym) {
            // θ₁ at every instance of the placeholder's binder; overrides make instances critical.
            const Affine& a = s->sym;
            for (const auto& [k, m] : t->fam->overrides) {
                auto kk = static_cast<std::int64_t>(k);
                if (kk >= a.add && (kk - a.add) % static_cast<std::int64_t>(a.mul) == 0)
                    crit[a.binder].insert(static_cast<std::uint64_t>((kk - a.add) / static_cast<std::int64_t>(a.mul)));
            }
            return go(rebind(t->fam->body, t->fam->binder, a));
        }
        return case_of(go(s), fam(t->fam));
    }

    FamilyPtr fam(const FamilyPtr& f) {
        std::map<std::uint64_t, TermPtr> ov;
        for (const auto& [k, m] : f->overrides) ov.emplace(k, go(m));
        TermPtr body = go(f->body);
        auto it = crit.find(f->binder);
        if (it != crit.end()) {
            std::set<std::uint64_t> ks = std::move(it->second);
            crit.erase(it);
            for (std::uint64_t k : ks)
                if (!ov.count(k)) ov.emplace(k, go(instance(*f, k)));
        }
        return canonical_family(close_iteration(family(std::move(ov), f->binder, body)));
    }
};

}  // namespace

std::vector<Redex> redexes(const TermPtr& t) {
    std::vector<Redex> out;
    Path at;
    collect(t, at, out);
    return out;
}

TermPtr subterm(const TermPtr& t, const Path& p) {
    TermPtr c = t;
    for (const auto& st : p) c = child(c, st);
    return c;
}

TermPtr step_beta_theta(const TermPtr& t, const Path& redex) { return replace(t, redex, 0, contract); }

TermPtr parallel_step(const TermPtr& t) {
    Par p;
    return p.go(t);
}

TermPtr normal_form(const TermPtr& t, unsigned fuel) {
    TermPtr cur = t;
    for (unsigned i = 0; i < fuel; ++i) {
        TermPtr nx = parallel_step(cur);
        if (detail::identical(nx, cur)) return nx;
        cur = nx;
    }
    throw FuelExhausted("normal form not reached within " + std::to_string(fuel) + " parallel steps");
}

TermPtr detail::iterate(const Term& it, std::uint64_t count) {
    TermPtr v = normal_form(it.b);
    for (std::uint64_t i = 0; i < count; ++i) v = normal_form(app(it.a, v));
    v = normal_form(apps(v, it.args));
    return it.fam ? normal_form(case_of(v, it.fam)) : v;
}

namespace {

unsigned exec_of(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Lam: return exec_of(t->a);
        case TermKind::App: return std::max(exec_of(t->a), exec_of(t->b)) + 1;
        default: return 0;
    }
}

TermPtr op_rewrite(const TermPtr& t) {
    unsigned e = exec_of(t);
    if (e == 0) return t;
    if (e == 1) return normal_form(t);
    if (t->kind == TermKind::Lam) return lam(t->name, t->ty, op_rewrite(t->a));
    return app(op_rewrite(t->a), op_rewrite(t->b));
}

}  // namespace

OpStep op_step(const TypedTerm& t) {
    if (t.cls == TermClass::Value) return {t, true};
    if (t.cls != TermClass::Configuration) throw DomainError("op_step needs a configuration, got " + print(t.raw));
    TypedTerm r = typecheck(t.ctx, op_rewrite(t.raw));
    if (r.exec + 1 != t.exec || !ty_eq(r.ty, t.ty) || r.cls == TermClass::General)
        throw StructuralError("op_step broke the execution-number invariant on " + print(t.raw));
    return {r, false};
}

}  // namespace hm::syntax

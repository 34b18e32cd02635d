#include "hm/syntax/generate.hpp"

#include <algorithm>
#include <functional>

namespace hm::syntax {

namespace {

// Up to `steps` single βθ-steps, choosing among the available redexes with `rng`.
TermPtr random_steps(TermPtr t, unsigned steps, std::mt19937_64& rng) {
    for (unsigned i = 0; i < steps; ++i) {
        auto rs = redexes(t);
        if (rs.empty()) break;
        t = step_beta_theta(t, rs[std::uniform_int_distribution<std::size_t>(0, rs.size() - 1)(rng)].path);
    }
    return t;
}

unsigned exec_number(const TermPtr& u) {
    if (u->kind == TermKind::Lam) return exec_number(u->a);
    if (u->kind == TermKind::App) return std::max(exec_number(u->a), exec_number(u->b)) + 1;
    return 0;
}

void maximal_exec1(const TermPtr& u, Path& at, std::vector<Path>& out) {
    unsigned e = exec_number(u);
    if (e == 1) {
        out.push_back(at);
        return;
    }
    if (e == 0) return;
    auto down = [&](PathStep st, const TermPtr& c) {
        at.push_back(st);
        maximal_exec1(c, at, out);
        at.pop_back();
    };
    if (u->kind == TermKind::Lam) down({PathStep::Body}, u->a);
    if (u->kind == TermKind::App) {
        down({PathStep::Fn}, u->a);
        down({PathStep::Arg}, u->b);
    }
}

TermPtr put(const TermPtr& u, const Path& p, std::size_t i, const TermPtr& n) {
    if (i == p.size()) return n;
    if (p[i].kind == PathStep::Body) return lam(u->name, u->ty, put(u->a, p, i + 1, n));
    if (p[i].kind == PathStep::Fn) return app(put(u->a, p, i + 1, n), u->b);
    return app(u->a, put(u->b, p, i + 1, n));
}

// Normalizes the maximal exec-1 subterms of the original term one at a time.
TermPtr sequential_op(const TermPtr& t) {
    std::vector<Path> ps;
    Path at;
    maximal_exec1(t, at, ps);
    TermPtr cur = t;
    for (const auto& p : ps) cur = put(cur, p, 0, normal_form(subterm(cur, p)));
    return cur;
}

}  // namespace

MetatheoryReport check_metatheory(std::size_t count, std::uint64_t seed, GenOptions opts) {
    MetatheoryReport rep;
    TermGenerator gen(seed, opts);
    auto fail = [&](const std::string& prop, const TermPtr& t, const std::string& extra = {}) {
        rep.failures.push_back(prop + ": " + print(t) + (extra.empty() ? "" : " (" + extra + ")"));
    };
    for (std::size_t i = 0; i < count; ++i) {
        TyPtr ty = gen.type();
        Context ctx;
        if (i % 3 == 1) ctx = {{"u", nat_ty()}};
        if (i % 3 == 2) ctx = {{"u", nat_ty()}, {"g", arrow_ty(nat_ty(), nat_ty())}};
        bool config = i % 2 == 1;
        TermPtr t = config ? gen.configuration(ctx, ty) : gen.term(ctx, ty);
        ++rep.terms;
        try {
            TypedTerm tt = typecheck(ctx, t);
            // Unique typing, also under exchange and weakening.
            Context perm(ctx.rbegin(), ctx.rend());
            perm.emplace_back("w_unused", arrow_ty(nat_ty(), nat_ty()));
            TypedTerm t2 = typecheck(perm, t);
            ++rep.checks;
            if (!ty_eq(tt.ty, ty) || !ty_eq(t2.ty, tt.ty) || t2.exec != tt.exec || t2.cls != tt.cls)
                fail("unique typing", t);
            // Subject reduction along every redex.
            auto rs = redexes(t);
            for (const auto& r : rs) {
                ++rep.checks;
                TermPtr s = step_beta_theta(t, r.path);
                TypedTerm st = typecheck(ctx, s);
                if (!ty_eq(st.ty, tt.ty)) fail("subject reduction", t, to_string(r.path));
            }
            // Distinct reduction orders rejoin.
            TermPtr nf = normal_form(t);
            ++rep.checks;
            if (typecheck(ctx, nf).cls != TermClass::Value) fail("nf is value", t, print(nf));
            if (rs.size() >= 2) {
                ++rep.checks;
                TermPtr a = step_beta_theta(t, rs.front().path), b = step_beta_theta(t, rs.back().path);
                if (!alpha_eq(normal_form(a), normal_form(b))) fail("diamond", t);
            }
            std::mt19937_64 r1(seed + i), r2(seed + i + 7919);
            ++rep.checks;
            if (!alpha_eq(normal_form(random_steps(t, 12, r1)), normal_form(random_steps(t, 12, r2))) ||
                !alpha_eq(normal_form(random_steps(t, 12, r1)), nf))
                fail("church-rosser", t);
            // Operational steps.
            if (tt.cls == TermClass::Configuration) {
                TypedTerm cur = tt;
                while (cur.cls != TermClass::Value) {
                    ++rep.checks;
                    TermPtr seq = sequential_op(cur.raw);
                    OpStep st = op_step(cur);
                    if (st.term.exec + 1 != cur.exec) fail("exec decrement", cur.raw);
                    if (!alpha_eq(seq, st.term.raw)) fail("op_step uniqueness", cur.raw, print(seq));
                    if (!alpha_eq(normal_form(st.term.raw), nf)) fail("op_step preserves nf", cur.raw);
                    cur = st.term;
                }
                ++rep.checks;
                if (cur.exec != 0 || !alpha_eq(cur.raw, nf)) fail("op_step reaches nf", t);
            }
        } catch (const std::exception& e) {
            fail("exception", t, e.what());
        }
    }
    return rep;
}

}  // namespace hm::syntax

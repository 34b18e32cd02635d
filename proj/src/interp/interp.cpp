#include "hm/interp/interp.hpp"

#include "hm/games/basic.hpp"

#include <algorithm>

namespace hm::interp {

using syntax::Context;
using syntax::TermKind;
using syntax::TermPtr;
using syntax::TyPtr;

namespace {

class ThetaStrategy final : public Strategy {
public:
    explicit ThetaStrategy(std::uint64_t shift)
        : shift_(shift), game_(lollipop(bang(with(nat(), power(nat()))), nat())) {}

    GamePtr game() const override { return game_; }

    // Positions: q · q_scrut · n · q_n · m, each later move justified as in PCF's case.
    std::optional<Entry> next(const JSeq& s) const override {
        if (s.size() == 1 && s[0].move == question().under(Tag::right()))
            return make_entry(*game_, at({Tag::left(), Tag::bang(0), Tag::left()}, question()), 0);
        if (s.size() == 3 && s[2].pointer == std::size_t{1}) {
            auto n = numeral_value(s[2].move);
            if (!n) return std::nullopt;
            return make_entry(*game_, at({Tag::left(), Tag::bang(1), Tag::right(), Tag::at(*n)}, question()), 0);
        }
        if (s.size() == 5 && s[4].pointer == std::size_t{3}) {
            auto m = numeral_value(s[4].move);
            if (!m) return std::nullopt;
            return make_entry(*game_, numeral(*m + shift_).under(Tag::right()), 0);
        }
        return std::nullopt;
    }

    nlohmann::json meta() const override {
        nlohmann::json j = {{"op", "theta"}};
        if (shift_) j["shift"] = shift_;
        return j;
    }

private:
    static MoveId at(std::initializer_list<Tag> outer_first, MoveId m) {
        std::vector<Tag> tags(outer_first);
        for (auto it = tags.rbegin(); it != tags.rend(); ++it) m = m.under(*it);
        return m;
    }

    std::uint64_t shift_;
    GamePtr game_;
};

// Projection of variable i (0-based, counted from the outermost binding) out of !⟦Γ⟧.
Morphism variable(const Context& ctx, std::size_t i) {
    GamePtr a = interp_type(ctx[i].second);
    GamePtr g = lollipop(bang(interp_ctx(ctx)), a);
    std::vector<Tag> inner{Tag::left(), Tag::bang(0)};
    for (std::size_t k = i + 1; k < ctx.size(); ++k) inner.push_back(Tag::left());
    inner.push_back(Tag::right());
    auto partner = [inner](const MoveId& m) -> std::optional<MoveId> {
        if (m.starts_with(TagKind::Right)) {
            MoveId out = m.tail();
            for (auto it = inner.rbegin(); it != inner.rend(); ++it) out = out.under(*it);
            return out;
        }
        if (m.path.size() < inner.size() || !std::equal(inner.begin(), inner.end(), m.path.begin())) return std::nullopt;
        MoveId out = m;
        out.path.erase(out.path.begin(), out.path.begin() + static_cast<std::ptrdiff_t>(inner.size()));
        return out.under(Tag::right());
    };
    return morphism(copycat_with(std::move(g), partner, "var:" + ctx[i].first));
}

unsigned exec_of(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Lam: return exec_of(t->a);
        case TermKind::App: return std::max(exec_of(t->a), exec_of(t->b)) + 1;
        default: return 0;
    }
}

unsigned family_exec(const syntax::Family& f) {
    unsigned e = exec_of(f.body);
    for (const auto& [k, m] : f.overrides) e = std::max(e, exec_of(m));
    return e;
}

struct Interp {
    Options opt;

    Morphism go(const Context& ctx, const TermPtr& t) const {
        switch (t->kind) {
            case TermKind::Num: return morphism(constant(bang(interp_ctx(ctx)), t->n));
            case TermKind::Var: {
                for (std::size_t i = ctx.size(); i-- > 0;)
                    if (ctx[i].first == t->name) return variable(ctx, i);
                throw StructuralError("interp: unbound variable " + t->name);
            }
            case TermKind::Lam: {
                Context inner = ctx;
                inner.emplace_back(t->name, t->ty);
                return curry(go(inner, t->a));
            }
            case TermKind::App: return apply_sem(go(ctx, t->b), go(ctx, t->a));
            case TermKind::Case: return case_node(ctx, t);
            case TermKind::Sym:
            case TermKind::Iter: break;
        }
        throw StructuralError("interp: family placeholder outside its family");
    }

    Morphism case_node(const Context& ctx, const TermPtr& t) const {
        Morphism scrut = go(ctx, t->a);
        auto fam = t->fam;
        Options o = opt;
        StrategyFamily members = [fam, ctx, o](std::uint64_t n) {
            return Interp{o}.go(ctx, syntax::instance(*fam, n)).strat;
        };
        Morphism branches{scrut.dom, power(nat()), pairing_family_strat(members, family_exec(*fam))};
        Morphism body = then(pair(scrut, branches), morphism(theta(opt.theta_shift)));
        if (!opt.hide_cases) return body;
        return {body.dom, body.cod, hide_strategy(body.strat, Depth::omega())};
    }
};

}  // namespace

GamePtr interp_type(const TyPtr& a) {
    if (a->is_nat()) return nat();
    return arrow(interp_type(a->dom), interp_type(a->cod));
}

GamePtr interp_ctx(const Context& ctx) {
    GamePtr g = terminal();
    for (const auto& [x, a] : ctx) g = with(g, interp_type(a));
    return g;
}

StrategyPtr theta(std::uint64_t shift) { return std::make_shared<ThetaStrategy>(shift); }

Morphism apply_sem(const Morphism& tau, const Morphism& sigma) {
    return then(pair(sigma, tau), ev(tau.cod, sigma.cod->interface().cod));
}

Morphism interp_term(const Context& ctx, const TermPtr& t, const Options& o) { return Interp{o}.go(ctx, t); }

Morphism interp_term(const syntax::TypedTerm& j, const Options& o) { return interp_term(j.ctx, j.raw, o); }

}  // namespace hm::interp

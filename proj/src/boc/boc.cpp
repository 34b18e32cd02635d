#include "hm/boc/boc.hpp"

#include "hm/games/basic.hpp"

namespace hm {

namespace {

const IndexedGame* as_bang(const GamePtr& g) {
    auto* b = dynamic_cast<const IndexedGame*>(g.get());
    return b && b->kind() == "bang" ? b : nullptr;
}

MoveId wrap(MoveId m, std::initializer_list<Tag> outer_first) {
    std::vector<Tag> tags(outer_first);
    for (auto it = tags.rbegin(); it != tags.rend(); ++it) m = m.under(*it);
    return m;
}

// Strips `n` leading tags when they match `expect`.
std::optional<MoveId> strip(const MoveId& m, std::initializer_list<Tag> expect) {
    if (m.path.size() < expect.size()) return std::nullopt;
    std::size_t k = 0;
    for (const Tag& t : expect)
        if (m.path[k++] != t) return std::nullopt;
    MoveId out = m;
    out.path.erase(out.path.begin(), out.path.begin() + static_cast<std::ptrdiff_t>(expect.size()));
    return out;
}

Morphism projection(GamePtr a, GamePtr b, bool second) {
    GamePtr g = lollipop(bang(with(a, b)), second ? b : a);
    Tag side = second ? Tag::right() : Tag::left();
    auto partner = [side](const MoveId& m) -> std::optional<MoveId> {
        if (auto x = strip(m, {Tag::right()})) return wrap(*x, {Tag::left(), Tag::bang(0), side});
        if (auto x = strip(m, {Tag::left(), Tag::bang(0), side})) return wrap(*x, {Tag::right()});
        return std::nullopt;
    };
    return morphism(copycat_with(std::move(g), partner, second ? "proj2" : "proj1"));
}

}  // namespace

GamePtr arrow(GamePtr a, GamePtr b) { return lollipop(bang(std::move(a)), std::move(b)); }

Morphism morphism(StrategyPtr s) {
    Interface i = s->game()->interface();
    auto* d = as_bang(i.dom);
    if (!d) throw ConstructionError("morphism: the strategy's domain is not of the form !A");
    return {d->inner(), i.cod, std::move(s)};
}

bool is_value(const Morphism& f) { return f.strat->game()->normalized(); }

Morphism identity(GamePtr a) { return morphism(dereliction(std::move(a))); }

Morphism then(const Morphism& f, const Morphism& g) {
    if (!same_game(f.cod, g.dom)) throw ConstructionError("composition: codomain and domain differ");
    return {f.dom, g.cod, concat_strat(promotion_strat(f.strat), g.strat)};
}

Morphism pair(const Morphism& f, const Morphism& g) {
    return {f.dom, with(f.cod, g.cod), pairing_strat(f.strat, g.strat)};
}

Morphism proj1(GamePtr a, GamePtr b) { return projection(std::move(a), std::move(b), false); }
Morphism proj2(GamePtr a, GamePtr b) { return projection(std::move(a), std::move(b), true); }

Morphism curry(const Morphism& f) { return morphism(curry(f.strat)); }

Morphism ev(GamePtr b, GamePtr c) {
    // der on B ⇒ C with the argument's threads moved to the B component, shifted past thread 0.
    GamePtr fn = arrow(b, c);
    GamePtr g = lollipop(bang(with(fn, b)), c);
    auto partner = [](const MoveId& m) -> std::optional<MoveId> {
        if (auto x = strip(m, {Tag::right()})) return wrap(*x, {Tag::left(), Tag::bang(0), Tag::left(), Tag::right()});
        if (auto x = strip(m, {Tag::left(), Tag::bang(0), Tag::left(), Tag::right()})) return wrap(*x, {Tag::right()});
        if (auto x = strip(m, {Tag::left(), Tag::bang(0), Tag::left(), Tag::left()})) {
            if (!x->starts_with(TagKind::BangIndex)) return std::nullopt;
            CopyIndex i = x->path.front().index;
            return wrap(x->tail(), {Tag::left(), Tag::bang(i + 1), Tag::right()});
        }
        if (m.path.size() >= 3 && m.starts_with(TagKind::Left) && m.path[1].kind == TagKind::BangIndex &&
            m.path[1].index > 0 && m.path[2] == Tag::right()) {
            MoveId x = m;
            x.path.erase(x.path.begin(), x.path.begin() + 3);
            return wrap(x, {Tag::left(), Tag::bang(0), Tag::left(), Tag::left(), Tag::bang(m.path[1].index - 1)});
        }
        return std::nullopt;
    };
    return morphism(copycat_with(std::move(g), partner, "ev"));
}

Morphism evaluate_once(const Morphism& f) { return {f.dom, f.cod, hide_strategy(f.strat, Depth(1))}; }

std::variant<Evaluated, Divergent> evaluate_to_value(const Morphism& f, std::size_t fuel) {
    Evaluated e{f, 0};
    while (!is_value(e.value)) {
        if (e.steps == fuel) return Divergent{fuel};
        e.value = evaluate_once(e.value);
        ++e.steps;
    }
    return e;
}

EquivVerdict ext_equiv(const Morphism& f, const Morphism& g, const ProbeBounds& b) {
    EquivVerdict v;
    if (!same_game(f.dom, g.dom) || !same_game(f.cod, g.cod)) {
        v.tag = EquivVerdict::Tag::Distinguished;
        v.side = "interface";
        v.reason = "morphisms have different types";
        return v;
    }
    auto vf = evaluate_to_value(f, b.fuel);
    auto vg = evaluate_to_value(g, b.fuel);
    if (std::holds_alternative<Divergent>(vf) || std::holds_alternative<Divergent>(vg)) {
        v.tag = EquivVerdict::Tag::Inconclusive;
        v.reason = "evaluation did not reach a value within the fuel";
        return v;
    }
    return strat_equiv(*std::get<Evaluated>(vf).value.strat, *std::get<Evaluated>(vg).value.strat, b);
}

nlohmann::json to_json(const BoCReport& r) {
    nlohmann::json j = {{"law", r.law}, {"holds", r.holds}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (!r.witness.empty()) j["witness"] = to_json(r.witness);
    return j;
}

}  // namespace hm

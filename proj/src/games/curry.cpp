#include "hm/games/basic.hpp"
#include "hm/games/composite.hpp"

namespace hm {

namespace {

const BinaryGame* as_binary(const GamePtr& g, const char* kind) {
    auto* b = dynamic_cast<const BinaryGame*>(g.get());
    return b && b->kind() == kind ? b : nullptr;
}

const IndexedGame* as_bang(const GamePtr& g) {
    auto* b = dynamic_cast<const IndexedGame*>(g.get());
    return b && b->kind() == "bang" ? b : nullptr;
}

// path[0..n) followed by `tags` then path[k..).
MoveId splice(const MoveId& m, std::size_t k, std::initializer_list<Tag> tags) {
    MoveId out{m.base, {}};
    out.path.insert(out.path.end(), tags.begin(), tags.end());
    out.path.insert(out.path.end(), m.path.begin() + static_cast<std::ptrdiff_t>(k), m.path.end());
    return out;
}

}  // namespace

CurryGame::CurryGame(GamePtr g, bool uncurry) : inner_(std::move(g)), uncurry_(uncurry) {
    Interface i = inner_->interface();
    if (!uncurry_) {
        auto* dom = as_bang(i.dom);
        auto* prod = dom ? as_binary(dom->inner(), "with") : nullptr;
        if (!prod) throw ConstructionError("currying: H^ω(G) is not of the shape !(Γ & A) ⊸ B");
        iface_ = {bang(prod->left()), lollipop(bang(prod->right()), i.cod)};
    } else {
        auto* dom = as_bang(i.dom);
        auto* fn = as_binary(i.cod, "lollipop");
        auto* arg = fn ? as_bang(fn->left()) : nullptr;
        if (!dom || !arg) throw ConstructionError("uncurrying: H^ω(G) is not of the shape !Γ ⊸ (!A ⊸ B)");
        iface_ = {bang(with(dom->inner(), arg->inner())), fn->right()};
    }
}

std::optional<MoveId> CurryGame::to_inner(const MoveId& m) const {
    const auto& p = m.path;
    auto is = [&](std::size_t k, TagKind kind) { return p.size() > k && p[k].kind == kind; };
    if (!is(0, TagKind::Left) && !is(0, TagKind::Right)) return m;
    if (!uncurry_) {
        // !Γ ⊸ (!A ⊸ B) → !(Γ & A) ⊸ B
        if (is(0, TagKind::Left) && is(1, TagKind::BangIndex))
            return splice(m, 2, {Tag::left(), p[1], Tag::left()});
        if (is(0, TagKind::Right) && is(1, TagKind::Left) && is(2, TagKind::BangIndex))
            return splice(m, 3, {Tag::left(), p[2], Tag::right()});
        if (is(0, TagKind::Right) && is(1, TagKind::Right)) return splice(m, 2, {Tag::right()});
        return std::nullopt;
    }
    // !(Γ & A) ⊸ B → !Γ ⊸ (!A ⊸ B)
    if (is(0, TagKind::Left) && is(1, TagKind::BangIndex) && p.size() > 2) {
        const CopyIndex& c = p[1].index;
        bool even = (c % 2) == 0;
        if (p[2].kind == TagKind::Left && even) return splice(m, 3, {Tag::left(), Tag::bang(c / 2)});
        if (p[2].kind == TagKind::Right && !even)
            return splice(m, 3, {Tag::right(), Tag::left(), Tag::bang((c - 1) / 2)});
        return std::nullopt;
    }
    if (is(0, TagKind::Right)) return splice(m, 1, {Tag::right(), Tag::right()});
    return std::nullopt;
}

MoveId CurryGame::to_outer(const MoveId& m) const {
    const auto& p = m.path;
    auto is = [&](std::size_t k, TagKind kind) { return p.size() > k && p[k].kind == kind; };
    if (!is(0, TagKind::Left) && !is(0, TagKind::Right)) return m;
    if (!uncurry_) {
        if (is(0, TagKind::Left) && is(1, TagKind::BangIndex) && is(2, TagKind::Left))
            return splice(m, 3, {Tag::left(), p[1]});
        if (is(0, TagKind::Left) && is(1, TagKind::BangIndex) && is(2, TagKind::Right))
            return splice(m, 3, {Tag::right(), Tag::left(), p[1]});
        if (is(0, TagKind::Right)) return splice(m, 1, {Tag::right(), Tag::right()});
        throw StructuralError("currying: unexpected move " + to_string(m));
    }
    if (is(0, TagKind::Left) && is(1, TagKind::BangIndex))
        return splice(m, 2, {Tag::left(), Tag::bang(p[1].index * 2), Tag::left()});
    if (is(0, TagKind::Right) && is(1, TagKind::Left) && is(2, TagKind::BangIndex))
        return splice(m, 3, {Tag::left(), Tag::bang(p[2].index * 2 + 1), Tag::right()});
    if (is(0, TagKind::Right) && is(1, TagKind::Right)) return splice(m, 2, {Tag::right()});
    throw StructuralError("uncurrying: unexpected move " + to_string(m));
}

std::optional<Routed> CurryGame::route(const MoveId& m, const Label& l) const {
    auto inner = to_inner(m);
    if (!inner) return std::nullopt;
    return Routed{0, false, std::move(*inner), l};
}

MoveId CurryGame::lift(const CopyIndex&, const MoveId& inner) const { return to_outer(inner); }

std::optional<Label> CurryGame::label(const MoveId& m) const {
    auto inner = to_inner(m);
    if (!inner) return std::nullopt;
    return inner_->label(*inner);
}

bool CurryGame::enables(const MoveId* from, const MoveId& to) const {
    auto t = to_inner(to);
    if (!t) return false;
    if (from == nullptr) return inner_->enables(nullptr, *t);
    auto f = to_inner(*from);
    return f && inner_->enables(&*f, *t);
}

std::vector<MoveId> CurryGame::enabled_moves(const MoveId* from, const MoveProbes& probes) const {
    std::optional<MoveId> f;
    if (from != nullptr) {
        f = to_inner(*from);
        if (!f) return {};
    }
    std::vector<MoveId> out;
    for (const auto& m : inner_->enabled_moves(f ? &*f : nullptr, probes)) out.push_back(to_outer(m));
    return out;
}

bool CurryGame::is_position(const JSeq& s) const {
    auto r = restrict(s, 0);
    if (r.seq.size() != s.size()) return false;
    return inner_->is_position(r.seq);
}

nlohmann::json CurryGame::describe() const {
    return {{"kind", kind()}, {"children", {inner_->describe()}}};
}

GamePtr CurryGame::hide_by(unsigned d) const {
    GamePtr h = hide_game(inner_, d);
    return uncurry_ ? uncurry(h) : curry(h);
}

GamePtr curry(GamePtr g) { return std::make_shared<CurryGame>(std::move(g), false); }
GamePtr uncurry(GamePtr g) { return std::make_shared<CurryGame>(std::move(g), true); }

}  // namespace hm

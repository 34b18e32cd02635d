#include "hm/games/basic.hpp"
#include "hm/games/composite.hpp"

namespace hm {

PairingGame::PairingGame(GamePtr l, GamePtr r) : left_(std::move(l)), right_(std::move(r)) {
    if (!same_game(left_->interface().dom, right_->interface().dom))
        throw ConstructionError("pairing: constituents do not share a domain C in C ⊸ A, C ⊸ B");
}

PairingGame::PairingGame(GameFamily family, unsigned mu)
    : family_(std::move(family)), family_mu_(mu) {
    (void)member(0)->interface();
}

GamePtr PairingGame::member(const CopyIndex& c) const {
    if (!family_) return c == 0 ? left_ : right_;
    auto n = c.convert_to<std::uint64_t>();
    std::lock_guard lock(memo_mutex_);
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    GamePtr g = family_(n);
    if (g->mu() > family_mu_) throw ConstructionError("pairing family: member exceeds declared mu");
    return memo_.emplace(n, std::move(g)).first->second;
}

Tag PairingGame::side_tag(const CopyIndex& c) const {
    if (family_) return Tag::at(c);
    return c == 0 ? Tag::left() : Tag::right();
}

Tag PairingGame::part_tag(const CopyIndex& c) const { return Tag::part(family_ ? c : c + 1); }

std::optional<Routed> PairingGame::route(const MoveId& m, const Label& l) const {
    if (m.path.empty()) return std::nullopt;
    const Tag& head = m.path.front();
    if (head.kind == TagKind::Left) return Routed{0, true, m, l};
    if (head.kind == TagKind::Right) {
        if (m.path.size() < 2) return std::nullopt;
        const Tag& side = m.path[1];
        MoveId inner{m.base, std::vector<Tag>(m.path.begin() + 2, m.path.end())};
        inner = inner.under(Tag::right());
        if (family_ && side.kind == TagKind::Index) return Routed{side.index, false, inner, l};
        if (!family_ && side.kind == TagKind::Left) return Routed{0, false, inner, l};
        if (!family_ && side.kind == TagKind::Right) return Routed{1, false, inner, l};
        return std::nullopt;
    }
    if (head.kind == TagKind::Part) {
        CopyIndex c = family_ ? head.index : head.index - 1;
        if (!family_ && c != 0 && c != 1) return std::nullopt;
        return Routed{c, false, m.tail(), l};
    }
    return std::nullopt;
}

MoveId PairingGame::lift(const CopyIndex& c, const MoveId& inner) const {
    if (inner.starts_with(TagKind::Left)) return inner;
    if (inner.starts_with(TagKind::Right)) return inner.tail().under(side_tag(c)).under(Tag::right());
    return inner.under(part_tag(c));
}

std::optional<Label> PairingGame::label(const MoveId& m) const {
    auto r = route(m, Label{});
    if (!r) return std::nullopt;
    return member(r->component)->label(r->move);
}

bool PairingGame::enables(const MoveId* from, const MoveId& to) const {
    auto t = route(to, Label{});
    if (!t) return false;
    if (from == nullptr) return !t->shared && member(t->component)->enables(nullptr, t->move);
    auto f = route(*from, Label{});
    if (!f) return false;
    if (f->shared && t->shared) return member(0)->enables(&f->move, t->move);
    if (!f->shared && !t->shared && f->component != t->component) return false;
    const CopyIndex& c = f->shared ? t->component : f->component;
    return member(c)->enables(&f->move, t->move);
}

unsigned PairingGame::mu() const {
    if (family_) return family_mu_;
    return std::max(left_->mu(), right_->mu());
}

std::vector<MoveId> PairingGame::enabled_moves(const MoveId* from, const MoveProbes& probes) const {
    std::vector<MoveId> out;
    auto add = [&](const CopyIndex& c, const MoveId* inner) {
        for (const auto& m : member(c)->enabled_moves(inner, probes)) out.push_back(lift(c, m));
    };
    if (from == nullptr) {
        if (family_) {
            for (auto n : probes.numerals) add(n, nullptr);
        } else {
            add(0, nullptr);
            add(1, nullptr);
        }
        return out;
    }
    auto f = route(*from, Label{});
    if (!f) return {};
    add(f->shared ? CopyIndex(0) : f->component, &f->move);
    return out;
}

bool PairingGame::is_position(const JSeq& s) const {
    if (s.empty()) return true;
    if (!check_legal(s, *this).ok()) return false;
    std::optional<CopyIndex> side;
    for (const auto& e : s) {
        auto r = route(e.move, e.label);
        if (!r) return false;
        if (r->shared) continue;
        if (side && *side != r->component) return false;
        side = r->component;
    }
    if (!side) return false;
    return member(*side)->is_position(restrict(s, *side).seq);
}

nlohmann::json PairingGame::describe() const {
    if (family_)
        return {{"kind", "pairing_family"}, {"mu", family_mu_}, {"member0", member(0)->describe()}};
    return {{"kind", "pairing"}, {"children", {left_->describe(), right_->describe()}}};
}

GamePtr PairingGame::hide_by(unsigned d) const {
    if (!family_) return pairing(hide_game(left_, d), hide_game(right_, d));
    GameFamily f = family_;
    return pairing_family([f, d](std::uint64_t n) { return hide_game(f(n), d); },
                          monus(family_mu_, d));
}

Interface PairingGame::interface() const {
    Interface first = member(0)->interface();
    if (family_) return {first.dom, power(first.cod)};
    return {first.dom, with(first.cod, right_->interface().cod)};
}

GamePtr pairing(GamePtr l, GamePtr r) {
    return std::make_shared<PairingGame>(std::move(l), std::move(r));
}

GamePtr pairing_family(GameFamily members, unsigned mu) {
    return std::make_shared<PairingGame>(std::move(members), mu);
}

}  // namespace hm

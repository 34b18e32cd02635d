#include "hm/games/game.hpp"

namespace hm {

Interface Game::interface() const {
    throw ConstructionError(kind() + " is not shaped like a function space");
}

std::optional<Routed> Game::route(const MoveId&, const Label&) const { return std::nullopt; }

MoveId Game::lift(const CopyIndex&, const MoveId&) const {
    throw StructuralError(kind() + " has no constituents");
}

Label Game::lift_label(const CopyIndex&, const MoveId&, const Label& l) const { return l; }

Restriction Game::restrict(const JSeq& s, const CopyIndex& component) const {
    Restriction out;
    std::vector<std::optional<std::size_t>> renumber(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto r = route(s[i].move, s[i].label);
        if (!r || !(r->shared || r->component == component)) continue;
        Entry e{std::move(r->move), r->label, std::nullopt};
        if (s[i].pointer) e.pointer = renumber[*s[i].pointer];
        renumber[i] = out.seq.size();
        out.seq.push_back(std::move(e));
        out.origin.push_back(i);
    }
    return out;
}

GamePtr hide_game(const GamePtr& g, Depth d) {
    unsigned k = d.resolve(g->mu());
    if (k == 0 || g->normalized()) return g;
    return g->hide_by(k);
}

bool same_game(const GamePtr& a, const GamePtr& b) {
    return a == b || a->type_key() == b->type_key();
}

}  // namespace hm

#include "hm/games/basic.hpp"
#include "hm/games/composite.hpp"

#include <set>

namespace hm {

DaggerGame::DaggerGame(GamePtr g) : inner_(std::move(g)) {
    if (inner_->interface().dom->kind() != "bang")
        throw ConstructionError("promotion: H^ω(G) is not of the shape !A ⊸ B");
}

std::optional<Routed> DaggerGame::route(const MoveId& m, const Label& l) const {
    if (m.path.empty()) return std::nullopt;
    const Tag& head = m.path.front();
    if (head.kind == TagKind::Thread) return Routed{head.index, false, m.tail(), l};
    if (m.path.size() < 2 || m.path[1].kind != TagKind::BangIndex) return std::nullopt;
    MoveId rest{m.base, std::vector<Tag>(m.path.begin() + 2, m.path.end())};
    if (head.kind == TagKind::Right) return Routed{m.path[1].index, false, rest.under(Tag::right()), l};
    if (head.kind == TagKind::Left) {
        auto [i, j] = cantor_unpair(m.path[1].index);
        return Routed{i, false, rest.under(Tag::bang(j)).under(Tag::left()), l};
    }
    return std::nullopt;
}

MoveId DaggerGame::lift(const CopyIndex& i, const MoveId& inner) const {
    if (inner.starts_with(TagKind::Right)) return inner.tail().under(Tag::bang(i)).under(Tag::right());
    if (inner.starts_with(TagKind::Left)) {
        MoveId rest = inner.tail();
        if (!rest.starts_with(TagKind::BangIndex))
            throw StructuralError("promotion: domain move outside !A: " + to_string(inner));
        CopyIndex j = rest.path.front().index;
        return rest.tail().under(Tag::bang(cantor_pair(i, j))).under(Tag::left());
    }
    return inner.under(Tag::thread(i));
}

std::optional<Label> DaggerGame::label(const MoveId& m) const {
    auto r = route(m, Label{});
    if (!r) return std::nullopt;
    return inner_->label(r->move);
}

bool DaggerGame::enables(const MoveId* from, const MoveId& to) const {
    auto t = route(to, Label{});
    if (!t) return false;
    if (from == nullptr) return inner_->enables(nullptr, t->move);
    auto f = route(*from, Label{});
    return f && f->component == t->component && inner_->enables(&f->move, t->move);
}

std::vector<MoveId> DaggerGame::enabled_moves(const MoveId* from, const MoveProbes& probes) const {
    std::vector<MoveId> out;
    if (from == nullptr) {
        auto init = inner_->enabled_moves(nullptr, probes);
        for (unsigned i = 0; i <= probes.max_copy_index; ++i)
            for (const auto& m : init) out.push_back(lift(i, m));
        return out;
    }
    auto f = route(*from, Label{});
    if (!f) return {};
    for (const auto& m : inner_->enabled_moves(&f->move, probes)) out.push_back(lift(f->component, m));
    return out;
}

bool DaggerGame::is_position(const JSeq& s) const {
    if (!check_legal(s, *this).ok()) return false;
    std::set<CopyIndex> threads;
    for (const auto& e : s) threads.insert(route(e.move, e.label)->component);
    for (const auto& i : threads)
        if (!inner_->is_position(restrict(s, i).seq)) return false;
    return true;
}

nlohmann::json DaggerGame::describe() const {
    return {{"kind", "dagger"}, {"children", {inner_->describe()}}};
}

GamePtr DaggerGame::hide_by(unsigned d) const { return dagger(hide_game(inner_, d)); }

Interface DaggerGame::interface() const {
    Interface i = inner_->interface();
    return {i.dom, bang(i.cod)};
}

GamePtr dagger(GamePtr g) { return std::make_shared<DaggerGame>(std::move(g)); }

}  // namespace hm

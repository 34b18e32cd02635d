#include "hm/games/basic.hpp"
#include "hm/games/composite.hpp"

namespace hm {

namespace {

Label shifted(Label l, unsigned by, bool up) {
    l.degree = up ? l.degree + by : monus(l.degree, by);
    return l;
}

}  // namespace

ConcatGame::ConcatGame(GamePtr j, GamePtr k) : j_(std::move(j)), k_(std::move(k)) {
    Interface ij = j_->interface();
    Interface ik = k_->interface();
    if (!same_game(ij.cod, ik.dom))
        throw ConstructionError("concatenation: H^ω(J) ⊴ A ⊸ B and H^ω(K) ⊴ B ⊸ C disagree on B");
    if (auto* lj = dynamic_cast<const BinaryGame*>(j_.get()); lj && !lj->right()->normalized())
        throw ConstructionError("concatenation: the middle game B is not normalized");
    middle_ = ij.cod;
    shift_ = std::max(j_->mu(), k_->mu()) + 1;
}

std::optional<Routed> ConcatGame::route(const MoveId& m, const Label& l) const {
    if (m.path.empty()) return std::nullopt;
    const Tag& head = m.path.front();
    switch (head.kind) {
        case TagKind::Left: return Routed{0, false, m, l};
        case TagKind::Right: return Routed{1, false, m, l};
        case TagKind::Copy:
            if (head.index == 1) return Routed{0, false, m.tail().under(Tag::right()), shifted(l, shift_, false)};
            if (head.index == 2) return Routed{1, false, m.tail().under(Tag::left()), shifted(l, shift_, false)};
            return std::nullopt;
        case TagKind::ConcatSide:
            if (head.index == 1 || head.index == 2) return Routed{head.index - 1, false, m.tail(), l};
            return std::nullopt;
        default: return std::nullopt;
    }
}

MoveId ConcatGame::lift(const CopyIndex& c, const MoveId& inner) const {
    bool first = c == 0;
    if (inner.starts_with(first ? TagKind::Left : TagKind::Right)) return inner;
    if (inner.starts_with(first ? TagKind::Right : TagKind::Left))
        return inner.tail().under(Tag::copy(first ? 1 : 2));
    return inner.under(Tag::side(first ? 1 : 2));
}

Label ConcatGame::lift_label(const CopyIndex& c, const MoveId& inner, const Label& l) const {
    bool middle = inner.starts_with(c == 0 ? TagKind::Right : TagKind::Left);
    return middle ? shifted(l, shift_, true) : l;
}

std::optional<Label> ConcatGame::label(const MoveId& m) const {
    auto r = route(m, Label{});
    if (!r) return std::nullopt;
    auto l = (r->component == 0 ? j_ : k_)->label(r->move);
    if (!l) return std::nullopt;
    return lift_label(r->component, r->move, *l);
}

bool ConcatGame::enables(const MoveId* from, const MoveId& to) const {
    auto t = route(to, Label{});
    if (!t) return false;
    if (from == nullptr) return t->component == 1 && k_->enables(nullptr, t->move);
    auto f = route(*from, Label{});
    if (!f) return false;
    if (f->component == t->component)
        return (f->component == 0 ? j_ : k_)->enables(&f->move, t->move);
    // Initial moves of B^[2] enable initial moves of B^[1].
    return from->starts_with(TagKind::Copy) && from->path.front().index == 2 &&
           to.starts_with(TagKind::Copy) && to.path.front().index == 1 &&
           middle_->enables(nullptr, from->tail()) && middle_->enables(nullptr, to.tail());
}

std::vector<MoveId> ConcatGame::enabled_moves(const MoveId* from, const MoveProbes& probes) const {
    std::vector<MoveId> out;
    if (from == nullptr) {
        for (const auto& m : k_->enabled_moves(nullptr, probes)) out.push_back(lift(1, m));
        return out;
    }
    auto f = route(*from, Label{});
    if (!f) return {};
    const GamePtr& g = f->component == 0 ? j_ : k_;
    for (const auto& m : g->enabled_moves(&f->move, probes)) out.push_back(lift(f->component, m));
    if (from->starts_with(TagKind::Copy) && from->path.front().index == 2 &&
        middle_->enables(nullptr, from->tail()))
        for (const auto& b : middle_->enabled_moves(nullptr, probes)) out.push_back(b.under(Tag::copy(1)));
    return out;
}

bool ConcatGame::middle_is_copycat(const JSeq& s) const {
    std::vector<std::size_t> mid;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i].move.starts_with(TagKind::Copy)) mid.push_back(i);
    // Position of each middle entry within its own copy, for pointer comparison.
    std::vector<std::optional<std::size_t>> local(s.size());
    std::size_t count[2] = {0, 0};
    for (std::size_t k = 0; k < mid.size(); ++k) {
        const Entry& e = s[mid[k]];
        int copy = e.move.path.front().index == 1 ? 0 : 1;
        local[mid[k]] = count[copy]++;
        if (k % 2 == 0) {
            if (e.label.owner != Owner::P) return false;
            continue;
        }
        const Entry& orig = s[mid[k - 1]];
        if (e.label.owner != Owner::O) return false;
        if (orig.move.path.front().index == e.move.path.front().index) return false;
        if (e.move.tail() != orig.move.tail()) return false;
        auto within = [&](const Entry& x) -> std::optional<std::size_t> {
            if (!x.pointer || !s[*x.pointer].move.starts_with(TagKind::Copy) ||
                s[*x.pointer].move.path.front().index != x.move.path.front().index)
                return std::nullopt;
            return local[*x.pointer];
        };
        if (within(e) != within(orig)) return false;
        if (!within(e) && e.move.path.front().index == 1 && e.pointer != mid[k - 1]) return false;
    }
    return true;
}

bool ConcatGame::is_position(const JSeq& s) const {
    if (!check_justified(s, *this).ok()) return false;
    return middle_is_copycat(s) && j_->is_position(restrict(s, 0).seq) &&
           k_->is_position(restrict(s, 1).seq);
}

nlohmann::json ConcatGame::describe() const {
    return {{"kind", "concat"}, {"children", {j_->describe(), k_->describe()}}};
}

GamePtr ConcatGame::hide_by(unsigned d) const {
    if (d >= shift_) {
        Interface i = interface();
        return lollipop(i.dom, i.cod);
    }
    return concat(hide_game(j_, d), hide_game(k_, d));
}

Interface ConcatGame::interface() const { return {j_->interface().dom, k_->interface().cod}; }

GamePtr concat(GamePtr j, GamePtr k) { return std::make_shared<ConcatGame>(std::move(j), std::move(k)); }

}  // namespace hm

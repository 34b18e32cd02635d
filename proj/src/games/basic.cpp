#include "hm/games/basic.hpp"

#include <algorithm>

namespace hm {

namespace {

std::vector<MoveId> lift_all(const Game& g, const CopyIndex& c, std::vector<MoveId> inner) {
    for (auto& m : inner) m = g.lift(c, m);
    return inner;
}

Label flipped(Label l) {
    l.owner = flip(l.owner);
    return l;
}

}  // namespace

// ---- Terminal ----

std::optional<Label> TerminalGame::label(const MoveId&) const { return std::nullopt; }
bool TerminalGame::enables(const MoveId*, const MoveId&) const { return false; }
std::vector<MoveId> TerminalGame::enabled_moves(const MoveId*, const MoveProbes&) const { return {}; }
bool TerminalGame::is_position(const JSeq& s) const { return s.empty(); }

// ---- Flat ----

std::optional<Label> FlatGame::label(const MoveId& m) const {
    if (!m.path.empty()) return std::nullopt;
    if (m.base == "q") return Label{Owner::O, Kind::Q, 0};
    if (is_answer(m.base)) return Label{Owner::P, Kind::A, 0};
    return std::nullopt;
}

bool FlatGame::is_answer(const std::string& base) const {
    if (answers_.tokens.count(base)) return true;
    return answers_.naturals && numeral_value(MoveId{base, {}}).has_value() &&
           (base == "0" || base.front() != '0');
}

bool FlatGame::enables(const MoveId* from, const MoveId& to) const {
    if (!to.path.empty()) return false;
    if (from == nullptr) return to.base == "q";
    return from->path.empty() && from->base == "q" && is_answer(to.base);
}

std::vector<MoveId> FlatGame::enabled_moves(const MoveId* from, const MoveProbes& probes) const {
    if (from == nullptr) return {question()};
    if (!(from->path.empty() && from->base == "q")) return {};
    std::vector<MoveId> out;
    if (answers_.naturals)
        for (auto n : probes.numerals) out.push_back(numeral(n));
    for (const auto& t : answers_.tokens) out.push_back(MoveId{t, {}});
    return out;
}

bool FlatGame::is_position(const JSeq& s) const { return s.size() <= 2 && check_legal(s, *this).ok(); }

nlohmann::json FlatGame::describe() const {
    if (answers_.naturals && answers_.tokens.empty()) return {{"kind", "nat"}};
    nlohmann::json toks = nlohmann::json::array();
    for (const auto& t : answers_.tokens) toks.push_back(t);
    return {{"kind", "flat"}, {"naturals", answers_.naturals}, {"tokens", toks}};
}

// ---- Binary (tensor, with, lollipop) ----

std::optional<Routed> BinaryGame::route(const MoveId& m, const Label& l) const {
    if (m.starts_with(TagKind::Left))
        return Routed{0, false, m.tail(), flip_left_ ? flipped(l) : l};
    if (m.starts_with(TagKind::Right)) return Routed{1, false, m.tail(), l};
    return std::nullopt;
}

MoveId BinaryGame::lift(const CopyIndex& c, const MoveId& inner) const {
    return inner.under(c == 0 ? Tag::left() : Tag::right());
}

Label BinaryGame::lift_label(const CopyIndex& c, const MoveId&, const Label& l) const {
    return c == 0 && flip_left_ ? flipped(l) : l;
}

std::optional<Label> BinaryGame::label(const MoveId& m) const {
    if (m.starts_with(TagKind::Left)) {
        auto l = left_->label(m.tail());
        if (l && flip_left_) l->owner = flip(l->owner);
        return l;
    }
    if (m.starts_with(TagKind::Right)) return right_->label(m.tail());
    return std::nullopt;
}

bool BinaryGame::enables(const MoveId* from, const MoveId& to) const {
    bool to_left = to.starts_with(TagKind::Left);
    if (!to_left && !to.starts_with(TagKind::Right)) return false;
    const Game& to_game = to_left ? *left_ : *right_;
    MoveId to_inner = to.tail();
    if (from == nullptr) return !(to_left && flip_left_) && to_game.enables(nullptr, to_inner);
    bool from_left = from->starts_with(TagKind::Left);
    if (!from_left && !from->starts_with(TagKind::Right)) return false;
    MoveId from_inner = from->tail();
    if (from_left == to_left) return to_game.enables(&from_inner, to_inner);
    // Only ⊸ links sides: initial moves of the codomain enable initial moves of the domain.
    return flip_left_ && to_left && right_->enables(nullptr, from_inner) &&
           left_->enables(nullptr, to_inner);
}

unsigned BinaryGame::mu() const { return std::max(left_->mu(), right_->mu()); }

std::vector<MoveId> BinaryGame::enabled_moves(const MoveId* from, const MoveProbes& probes) const {
    if (from == nullptr) {
        auto out = lift_all(*this, 1, right_->enabled_moves(nullptr, probes));
        if (!flip_left_) {
            auto l = lift_all(*this, 0, left_->enabled_moves(nullptr, probes));
            out.insert(out.end(), l.begin(), l.end());
        }
        return out;
    }
    bool from_left = from->starts_with(TagKind::Left);
    if (!from_left && !from->starts_with(TagKind::Right)) return {};
    MoveId inner = from->tail();
    const Game& g = from_left ? *left_ : *right_;
    auto out = lift_all(*this, from_left ? 0 : 1, g.enabled_moves(&inner, probes));
    if (flip_left_ && !from_left && right_->enables(nullptr, inner)) {
        auto l = lift_all(*this, 0, left_->enabled_moves(nullptr, probes));
        out.insert(out.end(), l.begin(), l.end());
    }
    return out;
}

bool BinaryGame::is_position(const JSeq& s) const {
    if (!check_legal(s, *this).ok()) return false;
    auto l = restrict(s, 0);
    auto r = restrict(s, 1);
    if (exclusive_ && !l.seq.empty() && !r.seq.empty()) return false;
    return left_->is_position(l.seq) && right_->is_position(r.seq);
}

nlohmann::json BinaryGame::describe() const {
    return {{"kind", kind_}, {"children", {left_->describe(), right_->describe()}}};
}

GamePtr BinaryGame::hide_by(unsigned d) const {
    GamePtr r = hide_game(right_, d);
    if (kind_ == "lollipop") return lollipop(left_, r);
    GamePtr l = hide_game(left_, d);
    return kind_ == "tensor" ? tensor(l, r) : with(l, r);
}

Interface BinaryGame::interface() const {
    if (kind_ != "lollipop") return Game::interface();
    return {left_, hide_game(right_, Depth::omega())};
}

// ---- Indexed (bang, power) ----

std::optional<Routed> IndexedGame::route(const MoveId& m, const Label& l) const {
    if (!m.starts_with(tag_)) return std::nullopt;
    return Routed{m.path.front().index, false, m.tail(), l};
}

MoveId IndexedGame::lift(const CopyIndex& c, const MoveId& inner) const {
    return inner.under(Tag{tag_, c});
}

std::optional<Label> IndexedGame::label(const MoveId& m) const {
    if (!m.starts_with(tag_)) return std::nullopt;
    return inner_->label(m.tail());
}

bool IndexedGame::enables(const MoveId* from, const MoveId& to) const {
    if (!to.starts_with(tag_)) return false;
    MoveId to_inner = to.tail();
    if (from == nullptr) return inner_->enables(nullptr, to_inner);
    if (!from->starts_with(tag_) || from->path.front().index != to.path.front().index) return false;
    MoveId from_inner = from->tail();
    return inner_->enables(&from_inner, to_inner);
}

std::vector<MoveId> IndexedGame::enabled_moves(const MoveId* from, const MoveProbes& probes) const {
    std::vector<MoveId> out;
    if (from == nullptr) {
        auto init = inner_->enabled_moves(nullptr, probes);
        auto add = [&](const CopyIndex& i) {
            for (const auto& m : init) out.push_back(lift(i, m));
        };
        if (tag_ == TagKind::BangIndex) {
            for (unsigned i = 0; i <= probes.max_copy_index; ++i) add(i);
        } else {
            for (auto n : probes.numerals) add(n);
        }
        return out;
    }
    if (!from->starts_with(tag_)) return {};
    MoveId inner = from->tail();
    return lift_all(*this, from->path.front().index, inner_->enabled_moves(&inner, probes));
}

bool IndexedGame::is_position(const JSeq& s) const {
    if (!check_legal(s, *this).ok()) return false;
    std::set<CopyIndex> indices;
    for (const auto& e : s) indices.insert(e.move.path.front().index);
    if (tag_ == TagKind::Index && indices.size() > 1) return false;
    for (const auto& i : indices)
        if (!inner_->is_position(restrict(s, i).seq)) return false;
    return true;
}

nlohmann::json IndexedGame::describe() const {
    return {{"kind", tag_ == TagKind::BangIndex ? "bang" : "power"},
            {"children", {inner_->describe()}}};
}

GamePtr IndexedGame::hide_by(unsigned d) const {
    GamePtr h = hide_game(inner_, d);
    return tag_ == TagKind::BangIndex ? bang(h) : power(h);
}

// ---- Factories ----

GamePtr terminal() {
    static const GamePtr t = std::make_shared<TerminalGame>();
    return t;
}

GamePtr flat(FlatAnswers answers) { return std::make_shared<FlatGame>(std::move(answers)); }

GamePtr nat() {
    static const GamePtr n = flat(FlatAnswers{});
    return n;
}

GamePtr empty_game() { return flat(FlatAnswers{false, {}}); }

GamePtr tensor(GamePtr l, GamePtr r) {
    return std::make_shared<BinaryGame>("tensor", std::move(l), std::move(r), false, false);
}

GamePtr lollipop(GamePtr a, GamePtr b) {
    GamePtr dom = hide_game(a, Depth::omega());
    return std::make_shared<BinaryGame>("lollipop", std::move(dom), std::move(b), true, false);
}

GamePtr with(GamePtr l, GamePtr r) {
    return std::make_shared<BinaryGame>("with", std::move(l), std::move(r), false, true);
}

GamePtr power(GamePtr a) { return std::make_shared<IndexedGame>(TagKind::Index, std::move(a)); }

GamePtr bang(GamePtr a) { return std::make_shared<IndexedGame>(TagKind::BangIndex, std::move(a)); }

}  // namespace hm

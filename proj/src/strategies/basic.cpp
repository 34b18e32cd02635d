#include "detail.hpp"

#include <stdexcept>

namespace hm {

namespace detail {

MoveId path_move(std::string base, std::initializer_list<Tag> tags) { return MoveId{std::move(base), tags}; }

std::optional<Entry> delegate(const Game& outer, const CopyIndex& component, const Strategy& inner,
                              const JSeq& s) {
    Restriction r = outer.restrict(s, component);
    if (r.seq.empty() || r.origin.back() != s.size() - 1) return std::nullopt;
    auto reply = inner.next(r.seq);
    if (!reply) return std::nullopt;
    Entry out{outer.lift(component, reply->move), outer.lift_label(component, reply->move, reply->label),
              std::nullopt};
    if (reply->pointer) {
        if (*reply->pointer >= r.origin.size())
            throw StructuralError("strategy reply points outside the position");
        out.pointer = r.origin[*reply->pointer];
    }
    return out;
}

std::size_t partner_index(const JSeq& s, std::size_t j) {
    return s[j].label.owner == Owner::O ? j + 1 : j - 1;
}

}  // namespace detail

nlohmann::json to_json(const ProbeBounds& b) {
    return {{"maxPlayLen", b.max_play_len},
            {"numeralProbes", b.numeral_probes},
            {"maxCopyIndex", b.max_copy_index},
            {"fuel", b.fuel}};
}

ProbeBounds bounds_from_json(const nlohmann::json& j, ProbeBounds b) {
    if (!j.is_object()) throw DomainError("bounds: expected an object");
    auto positive = [](const nlohmann::json& v, const std::string& key) {
        if (!v.is_number_integer() || v.get<long long>() <= 0)
            throw DomainError("bounds: " + key + " must be a positive integer");
        return v.get<std::uint64_t>();
    };
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        if (k == "maxPlayLen") {
            b.max_play_len = positive(*it, k);
        } else if (k == "maxCopyIndex") {
            b.max_copy_index = static_cast<unsigned>(positive(*it, k));
        } else if (k == "fuel") {
            b.fuel = positive(*it, k);
        } else if (k == "numeralProbes") {
            if (!it->is_array() || it->empty()) throw DomainError("bounds: numeralProbes must be a nonempty array");
            b.numeral_probes.clear();
            for (const auto& v : *it) {
                if (!v.is_number_unsigned()) throw DomainError("bounds: numeralProbes must be naturals");
                b.numeral_probes.push_back(v.get<std::uint64_t>());
            }
        } else {
            throw DomainError("bounds: unknown key " + k);
        }
    }
    return b;
}

std::optional<Entry> forced_o(const JSeq& s) {
    if (s.empty()) return std::nullopt;
    const Entry& last = s.back();
    if (last.label.owner != Owner::P || last.label.degree == 0) return std::nullopt;
    const auto& p = last.move.path;
    std::size_t at = 0;
    while (at < p.size() && p[at].kind != TagKind::Copy) ++at;
    if (at == p.size()) return std::nullopt;
    MoveId copy = last.move;
    copy.path[at] = Tag::copy(p[at].index == 1 ? 2 : 1);
    Entry out{std::move(copy), Label{Owner::O, last.label.kind, last.label.degree}, s.size() - 1};
    if (last.pointer) {
        const MoveId& just = s[*last.pointer].move;
        bool same_middle = just.path.size() > at && just.path[at].kind == TagKind::Copy &&
                           std::equal(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(at), just.path.begin());
        // Middle pairs are (Player original, Opponent copy).
        std::size_t j = *last.pointer;
        if (same_middle) out.pointer = s[j].label.owner == Owner::P ? j + 1 : j - 1;
    }
    return out;
}

GamePtr external_game(const Strategy& s) {
    GamePtr g = s.game();
    try {
        Interface i = g->interface();
        return lollipop(i.dom, i.cod);
    } catch (const ConstructionError&) {
        return hide_game(g, Depth::omega());
    }
}

namespace {

class CopycatStrategy final : public Strategy {
public:
    CopycatStrategy(GamePtr g, PartnerMap partner, std::string name)
        : game_(std::move(g)), partner_(std::move(partner)), name_(std::move(name)) {}

    GamePtr game() const override { return game_; }

    std::optional<Entry> next(const JSeq& s) const override {
        if (s.size() % 2 == 0) return std::nullopt;
        const Entry& last = s.back();
        auto m = partner_(last.move);
        if (!m) return std::nullopt;
        auto l = game_->label(*m);
        if (!l || l->owner != Owner::P) return std::nullopt;
        std::size_t ptr = s.size() - 1;
        if (last.pointer) {
            std::size_t j = *last.pointer;
            ptr = detail::partner_index(s, j);
            if (ptr >= s.size()) return std::nullopt;
        }
        return Entry{std::move(*m), *l, ptr};
    }

    nlohmann::json meta() const override { return {{"op", name_}, {"game", game_->describe()}}; }

private:
    GamePtr game_;
    PartnerMap partner_;
    std::string name_;
};

void require_normalized(const GamePtr& a, const char* what) {
    if (!a->normalized()) throw ConstructionError(std::string(what) + ": the game must be normalized");
}

class UnaryStrategy final : public Strategy {
public:
    UnaryStrategy(std::function<std::uint64_t(std::uint64_t)> f, std::string name, bool banged)
        : f_(std::move(f)), name_(std::move(name)), banged_(banged),
          game_(lollipop(banged ? bang(nat()) : nat(), nat())) {}

    GamePtr game() const override { return game_; }

    std::optional<Entry> next(const JSeq& s) const override {
        if (s.size() == 1 && s[0].move == question().under(Tag::right())) {
            MoveId ask = banged_ ? question().under(Tag::bang(0)).under(Tag::left()) : question().under(Tag::left());
            return make_entry(*game_, ask, 0);
        }
        if (s.size() == 3 && s[2].pointer == std::size_t{1} && s[2].label.kind == Kind::A) {
            auto n = numeral_value(s[2].move);
            if (!n) return std::nullopt;
            return make_entry(*game_, numeral(f_(*n)).under(Tag::right()), 0);
        }
        return std::nullopt;
    }

    nlohmann::json meta() const override { return {{"op", name_}, {"banged", banged_}}; }

private:
    std::function<std::uint64_t(std::uint64_t)> f_;
    std::string name_;
    bool banged_;
    GamePtr game_;
};

class ConstantStrategy final : public Strategy {
public:
    ConstantStrategy(GamePtr dom, std::uint64_t n) : n_(n), game_(lollipop(std::move(dom), nat())) {}

    GamePtr game() const override { return game_; }

    std::optional<Entry> next(const JSeq& s) const override {
        if (s.size() != 1 || s[0].move != question().under(Tag::right())) return std::nullopt;
        return make_entry(*game_, numeral(n_).under(Tag::right()), 0);
    }

    nlohmann::json meta() const override { return {{"op", "numeral"}, {"value", n_}}; }

private:
    std::uint64_t n_;
    GamePtr game_;
};

}  // namespace

StrategyPtr copycat_with(GamePtr game, PartnerMap partner, std::string name) {
    return std::make_shared<CopycatStrategy>(std::move(game), std::move(partner), std::move(name));
}

StrategyPtr copycat(GamePtr a) {
    require_normalized(a, "copycat");
    return copycat_with(lollipop(a, a), [](const MoveId& m) -> std::optional<MoveId> {
        if (m.starts_with(TagKind::Left)) return m.tail().under(Tag::right());
        if (m.starts_with(TagKind::Right)) return m.tail().under(Tag::left());
        return std::nullopt;
    }, "copycat");
}

StrategyPtr dereliction(GamePtr a) {
    require_normalized(a, "dereliction");
    return copycat_with(lollipop(bang(a), a), [](const MoveId& m) -> std::optional<MoveId> {
        if (m.starts_with(TagKind::Right)) return m.tail().under(Tag::bang(0)).under(Tag::left());
        if (m.starts_with(TagKind::Left) && m.path.size() >= 2 && m.path[1] == Tag::bang(0))
            return m.tail().tail().under(Tag::right());
        return std::nullopt;
    }, "dereliction");
}

StrategyPtr constant(GamePtr dom, std::uint64_t n) {
    require_normalized(dom, "numeral");
    return std::make_shared<ConstantStrategy>(std::move(dom), n);
}

StrategyPtr unary(std::function<std::uint64_t(std::uint64_t)> f, std::string name, bool banged) {
    return std::make_shared<UnaryStrategy>(std::move(f), std::move(name), banged);
}

StrategyPtr succ_linear() { return unary([](std::uint64_t n) { return n + 1; }, "succ", false); }
StrategyPtr double_linear() { return unary([](std::uint64_t n) { return 2 * n; }, "double", false); }
StrategyPtr succ_banged() { return unary([](std::uint64_t n) { return n + 1; }, "succ", true); }
StrategyPtr double_banged() { return unary([](std::uint64_t n) { return 2 * n; }, "double", true); }

}  // namespace hm

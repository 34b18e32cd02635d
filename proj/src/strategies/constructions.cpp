#include "detail.hpp"

#include "hm/games/basic.hpp"
#include "hm/games/composite.hpp"

#include <map>
#include <mutex>

namespace hm {

namespace {

// Routes through the game's own component structure; one constituent strategy per component.
class RoutedStrategy final : public Strategy {
public:
    using Picker = std::function<StrategyPtr(const CopyIndex&)>;

    RoutedStrategy(GamePtr g, Picker pick, nlohmann::json meta)
        : game_(std::move(g)), pick_(std::move(pick)), meta_(std::move(meta)) {}

    GamePtr game() const override { return game_; }

    std::optional<Entry> next(const JSeq& s) const override {
        if (s.size() % 2 == 0) return std::nullopt;
        auto r = game_->route(s.back().move, s.back().label);
        if (!r) return std::nullopt;
        CopyIndex c = r->component;
        if (r->shared) {
            // A shared move belongs to the side already chosen by the opening move.
            auto first = game_->route(s.front().move, s.front().label);
            if (!first || first->shared) return std::nullopt;
            c = first->component;
        }
        StrategyPtr inner = pick_(c);
        if (!inner) return std::nullopt;
        return detail::delegate(*game_, c, *inner, s);
    }

    nlohmann::json meta() const override { return meta_; }

private:
    GamePtr game_;
    Picker pick_;
    nlohmann::json meta_;
};

StrategyPtr routed(GamePtr g, RoutedStrategy::Picker pick, nlohmann::json meta) {
    return std::make_shared<RoutedStrategy>(std::move(g), std::move(pick), std::move(meta));
}

// φ ⊗ ψ on normalized games: (A ⊗ C) ⊸ (B ⊗ D), the inner tag of each side selecting the factor.
class TensorStrategy final : public Strategy {
public:
    TensorStrategy(StrategyPtr l, StrategyPtr r, GamePtr g) : l_(std::move(l)), r_(std::move(r)), game_(std::move(g)) {}

    GamePtr game() const override { return game_; }

    std::optional<Entry> next(const JSeq& s) const override {
        if (s.size() % 2 == 0) return std::nullopt;
        auto factor = [](const MoveId& m) -> std::optional<int> {
            if (m.path.size() < 2) return std::nullopt;
            if (m.path[1].kind == TagKind::Left) return 0;
            if (m.path[1].kind == TagKind::Right) return 1;
            return std::nullopt;
        };
        auto f = factor(s.back().move);
        if (!f) return std::nullopt;
        const Strategy& inner = *f == 0 ? *l_ : *r_;
        JSeq sub;
        std::vector<std::size_t> origin;
        std::vector<std::optional<std::size_t>> renumber(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (factor(s[i].move) != f) continue;
            MoveId m{s[i].move.base, {s[i].move.path[0]}};
            m.path.insert(m.path.end(), s[i].move.path.begin() + 2, s[i].move.path.end());
            Entry e{std::move(m), s[i].label, std::nullopt};
            if (s[i].pointer) e.pointer = renumber[*s[i].pointer];
            renumber[i] = sub.size();
            sub.push_back(std::move(e));
            origin.push_back(i);
        }
        auto reply = inner.next(sub);
        if (!reply || reply->move.path.empty()) return std::nullopt;
        MoveId m{reply->move.base, {reply->move.path[0], *f == 0 ? Tag::left() : Tag::right()}};
        m.path.insert(m.path.end(), reply->move.path.begin() + 1, reply->move.path.end());
        Entry out{std::move(m), reply->label, std::nullopt};
        if (reply->pointer) out.pointer = origin.at(*reply->pointer);
        return out;
    }

    nlohmann::json meta() const override { return {{"op", "tensor"}, {"args", {l_->meta(), r_->meta()}}}; }

private:
    StrategyPtr l_, r_;
    GamePtr game_;
};

Interface iface(const StrategyPtr& s, const char* what) {
    try {
        return s->game()->interface();
    } catch (const ConstructionError& e) {
        throw ConstructionError(std::string(what) + ": " + e.what());
    }
}

}  // namespace

StrategyPtr tensor_strat(StrategyPtr l, StrategyPtr r) {
    if (!l->game()->normalized() || !r->game()->normalized())
        throw ConstructionError("tensor: both strategies must live on normalized games");
    Interface a = iface(l, "tensor"), b = iface(r, "tensor");
    GamePtr g = lollipop(tensor(a.dom, b.dom), tensor(a.cod, b.cod));
    return std::make_shared<TensorStrategy>(std::move(l), std::move(r), std::move(g));
}

StrategyPtr pairing_strat(StrategyPtr l, StrategyPtr r) {
    GamePtr g = pairing(l->game(), r->game());
    nlohmann::json meta = {{"op", "pairing"}, {"args", {l->meta(), r->meta()}}};
    return routed(std::move(g), [l, r](const CopyIndex& c) { return c == 0 ? l : r; }, std::move(meta));
}

StrategyPtr pairing_family_strat(StrategyFamily members, unsigned mu) {
    struct Cache {
        std::mutex mu;
        std::map<std::uint64_t, StrategyPtr> members;
    };
    auto cache = std::make_shared<Cache>();
    auto get = [cache, members](std::uint64_t n) {
        std::lock_guard lock(cache->mu);
        auto it = cache->members.find(n);
        if (it == cache->members.end()) it = cache->members.emplace(n, members(n)).first;
        return it->second;
    };
    GamePtr g = pairing_family([get](std::uint64_t n) { return get(n)->game(); }, mu);
    nlohmann::json meta = {{"op", "pairing_family"}, {"mu", mu}, {"member0", get(0)->meta()}};
    return routed(std::move(g), [get](const CopyIndex& c) { return get(static_cast<std::uint64_t>(c)); },
                  std::move(meta));
}

StrategyPtr promotion_strat(StrategyPtr s) {
    GamePtr g = dagger(s->game());
    nlohmann::json meta = {{"op", "promotion"}, {"args", {s->meta()}}};
    return routed(std::move(g), [s](const CopyIndex&) { return s; }, std::move(meta));
}

StrategyPtr curry(StrategyPtr s) {
    GamePtr g = curry(s->game());
    nlohmann::json meta = {{"op", "curry"}, {"args", {s->meta()}}};
    return routed(std::move(g), [s](const CopyIndex&) { return s; }, std::move(meta));
}

StrategyPtr uncurry(StrategyPtr s) {
    GamePtr g = uncurry(s->game());
    nlohmann::json meta = {{"op", "uncurry"}, {"args", {s->meta()}}};
    return routed(std::move(g), [s](const CopyIndex&) { return s; }, std::move(meta));
}

StrategyPtr concat_strat(StrategyPtr s, StrategyPtr t) {
    GamePtr g = concat(s->game(), t->game());
    nlohmann::json meta = {{"op", "concat"}, {"args", {s->meta(), t->meta()}}};
    return routed(std::move(g), [s, t](const CopyIndex& c) { return c == 0 ? s : t; }, std::move(meta));
}

StrategyPtr compose(StrategyPtr s, StrategyPtr t) {
    return hide_strategy(concat_strat(std::move(s), std::move(t)), Depth::omega());
}

}  // namespace hm

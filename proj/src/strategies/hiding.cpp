#include "detail.hpp"

#include <map>
#include <mutex>

namespace hm {

namespace {

// An interaction u of σ whose d-hiding is a given even-length play t.
struct Preimage {
    JSeq u;
    std::vector<std::size_t> t_to_u;
    std::vector<std::optional<std::size_t>> u_to_t;
};

class HiddenStrategy final : public Strategy {
public:
    HiddenStrategy(StrategyPtr s, unsigned d, std::size_t fuel)
        : inner_(std::move(s)), d_(d), fuel_(fuel), game_(hide_game(inner_->game(), Depth(d))) {}

    GamePtr game() const override { return game_; }

    std::optional<Entry> next(const JSeq& t) const override {
        if (t.size() % 2 == 0) return std::nullopt;
        auto base = preimage(t, t.size() - 1);
        if (!base) return std::nullopt;
        return respond(*base, t.back());
    }

    nlohmann::json meta() const override {
        return {{"op", "hide"}, {"depth", d_}, {"args", {inner_->meta()}}};
    }

private:
    // Appends the Opponent move o (in hidden coordinates) and runs σ to the next surviving reply.
    std::optional<Entry> respond(Preimage& p, const Entry& o) const {
        auto l = inner_->game()->label(o.move);
        if (!l || l->owner != Owner::O || (l->degree > 0 && l->degree <= d_)) return std::nullopt;
        Entry e{o.move, *l, std::nullopt};
        if (o.pointer) {
            if (*o.pointer >= p.t_to_u.size()) return std::nullopt;
            e.pointer = p.t_to_u[*o.pointer];
        }
        p.t_to_u.push_back(p.u.size());
        p.u_to_t.push_back(p.t_to_u.size() - 1);
        p.u.push_back(std::move(e));
        for (std::size_t steps = 0;; ++steps) {
            if (steps > fuel_) throw FuelExhausted("hiding: no surviving reply within the fuel budget");
            auto r = inner_->next(p.u);
            if (!r) return std::nullopt;
            p.u.push_back(*r);
            p.u_to_t.push_back(std::nullopt);
            if (r->label.degree == 0 || r->label.degree > d_) {
                Entry out{r->move, Label{r->label.owner, r->label.kind, monus(r->label.degree, d_)}, std::nullopt};
                if (r->pointer) {
                    auto j = p.u_to_t[external_justifier(p.u, p.u.size() - 1, d_)];
                    if (!j) throw StructuralError("hiding: a surviving move points at a deleted one");
                    out.pointer = *j;
                }
                p.u_to_t.back() = p.t_to_u.size();
                p.t_to_u.push_back(p.u.size() - 1);
                return out;
            }
            auto f = forced_o(p.u);
            if (!f) throw StructuralError("hiding: internal move " + to_string(r->move) + " has no copy");
            p.u.push_back(std::move(*f));
            p.u_to_t.push_back(std::nullopt);
        }
    }

    // The preimage of the even prefix t[0, len), replaying and checking σ's replies; memoized.
    std::optional<Preimage> preimage(const JSeq& t, std::size_t len) const {
        std::size_t have = 0;
        Preimage p;
        {
            std::lock_guard lock(mu_);
            for (std::size_t k = len;; k -= 2) {
                if (k == 0) break;
                auto it = memo_.find(render(prefix(t, k)));
                if (it != memo_.end()) {
                    p = it->second;
                    have = k;
                    break;
                }
            }
        }
        for (std::size_t k = have; k < len; k += 2) {
            auto reply = respond(p, t[k]);
            if (!reply || *reply != t[k + 1]) return std::nullopt;
            std::lock_guard lock(mu_);
            memo_.emplace(render(prefix(t, k + 2)), p);
        }
        return p;
    }

    StrategyPtr inner_;
    unsigned d_;
    std::size_t fuel_;
    GamePtr game_;
    mutable std::mutex mu_;
    mutable std::map<std::string, Preimage> memo_;
};

}  // namespace

StrategyPtr hide_strategy(StrategyPtr s, Depth d) { return hide_strategy(std::move(s), d, ProbeBounds{}.fuel); }

StrategyPtr hide_strategy(StrategyPtr s, Depth d, std::size_t fuel) {
    unsigned k = d.resolve(s->game()->mu());
    if (k == 0 || s->game()->normalized()) return s;
    return std::make_shared<HiddenStrategy>(std::move(s), k, fuel);
}

}  // namespace hm

#include "detail.hpp"

#include "hm/games/validate.hpp"
#include "hm/strategies/analysis.hpp"

#include <set>

namespace hm {

namespace {

struct External {
    JSeq seq;
    std::vector<std::size_t> to_u;
};

External external_part(const Strategy& s, const JSeq& u) {
    External e;
    e.seq = hide_jseq(u, s.game()->mu());
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i].label.degree == 0) e.to_u.push_back(i);
    return e;
}

struct Probe {
    Entry move;      // in the strategy's own coordinates
    Entry external;  // in the external play
};

// Opponent moves extending the external play, one per canonical form.
std::map<std::string, Probe> probes_at(const Strategy& s, const Game& ext_game, const JSeq& u,
                                       const ProbeBounds& b, bool up_to_equiv = true) {
    std::map<std::string, Probe> out;
    External ext = external_part(s, u);
    MoveProbes mp = b.moves();
    auto consider = [&](const MoveId& m, std::optional<std::size_t> j) {
        auto el = ext_game.label(m);
        if (!el || el->owner != Owner::O) return;
        auto ul = s.game()->label(m);
        if (!ul) return;
        JSeq next = ext.seq;
        next.push_back(Entry{m, *el, j});
        if (!ext_game.is_position(next)) return;
        std::string key = up_to_equiv ? render(canonical(next)) : render(next);
        if (out.count(key)) return;
        std::optional<std::size_t> uj;
        if (j) uj = ext.to_u[*j];
        out.emplace(std::move(key), Probe{Entry{m, *ul, uj}, next.back()});
    };
    for (const auto& m : ext_game.enabled_moves(nullptr, mp)) consider(m, std::nullopt);
    for (std::size_t j = 0; j < ext.seq.size(); ++j)
        for (const auto& m : ext_game.enabled_moves(&ext.seq[j].move, mp)) consider(m, j);
    return out;
}

enum class Outcome { Reply, Undefined, Fuel, Broken };

// Runs σ from a position ending in an Opponent move to its next external reply. Each even
// prefix passed on the way is reported to `even`.
template <class F>
Outcome run(const Strategy& s, JSeq& u, std::size_t fuel, F&& even) {
    for (std::size_t steps = 0;; ++steps) {
        if (steps > fuel) return Outcome::Fuel;
        auto r = s.next(u);
        if (!r) return Outcome::Undefined;
        u.push_back(std::move(*r));
        even(u);
        if (u.back().label.owner != Owner::P) return Outcome::Broken;
        if (u.back().label.degree == 0) return Outcome::Reply;
        auto f = forced_o(u);
        if (!f) return Outcome::Broken;
        u.push_back(std::move(*f));
    }
}

std::size_t external_length(const JSeq& u) {
    std::size_t n = 0;
    for (const auto& e : u) n += e.label.degree == 0;
    return n;
}

}  // namespace

RunOutcome run_to_reply(const Strategy& s, JSeq& u, std::size_t fuel) {
    switch (run(s, u, fuel, [](const JSeq&) {})) {
        case Outcome::Reply: return RunOutcome::Reply;
        case Outcome::Undefined: return RunOutcome::Undefined;
        case Outcome::Fuel: return RunOutcome::Fuel;
        case Outcome::Broken: break;
    }
    return RunOutcome::Broken;
}

std::vector<Entry> opponent_probes(const Strategy& s, const JSeq& u, const ProbeBounds& b, bool up_to_equiv) {
    std::vector<Entry> out;
    GamePtr g = external_game(s);
    for (auto& [key, p] : probes_at(s, *g, u, b, up_to_equiv)) out.push_back(p.move);
    return out;
}

PlaySet plays(const Strategy& s, const ProbeBounds& b, bool up_to_equiv) {
    std::set<JSeq> found{JSeq{}};
    PlaySet out;
    GamePtr ext_game = external_game(s);
    std::vector<JSeq> stack{JSeq{}};
    while (!stack.empty()) {
        JSeq u = std::move(stack.back());
        stack.pop_back();
        if (external_length(u) + 2 > b.max_play_len) continue;
        for (auto& [key, probe] : probes_at(s, *ext_game, u, b, up_to_equiv)) {
            JSeq v = u;
            v.push_back(probe.move);
            JSeq at = v;
            Outcome o = run(s, v, b.fuel, [&](const JSeq& w) { found.insert(w); });
            if (o == Outcome::Fuel) out.inconclusive.emplace_back(at, "fuel exhausted");
            if (o == Outcome::Broken) out.inconclusive.emplace_back(at, "internal move without a copy");
            if (o == Outcome::Reply) stack.push_back(std::move(v));
        }
    }
    out.plays.assign(found.begin(), found.end());
    return out;
}

std::string to_string(EquivVerdict::Tag t) {
    switch (t) {
        case EquivVerdict::Tag::Equal: return "Equal";
        case EquivVerdict::Tag::Distinguished: return "Distinguished";
        case EquivVerdict::Tag::Inconclusive: return "Inconclusive";
    }
    return "?";
}

nlohmann::json to_json(const EquivVerdict& v) {
    nlohmann::json j = {{"verdict", to_string(v.tag)}, {"renamed", v.renamed}};
    if (v.tag == EquivVerdict::Tag::Distinguished) {
        j["position"] = to_json(v.position);
        j["side"] = v.side;
    }
    if (!v.reason.empty()) j["reason"] = v.reason;
    return j;
}

EquivVerdict strat_equiv(const Strategy& s, const Strategy& t, const ProbeBounds& b) {
    EquivVerdict v;
    GamePtr gs = external_game(s), gt = external_game(t);
    if (!same_game(gs, gt)) {
        v.tag = EquivVerdict::Tag::Distinguished;
        v.side = "interface";
        v.reason = "external interfaces differ: " + gs->type_key() + " vs " + gt->type_key();
        return v;
    }
    // Internal move names paired up so far, both directions.
    std::map<std::string, std::string> fwd, bwd;
    auto same_entry = [&](const Entry& x, const Entry& y) {
        if (x.label != y.label || x.pointer != y.pointer) return false;
        if (x.label.degree == 0) return x.move == y.move;
        std::string a = to_string(x.move), c = to_string(y.move);
        auto f = fwd.find(a);
        auto g = bwd.find(c);
        if (f == fwd.end() && g == bwd.end()) {
            fwd.emplace(a, c);
            bwd.emplace(c, a);
            return true;
        }
        return f != fwd.end() && g != bwd.end() && f->second == c && g->second == a;
    };
    auto nothing = [](const JSeq&) {};
    struct Node {
        JSeq us, ut;
    };
    std::vector<Node> stack{{}};
    while (!stack.empty()) {
        Node n = std::move(stack.back());
        stack.pop_back();
        if (external_length(n.us) + 2 > b.max_play_len) continue;
        auto ps = probes_at(s, *gs, n.us, b);
        auto pt = probes_at(t, *gt, n.ut, b);
        for (auto& [key, probe] : ps) {
            auto other = pt.find(key);
            if (other == pt.end()) continue;
            Node m{n.us, n.ut};
            m.us.push_back(probe.move);
            m.ut.push_back(other->second.move);
            std::size_t from = m.us.size();
            Outcome os = run(s, m.us, b.fuel, nothing);
            Outcome ot = run(t, m.ut, b.fuel, nothing);
            auto witness = [&] {
                JSeq w = external_part(s, n.us).seq;
                w.push_back(probe.external);
                return w;
            };
            if (os == Outcome::Fuel || ot == Outcome::Fuel || os == Outcome::Broken || ot == Outcome::Broken) {
                v.tag = EquivVerdict::Tag::Inconclusive;
                v.position = witness();
                v.reason = (os == Outcome::Fuel || ot == Outcome::Fuel) ? "fuel exhausted" : "internal move without a copy";
                continue;
            }
            if (os != ot) {
                v.tag = EquivVerdict::Tag::Distinguished;
                v.position = witness();
                v.side = os == Outcome::Reply ? "left" : "right";
                v.renamed = fwd.size();
                return v;
            }
            if (os == Outcome::Undefined) continue;
            JSeq cs = canonical(m.us), ct = canonical(m.ut);
            bool same = cs.size() == ct.size();
            for (std::size_t i = from; same && i < cs.size(); ++i) same = same_entry(cs[i], ct[i]);
            if (!same) {
                v.tag = EquivVerdict::Tag::Distinguished;
                v.position = witness();
                v.side = "both";
                v.reason = render(JSeq(cs.begin() + static_cast<std::ptrdiff_t>(from), cs.end())) + " vs " +
                           render(JSeq(ct.begin() + static_cast<std::ptrdiff_t>(from), ct.end()));
                v.renamed = fwd.size();
                return v;
            }
            stack.push_back(std::move(m));
        }
    }
    v.renamed = fwd.size();
    return v;
}

}  // namespace hm

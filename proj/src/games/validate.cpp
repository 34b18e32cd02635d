#include "hm/games/validate.hpp"

#include <map>
#include <set>

namespace hm {

JSeq canonical(const JSeq& s) {
    std::map<std::pair<std::string, CopyIndex>, CopyIndex> renumber;
    std::map<std::string, CopyIndex> next;
    JSeq out = s;
    for (auto& e : out) {
        std::string scope;
        for (auto& t : e.move.path) {
            if (t.kind == TagKind::BangIndex || t.kind == TagKind::Thread) {
                std::string key = scope + (t.kind == TagKind::Thread ? "T" : "!");
                auto [it, fresh] = renumber.try_emplace({key, t.index}, 0);
                if (fresh) it->second = next[key]++;
                t.index = it->second;
            }
            scope += to_string(t);
            scope += '.';
        }
    }
    return out;
}

bool pos_equiv(const Game& g, const JSeq& s, const JSeq& t, Depth d) {
    if (!g.is_position(s) || !g.is_position(t)) throw DomainError("pos_equiv: not a position");
    unsigned k = d.resolve(g.mu());
    return canonical(hide_jseq(s, k)) == canonical(hide_jseq(t, k));
}

std::vector<JSeq> extensions(const Game& g, const JSeq& s, const MoveProbes& probes) {
    std::vector<JSeq> out;
    auto try_move = [&](const MoveId& m, std::optional<std::size_t> ptr) {
        auto l = g.label(m);
        if (!l) return;
        JSeq t = s;
        t.push_back(Entry{m, *l, ptr});
        if (g.is_position(t)) out.push_back(std::move(t));
    };
    for (const auto& m : g.enabled_moves(nullptr, probes)) try_move(m, std::nullopt);
    for (std::size_t j = 0; j < s.size(); ++j)
        for (const auto& m : g.enabled_moves(&s[j].move, probes)) try_move(m, j);
    return out;
}

std::vector<JSeq> enumerate_positions(const Game& g, const PositionBounds& b) {
    std::vector<JSeq> out{JSeq{}};
    for (std::size_t k = 0; k < out.size() && out.size() < b.limit; ++k) {
        if (out[k].size() >= b.max_length) continue;
        for (auto& t : extensions(g, out[k], b.probes)) {
            if (out.size() >= b.limit) break;
            out.push_back(std::move(t));
        }
    }
    return out;
}

GameDiagnostics validate_game(const Game& g, const std::vector<JSeq>& probe, const MoveProbes& probes) {
    GameDiagnostics out;
    out.probed = probe.size();
    auto report = [&](const char* axiom, const std::string& detail) {
        out.violations.push_back({axiom, detail});
    };
    if (!g.is_position({})) report("P1", "the empty sequence is not a position");
    for (const auto& s : probe) {
        if (!g.is_position(s)) {
            report("P1", "probe is not a position: " + render(s));
            continue;
        }
        if (auto v = check_legal(s, g); !v.ok())
            report("legality", to_string(v.kind) + " in " + render(s));
        if (!s.empty() && !g.is_position(prefix(s, s.size() - 1)))
            report("P1", "not prefix-closed at " + render(s));
    }
    // DP2: an internal O-move of degree > i is determined by the i-hidden history.
    for (unsigned i = 0; i < g.mu(); ++i) {
        std::map<JSeq, JSeq> seen;
        for (const auto& s : probe) {
            if (s.empty() || s.size() % 2 == 0) continue;
            const Label& l = s.back().label;
            if (l.owner != Owner::O || l.degree <= i) continue;
            JSeq key = hide_jseq(prefix(s, s.size() - 1), i);
            JSeq val = hide_jseq(s, i);
            auto [it, fresh] = seen.emplace(std::move(key), val);
            if (!fresh && !(it->second == val))
                report("DP2", "internal O-move not determined: " + render(it->second) + " vs " + render(val));
        }
    }
    // I1, I2 and DI3 over pairs of ≃-related probes.
    for (unsigned d = 0; d <= g.mu(); ++d) {
        std::map<JSeq, std::vector<const JSeq*>> classes;
        for (const auto& s : probe)
            if (g.is_position(s)) classes[canonical(hide_jseq(s, d))].push_back(&s);
        for (const auto& [key, members] : classes) {
            const JSeq& s = *members.front();
            for (const JSeq* t : members) {
                JSeq hs = hide_jseq(s, d), ht = hide_jseq(*t, d);
                if (hs.size() != ht.size()) report("I1", "lengths differ: " + render(s) + " / " + render(*t));
                for (std::size_t k = 0; k < std::min(hs.size(), ht.size()); ++k)
                    if (!(hs[k].label == ht[k].label) || hs[k].pointer != ht[k].pointer) {
                        report("I2", "labels or pointers differ: " + render(s) + " / " + render(*t));
                        break;
                    }
                if (t == &s || d != 0) continue;
                for (const auto& sm : extensions(g, s, probes)) {
                    bool matched = false;
                    for (const auto& tn : extensions(g, *t, probes))
                        if (canonical(sm) == canonical(tn)) {
                            matched = true;
                            break;
                        }
                    if (!matched) report("DI3", "no answer in " + render(*t) + " for " + render(sm));
                }
            }
        }
    }
    return out;
}

SubgameVerdict is_subgame(const Game& h, const Game& g, const PositionBounds& b) {
    if (h.mu() != g.mu())
        return {false, "mu mismatch: " + std::to_string(h.mu()) + " vs " + std::to_string(g.mu())};
    auto moves = sample_moves(h, b.probes, static_cast<unsigned>(b.max_length));
    for (const auto& m : moves) {
        auto lg = g.label(m);
        if (!lg) return {false, "move missing: " + to_string(m)};
        if (!(*lg == h.label_of(m))) return {false, "label differs: " + to_string(m)};
        if (h.enables(nullptr, m) && !g.enables(nullptr, m)) return {false, "initial move: " + to_string(m)};
    }
    for (const auto& m : moves)
        for (const auto& n : moves)
            if (h.enables(&m, n) && !g.enables(&m, n))
                return {false, "enabling missing: " + to_string(m) + " |- " + to_string(n)};
    auto positions = enumerate_positions(h, b);
    for (const auto& s : positions)
        if (!g.is_position(s)) return {false, "position missing: " + render(s)};
    for (unsigned d = 0; d <= h.mu(); ++d)
        for (const auto& s : positions)
            for (const auto& t : positions)
                if (s.size() == t.size() && pos_equiv(h, s, t, d) != pos_equiv(g, s, t, d))
                    return {false, "equivalence differs at depth " + std::to_string(d) + ": " + render(s)};
    return {};
}

}  // namespace hm

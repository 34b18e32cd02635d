#include "detail.hpp"

#include "hm/games/validate.hpp"
#include "hm/strategies/analysis.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hm {

namespace {

void violate(PropertyResult& r, const JSeq& w, std::string detail) {
    if (!r.holds) return;
    r.holds = false;
    r.witness = w;
    r.detail = std::move(detail);
}

bool has_prefix(const JSeq& s, const JSeq& p) {
    return s.size() >= p.size() && std::equal(p.begin(), p.end(), s.begin());
}

std::size_t external_length(const JSeq& u) {
    return static_cast<std::size_t>(std::count_if(u.begin(), u.end(), [](const Entry& e) { return e.label.degree == 0; }));
}

JSeq view_of(const JSeq& s) { return subsequence(s, p_view_indices(s, s.size())); }

}  // namespace

bool PropertyReport::all_hold() const {
    return std::all_of(results.begin(), results.end(), [](const auto& kv) { return kv.second.holds; });
}

nlohmann::json to_json(const PropertyReport& r) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [name, res] : r.results) {
        nlohmann::json e = {{"holds", res.holds}};
        if (!res.holds) {
            e["witness"] = to_json(res.witness);
            e["detail"] = res.detail;
        }
        j[name] = e;
    }
    j["notes"] = r.notes;
    return j;
}

PropertyReport check_strategy_properties(const Strategy& s, const ProbeBounds& b) {
    PropertyReport rep;
    for (const char* k : {"deterministic", "externally_consistent", "valid", "innocent", "well_bracketed", "total",
                          "noetherian"})
        rep.results[k] = {};
    PlaySet reps = plays(s, b, true);
    PlaySet all = plays(s, b, false);
    const GamePtr g = s.game();
    const unsigned mu = g->mu();

    for (const auto& [w, reason] : all.inconclusive) rep.notes.push_back("inconclusive at " + render(w) + ": " + reason);

    // Plays must be positions; replies are determined by the odd prefix.
    std::map<JSeq, Entry> reply;
    for (const JSeq& p : all.plays) {
        if (!g->is_position(p)) violate(rep.results["valid"], p, "play is not a position of the game");
        if (p.empty()) continue;
        JSeq odd(p.begin(), p.end() - 1);
        auto [it, fresh] = reply.emplace(odd, p.back());
        if (!fresh && it->second != p.back()) violate(rep.results["deterministic"], p, "two replies to one position");
    }

    // External consistency: equal d-hidings of d-complete plays force equal replies.
    for (unsigned d = 0; d <= mu; ++d) {
        std::map<JSeq, std::pair<JSeq, Entry>> seen;
        for (const JSeq& p : all.plays) {
            if (p.empty() || p.back().label.owner != Owner::P || !is_complete(p, d)) continue;
            JSeq odd(p.begin(), p.end() - 1);
            JSeq key = hide_jseq(odd, d);
            Entry last = hide_jseq(p, d).back();
            auto [it, fresh] = seen.emplace(key, std::make_pair(p, last));
            if (!fresh && it->second.second != last)
                violate(rep.results["externally_consistent"], p,
                        "differs from " + render(it->second.first) + " after " + std::to_string(d) + "-hiding");
        }
    }

    // Validity: ≃-equivalent positions get ≃-equivalent replies.
    std::map<JSeq, JSeq> classes;
    for (const JSeq& p : all.plays) {
        if (p.empty()) continue;
        JSeq odd(p.begin(), p.end() - 1);
        JSeq cp = canonical(p);
        auto [it, fresh] = classes.emplace(canonical(odd), cp);
        if (!fresh && it->second != cp) violate(rep.results["valid"], p, "≃-equivalent positions answered apart");
    }

    // Innocence, up to canonical renumbering of the views.
    std::map<JSeq, JSeq> by_view;
    for (const JSeq& p : all.plays) {
        if (p.empty()) continue;
        JSeq odd(p.begin(), p.end() - 1);
        JSeq key = canonical(view_of(odd));
        JSeq val = canonical(view_of(p));
        auto [it, fresh] = by_view.emplace(key, val);
        if (!fresh && it->second != val) violate(rep.results["innocent"], p, "equal P-views answered differently");
    }

    // Well-bracketing: questions opened after q in the P-view are answered before q is.
    std::size_t longest_view = 0;
    for (const JSeq& p : all.plays) {
        if (p.empty()) continue;
        auto view = p_view_indices(p, p.size());
        longest_view = std::max(longest_view, static_cast<std::size_t>(std::count_if(
            view.begin(), view.end(), [&](std::size_t i) { return p[i].label.degree == 0; })));
        const Entry& a = p.back();
        if (a.label.kind != Kind::A || !a.pointer) continue;
        auto q = std::find(view.begin(), view.end(), *a.pointer);
        if (q == view.end()) {
            violate(rep.results["well_bracketed"], p, "answer to a question outside the P-view");
            continue;
        }
        std::vector<std::size_t> inner(q + 1, view.end() - 1);
        for (std::size_t i : inner) {
            if (p[i].label.kind != Kind::Q) continue;
            bool answered = std::any_of(inner.begin(), inner.end(), [&](std::size_t k) {
                return p[k].label.kind == Kind::A && p[k].pointer == i;
            });
            if (!answered) violate(rep.results["well_bracketed"], p, "pending question at index " + std::to_string(i));
        }
    }

    // Totality on probes: every Opponent probe after a play gets a reply.
    std::set<JSeq> found(reps.plays.begin(), reps.plays.end());
    for (const JSeq& p : reps.plays) {
        if (!p.empty() && p.back().label.degree != 0) continue;
        if (external_length(p) + 2 > b.max_play_len) continue;
        for (const Entry& o : opponent_probes(s, p, b)) {
            JSeq q = p;
            q.push_back(o);
            auto it = found.lower_bound(q);
            if (it == found.end() || !has_prefix(*it, q)) violate(rep.results["total"], q, "no reply");
        }
    }

    if (longest_view > b.max_play_len)
        violate(rep.results["noetherian"], {}, "a P-view of length " + std::to_string(longest_view) + " exceeds the bound");
    rep.notes.push_back("totality and noetherianity are bounded surrogates (maxPlayLen " +
                        std::to_string(b.max_play_len) + ", longest external P-view " + std::to_string(longest_view) + ")");
    rep.notes.push_back("innocence compares P-views up to copy-index renumbering");
    return rep;
}

namespace {

// Column of a move: its path up to the first Left/Right/Copy tag, index tags blanked.
std::vector<Tag> column_of(const MoveId& m) {
    std::vector<Tag> col;
    for (const Tag& t : m.path) {
        switch (t.kind) {
            case TagKind::Left:
            case TagKind::Right:
            case TagKind::Copy: col.push_back(t); return col;
            case TagKind::BangIndex:
            case TagKind::Thread:
            case TagKind::Index: col.push_back(Tag{t.kind, 0}); break;
            default: col.push_back(t);
        }
    }
    return col;
}

// Left-to-right order of components: A, J's internals, B^[1], B^[2], K's internals, C.
int rank(const Tag& t) {
    switch (t.kind) {
        case TagKind::Left: return 0;
        case TagKind::ConcatSide: return t.index == 1 ? 1 : 4;
        case TagKind::Copy: return t.index == 1 ? 2 : 3;
        case TagKind::Part: return t.index == 1 ? 1 : 4;
        case TagKind::Right: return 5;
        default: return 6;
    }
}

std::string column_name(const std::vector<Tag>& col) {
    std::string s;
    for (const Tag& t : col) {
        if (!s.empty()) s += '.';
        s += t.kind == TagKind::BangIndex ? "!" : t.kind == TagKind::Thread ? "T" : t.kind == TagKind::Index ? "I" : to_string(t);
    }
    return s.empty() ? "·" : s;
}

}  // namespace

std::string render_table(const Strategy&, const JSeq& play) {
    auto less = [](const std::vector<Tag>& a, const std::vector<Tag>& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const Tag& x, const Tag& y) {
            int rx = rank(x), ry = rank(y);
            return rx != ry ? rx < ry : x < y;
        });
    };
    std::vector<std::vector<Tag>> cols;
    for (const Entry& e : play) {
        auto c = column_of(e.move);
        if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
    }
    std::sort(cols.begin(), cols.end(), less);
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header;
    for (const auto& c : cols) header.push_back(column_name(c));
    rows.push_back(header);
    for (std::size_t i = 0; i < play.size(); ++i) {
        const Entry& e = play[i];
        auto c = column_of(e.move);
        std::size_t at = static_cast<std::size_t>(std::find(cols.begin(), cols.end(), c) - cols.begin());
        MoveId rest{e.move.base, {}};
        std::size_t k = 0;
        for (; k < e.move.path.size(); ++k) {
            const Tag& t = e.move.path[k];
            if (t.kind == TagKind::BangIndex || t.kind == TagKind::Thread || t.kind == TagKind::Index) rest.path.push_back(t);
            if (t.kind == TagKind::Left || t.kind == TagKind::Right || t.kind == TagKind::Copy) break;
        }
        for (++k; k < e.move.path.size(); ++k) rest.path.push_back(e.move.path[k]);
        std::string cell = to_string(rest);
        if (e.label.degree > 0) cell += "_" + std::to_string(e.label.degree);
        std::vector<std::string> row(cols.size());
        row[at] = cell;
        rows.push_back(std::move(row));
    }
    std::vector<std::size_t> width(cols.size(), 1);
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    std::ostringstream os;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
            line += r[c] + std::string(width[c] - r[c].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

}  // namespace hm

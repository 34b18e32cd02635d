#include "lemmas.hpp"

#include "support.hpp"

#include "hm/games/composite.hpp"
#include "hm/games/validate.hpp"
#include "hm/strategies/analysis.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace hm::acceptance {

namespace {

using test::FiniteArena;

class Suite {
public:
    explicit Suite(std::string name) { r_.name = std::move(name); }
    void check(bool ok, const std::string& what) {
        ++r_.cases;
        if (!ok && r_.failures++ == 0) r_.first_failure = what;
    }
    // Failures outside a counted case, such as an inconclusive unfolding.
    void fail(const std::string& what) {
        if (r_.failures++ == 0) r_.first_failure = what;
    }
    SuiteResult result() const { return r_; }

private:
    SuiteResult r_;
};

ProbeBounds small() {
    ProbeBounds b;
    b.max_play_len = 6;
    b.numeral_probes = {0, 2};
    b.max_copy_index = 1;
    b.fuel = 2000;
    return b;
}

std::string describe(const StrategyPtr& s) { return s->meta().dump(); }

std::set<JSeq> play_set(const Strategy& s, Suite& suite) {
    PlaySet p = plays(s, small());
    if (!p.inconclusive.empty()) suite.fail("inconclusive unfolding: " + p.inconclusive.front().second);
    return {p.plays.begin(), p.plays.end()};
}

std::set<JSeq> canon(const std::set<JSeq>& ps) {
    std::set<JSeq> out;
    for (const JSeq& p : ps) out.insert(canonical(p));
    return out;
}

// {s ♮ H^d | s ∈ σ}: hidings of the even plays that are d-complete, plus ε.
std::set<JSeq> hidden_set(const std::set<JSeq>& ps, unsigned d) {
    std::set<JSeq> out;
    for (const JSeq& p : ps)
        if (p.empty() || (is_complete(p, d) && p.size() % 2 == 0)) out.insert(hide_jseq(p, d));
    return out;
}

// Strategies on !N ⊸ N: affine maps, dereliction, and ‡-chains of them.
StrategyPtr random_strategy(std::mt19937_64& rng, unsigned depth) {
    if (depth == 0 || rng() % 3 == 0) {
        if (rng() % 4 == 0) return dereliction(nat());
        std::uint64_t a = 1 + rng() % 3, c = rng() % 4;
        return unary([a, c](std::uint64_t n) { return a * n + c; }, std::to_string(a) + "n+" + std::to_string(c),
                     true);
    }
    return concat_strat(promotion_strat(random_strategy(rng, depth - 1)), random_strategy(rng, depth - 1));
}

StrategyPtr random_concat(std::mt19937_64& rng, unsigned depth) {
    return concat_strat(promotion_strat(random_strategy(rng, depth - 1)), random_strategy(rng, depth - 1));
}

// A chain ending in a numeral, so that the domain is !T.
StrategyPtr random_pipeline(std::mt19937_64& rng) {
    return concat_strat(promotion_strat(constant(bang(terminal()), rng() % 4)), random_strategy(rng, 1));
}

void stepwise_arenas(std::mt19937_64& rng, Suite& suite, int trials) {
    for (int t = 0; t < trials; ++t) {
        auto a = std::make_shared<FiniteArena>(test::random_arena(rng, 9));
        auto moves = a->moves();
        bool ok = validate_arena(*a, moves).ok();
        for (unsigned i = 0; i <= a->mu() && ok; ++i) {
            auto step = hide_arena(hide_arena(a, i), 1);
            auto direct = hide_arena(a, i + 1);
            for (const auto& m : moves) {
                ok = ok && step->label(m) == direct->label(m) && step->enables(nullptr, m) == direct->enables(nullptr, m);
                for (const auto& n : moves) ok = ok && step->enables(&m, n) == direct->enables(&m, n);
            }
            JSeq s = test::random_jseq(rng, *a, moves, 10);
            ok = ok && hide_jseq(s, i + 1) == hide_jseq(hide_jseq(s, i), 1) &&
                 check_justified(hide_jseq(s, i), *hide_arena(a, i)).ok();
        }
        suite.check(ok, "arena trial " + std::to_string(t));
    }
}

void stepwise_games_and_strategies(std::mt19937_64& rng, Suite& suite, int trials) {
    PositionBounds pb;
    pb.max_length = 6;
    pb.probes.numerals = {0, 1};
    pb.probes.max_copy_index = 1;
    pb.limit = 300;
    for (int t = 0; t < trials; ++t) {
        StrategyPtr s = random_concat(rng, 2);
        GamePtr g = s->game();
        auto positions = enumerate_positions(*g, pb);
        for (unsigned i = 0; i < g->mu(); ++i) {
            GamePtr stepwise = hide_game(hide_game(g, i), 1), direct = hide_game(g, i + 1);
            bool ok = same_game(stepwise, direct);
            for (const JSeq& p : positions)
                ok = ok && direct->is_position(hide_jseq(p, i + 1)) &&
                     hide_jseq(hide_jseq(p, i), 1) == hide_jseq(p, i + 1);
            suite.check(ok, "game " + describe(s) + " at i=" + std::to_string(i));
            auto a = hide_strategy(s, Depth(i + 1));
            auto b = hide_strategy(hide_strategy(s, Depth(i)), Depth(1));
            suite.check(canon(play_set(*a, suite)) == canon(play_set(*b, suite)),
                        "strategy " + describe(s) + " at i=" + std::to_string(i));
        }
    }
}

// Deleting the entries of degree ≤ d one at a time, in any order, then lowering degrees by d, is H^d.
void pointwise(std::mt19937_64& rng, Suite& suite, int trials) {
    for (int t = 0; t < trials; ++t) {
        auto a = std::make_shared<FiniteArena>(test::random_arena(rng, 9, 2));
        JSeq s = test::random_legal(rng, *a, a->moves(), 10);
        for (unsigned d = 1; d <= std::max(1u, a->mu()); ++d) {
            for (int order = 0; order < 2; ++order) {
                JSeq u = s;
                for (;;) {
                    std::vector<std::size_t> low;
                    for (std::size_t k = 0; k < u.size(); ++k)
                        if (u[k].label.degree > 0 && u[k].label.degree <= d) low.push_back(k);
                    if (low.empty()) break;
                    u = delete_entry(u, low[rng() % low.size()]);
                }
                for (auto& e : u) e.label.degree = monus(e.label.degree, d);
                suite.check(u == hide_jseq(s, d) && check_legal(hide_jseq(s, d), *hide_arena(a, d)).ok(),
                            "trial " + std::to_string(t) + " d=" + std::to_string(d) + ": " + render(s));
            }
        }
    }
}

void constructions(std::mt19937_64& rng, Suite& suite, int trials) {
    auto same = [&](const StrategyPtr& x, const StrategyPtr& y, const std::string& what) {
        suite.check(canon(play_set(*x, suite)) == canon(play_set(*y, suite)), what);
    };
    for (int t = 0; t < trials; ++t) {
        StrategyPtr l = random_strategy(rng, 2), r = random_strategy(rng, 1);
        unsigned top = std::max(l->game()->mu(), r->game()->mu());
        std::string tag = describe(l) + " / " + describe(r);
        for (unsigned d = 1; d <= std::max(1u, top); ++d) {
            Depth h(d);
            same(hide_strategy(pairing_strat(l, r), h), pairing_strat(hide_strategy(l, h), hide_strategy(r, h)),
                 "pairing " + tag);
            same(hide_strategy(promotion_strat(l), h), promotion_strat(hide_strategy(l, h)), "promotion " + tag);
            if (d <= top)
                same(hide_strategy(concat_strat(promotion_strat(l), r), h),
                     concat_strat(promotion_strat(hide_strategy(l, h)), hide_strategy(r, h)), "concat " + tag);
        }
        // Hiding through the outer middle copies normalizes the concatenation.
        Depth w = Depth::omega();
        same(hide_strategy(concat_strat(promotion_strat(l), r), w),
             compose(promotion_strat(hide_strategy(l, w)), hide_strategy(r, w)), "compose " + tag);
    }
}

std::vector<StrategyPtr> interaction_samples(std::mt19937_64& rng, int count) {
    std::vector<StrategyPtr> out;
    for (int k = 0; k < count; ++k) out.push_back(k % 3 == 0 ? random_pipeline(rng) : random_concat(rng, 2));
    return out;
}

// Every internal Opponent move in a play is the forced pr_B copy of its predecessor.
void o_determinacy(const std::vector<StrategyPtr>& ss, Suite& suite) {
    for (const auto& s : ss)
        for (const JSeq& p : play_set(*s, suite))
            for (std::size_t k = 1; k < p.size(); ++k)
                if (p[k].label.owner == Owner::O && p[k].label.degree > 0) {
                    auto f = forced_o(prefix(p, k));
                    suite.check(f && *f == p[k], describe(s) + ": " + render(prefix(p, k + 1)));
                }
}

// Complete plays with equal d-hidings are the same interaction.
void external_consistency(const std::vector<StrategyPtr>& ss, Suite& suite) {
    for (const auto& s : ss) {
        auto ps = play_set(*s, suite);
        for (unsigned d = 1; d <= s->game()->mu(); ++d) {
            std::map<JSeq, JSeq> seen;
            for (const JSeq& p : ps) {
                if (p.empty() || !is_complete(p, d)) continue;
                auto [it, fresh] = seen.emplace(hide_jseq(p, d), p);
                suite.check(fresh || it->second == p, describe(s) + ": " + render(p));
            }
        }
    }
}

void hiding_theorem(const std::vector<StrategyPtr>& ss, Suite& suite) {
    for (const auto& s : ss) {
        auto full = play_set(*s, suite);
        for (unsigned d = 1; d <= s->game()->mu(); ++d) {
            auto h = hide_strategy(s, Depth(d));
            GamePtr hg = hide_game(s->game(), Depth(d));
            auto hp = play_set(*h, suite);
            for (const JSeq& p : hp) suite.check(hg->is_position(p), describe(s) + ": " + render(p));
            suite.check(canon(hp) == canon(hidden_set(full, d)), describe(s) + " d=" + std::to_string(d));
        }
    }
}

void view_lemma(const std::vector<StrategyPtr>& ss, Suite& suite) {
    for (const auto& s : ss) {
        const auto* g = dynamic_cast<const ConcatGame*>(s->game().get());
        if (!g) continue;
        for (const JSeq& p : play_set(*s, suite)) {
            for (std::size_t len = 1; len <= p.size(); ++len) {
                JSeq t = prefix(p, len);
                if (t.back().move.starts_with(TagKind::Copy)) continue;
                auto r = g->route(t.back().move, t.back().label);
                if (!r) {
                    suite.check(false, "unroutable move in " + render(t));
                    continue;
                }
                Restriction local = g->restrict(t, r->component);
                JSeq inner = p_view(local.seq);
                std::vector<std::size_t> local_idx;
                for (std::size_t i : p_view_indices(t, t.size())) {
                    auto at = std::find(local.origin.begin(), local.origin.end(), i);
                    if (at != local.origin.end())
                        local_idx.push_back(static_cast<std::size_t>(at - local.origin.begin()));
                }
                JSeq restricted = subsequence(local.seq, local_idx);
                bool ok = inner.size() <= restricted.size();
                for (std::size_t k = 0; ok && k < inner.size(); ++k) ok = inner[k].move == restricted[k].move;
                suite.check(ok, describe(s) + ": " + render(t));
            }
        }
    }
}

GamePtr bit() { return flat(FlatAnswers{false, {"0", "1"}}); }

// A random game over N together with a subgame: some N leaves become the two-answer game.
std::pair<GamePtr, GamePtr> random_pair(std::mt19937_64& rng, unsigned depth) {
    if (depth == 0 || rng() % 3 == 0) return rng() % 2 ? std::pair{bit(), nat()} : std::pair{nat(), nat()};
    auto [hl, gl] = random_pair(rng, depth - 1);
    auto [hr, gr] = random_pair(rng, depth - 1);
    switch (rng() % 3) {
        case 0: return {lollipop(hl, hr), lollipop(gl, gr)};
        case 1: return {tensor(hl, hr), tensor(gl, gr)};
        default: return {with(hl, hr), with(gl, gr)};
    }
}

void subgames(std::mt19937_64& rng, Suite& suite, int trials) {
    PositionBounds b;
    b.max_length = 4;
    b.probes.numerals = {0, 1, 2};
    b.probes.max_copy_index = 1;
    b.limit = 500;
    for (int t = 0; t < trials; ++t) {
        // H ≤ G on the components of a concatenation gives H‡ ≤ G‡, also after one hiding step.
        auto leaf = [&] { return rng() % 2 ? std::pair{bit(), nat()} : std::pair{nat(), nat()}; };
        auto [hx, gx] = leaf();
        auto [hy, gy] = leaf();
        auto [hz, gz] = leaf();
        GamePtr h = concat(lollipop(hx, hy), lollipop(hy, hz));
        GamePtr g = concat(lollipop(gx, gy), lollipop(gy, gz));
        PositionBounds cb = b;
        cb.max_length = 6;
        bool ok = is_subgame(*h, *g, cb).holds && is_subgame(*hide_game(h, 1), *hide_game(g, 1), b).holds;
        auto [hp, gp] = random_pair(rng, 2);
        ok = ok && is_subgame(*hp, *gp, b).holds;
        suite.check(ok, g->describe().dump() + " over " + h->describe().dump() + "; " + gp->describe().dump());
    }
}

}  // namespace

std::vector<SuiteResult> run_lemma_suites(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<SuiteResult> out;

    Suite stepwise("stepwise hiding");
    stepwise_arenas(rng, stepwise, 200);
    stepwise_games_and_strategies(rng, stepwise, 100);
    out.push_back(stepwise.result());

    Suite order("point-wise order independence");
    pointwise(rng, order, 100);
    out.push_back(order.result());

    Suite cons("hiding on constructions");
    constructions(rng, cons, 40);
    out.push_back(cons.result());

    std::vector<StrategyPtr> ss = interaction_samples(rng, 40);
    Suite det("O-determinacy");
    o_determinacy(ss, det);
    out.push_back(det.result());

    Suite ext("external consistency");
    external_consistency(ss, ext);
    out.push_back(ext.result());

    Suite thm("hiding theorem");
    hiding_theorem(ss, thm);
    out.push_back(thm.result());

    Suite sub("subgame preservation");
    subgames(rng, sub, 200);
    out.push_back(sub.result());

    Suite view("view lemma");
    view_lemma(ss, view);
    out.push_back(view.result());
    return out;
}

}  // namespace hm::acceptance

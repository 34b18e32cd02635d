#include "doctest.h"

#include "hm/games/basic.hpp"
#include "hm/games/composite.hpp"
#include "hm/games/validate.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace hm;

namespace {

GamePtr nn() { return lollipop(nat(), nat()); }
GamePtr bit() { return flat(FlatAnswers{false, {"0", "1"}}); }

PositionBounds bounds(std::size_t len, std::vector<std::uint64_t> nums = {0, 1, 2}, unsigned copies = 1,
                      std::size_t limit = 4000) {
    PositionBounds b;
    b.max_length = len;
    b.probes.numerals = std::move(nums);
    b.probes.max_copy_index = copies;
    b.limit = limit;
    return b;
}

std::set<JSeq> as_set(const std::vector<JSeq>& v) { return {v.begin(), v.end()}; }

// Brute-force ≃ on !A: some bijection of thread indices maps s onto t.
bool permutation_equiv(const JSeq& s, const JSeq& t) {
    if (s.size() != t.size()) return false;
    std::vector<CopyIndex> si, ti;
    for (const auto& e : s)
        if (std::find(si.begin(), si.end(), e.move.path[0].index) == si.end()) si.push_back(e.move.path[0].index);
    for (const auto& e : t)
        if (std::find(ti.begin(), ti.end(), e.move.path[0].index) == ti.end()) ti.push_back(e.move.path[0].index);
    if (si.size() != ti.size()) return false;
    std::vector<std::size_t> perm(ti.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    do {
        bool ok = true;
        for (std::size_t k = 0; k < s.size() && ok; ++k) {
            auto pos = std::find(si.begin(), si.end(), s[k].move.path[0].index) - si.begin();
            JSeq::value_type e = s[k];
            e.move.path[0].index = ti[perm[static_cast<std::size_t>(pos)]];
            ok = e == t[k];
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// A concatenation whose position oracle forgets the pr_B condition.
class TamperedConcat final : public Game {
public:
    explicit TamperedConcat(GamePtr g) : g_(std::move(g)) {}
    std::optional<Label> label(const MoveId& m) const override { return g_->label(m); }
    bool enables(const MoveId* f, const MoveId& t) const override { return g_->enables(f, t); }
    unsigned mu() const override { return g_->mu(); }
    std::vector<MoveId> enabled_moves(const MoveId* f, const MoveProbes& p) const override {
        return g_->enabled_moves(f, p);
    }
    std::string kind() const override { return "tampered"; }
    nlohmann::json describe() const override { return {{"kind", "tampered"}}; }
    bool is_position(const JSeq& s) const override {
        auto& c = dynamic_cast<const ConcatGame&>(*g_);
        return check_justified(s, c).ok() && c.first()->is_position(c.restrict(s, 0).seq) &&
               c.second()->is_position(c.restrict(s, 1).seq);
    }
    GamePtr hide_by(unsigned) const override { return self(); }

private:
    GamePtr g_;
};

}  // namespace

TEST_CASE("positions of the example games") {
    auto flat_positions = as_set(enumerate_positions(*nat(), bounds(4)));
    CHECK(flat_positions.size() == 1 + 1 + 3);
    for (const auto& s : flat_positions) CHECK(s.size() <= 2);
    CHECK(enumerate_positions(*terminal(), bounds(4)).size() == 1);
    auto empty = enumerate_positions(*empty_game(), bounds(4));
    REQUIRE(empty.size() == 2);
    CHECK(empty[1].size() == 1);
    CHECK(pos_equiv(*terminal(), {}, {}, 0));
}

TEST_CASE("hide_game basics") {
    auto g = concat(nn(), nn());
    CHECK(hide_game(g, 0) == g);
    CHECK(g->mu() == 1);
    CHECK(same_game(hide_game(g, Depth::omega()), nn()));
    auto three = concat(nn(), concat(nn(), nn()));
    CHECK(three->mu() == 2);
    for (unsigned i = 0; i <= 2; ++i) {
        auto stepwise = hide_game(hide_game(three, i), 1);
        auto direct = hide_game(three, i + 1);
        CHECK(same_game(stepwise, direct));
    }
}

TEST_CASE("hidden positions of (N ⊸ N) ‡ (N ⊸ N) are the positions of N ⊸ N") {
    auto g = concat(nn(), nn());
    std::set<JSeq> hidden;
    for (const auto& s : enumerate_positions(*g, bounds(8, {0, 1}, 1, 20000)))
        if (hide_jseq(s, 1).size() <= 4) hidden.insert(hide_jseq(s, 1));
    auto direct = as_set(enumerate_positions(*nn(), bounds(4, {0, 1})));
    CHECK(hidden == direct);
}

TEST_CASE("subgames") {
    PositionBounds b = bounds(4, {0, 1});
    for (auto g : {nn(), concat(nn(), nn()), GamePtr(tensor(nat(), nat()))}) CHECK(is_subgame(*g, *g, b).holds);
    auto l = concat(nn(), nn());
    auto r = concat(nn(), nn());
    auto p = hide_game(pairing(l, r), Depth::omega());
    CHECK(is_subgame(*p, *lollipop(nat(), with(nat(), nat())), b).holds);
    auto h = concat(lollipop(nat(), bit()), lollipop(bit(), bit()));
    auto g = concat(lollipop(nat(), bit()), lollipop(bit(), nat()));
    CHECK(is_subgame(*h, *g, bounds(6, {0, 1})).holds);
    CHECK(is_subgame(*hide_game(h, 1), *hide_game(g, 1), b).holds);
    CHECK_FALSE(is_subgame(*g, *h, bounds(6, {0, 1, 2})).holds);
    CHECK_FALSE(is_subgame(*nn(), *g, b).holds);  // μ differs
}

TEST_CASE("validate_game") {
    CHECK(validate_game(*nat(), enumerate_positions(*nat(), bounds(2))).ok());
    auto t = tensor(nat(), nat());
    CHECK(validate_game(*t, enumerate_positions(*t, bounds(4, {0, 1}))).ok());
    auto c = concat(nn(), nn());
    MoveProbes p;
    p.numerals = {0, 1};
    CHECK(validate_game(*c, enumerate_positions(*c, bounds(8, {0, 1}, 1, 20000)), p).ok());
    TamperedConcat bad(c);
    auto diag = validate_game(bad, enumerate_positions(bad, bounds(7, {0, 1}, 1, 20000)), p);
    bool dp2 = std::any_of(diag.violations.begin(), diag.violations.end(),
                           [](const GameViolation& v) { return v.axiom == "DP2"; });
    CHECK(dp2);
}

TEST_CASE("pos_equiv on !N matches brute-force permutation search") {
    auto bn = bang(nat());
    JSeq a{make_entry(*bn, question().under(Tag::bang(3)), {})};
    JSeq b{make_entry(*bn, question().under(Tag::bang(7)), {})};
    CHECK(pos_equiv(*bn, a, b, 0));
    auto positions = enumerate_positions(*bn, bounds(4, {0, 1}, 3, 20000));
    std::mt19937_64 rng(3);
    for (int k = 0; k < 3000; ++k) {
        const auto& s = positions[rng() % positions.size()];
        const auto& t = positions[rng() % positions.size()];
        CHECK(pos_equiv(*bn, s, t, 0) == permutation_equiv(s, t));
        if (pos_equiv(*bn, s, t, 0)) CHECK(s.size() == t.size());
    }
    CHECK_THROWS_AS(pos_equiv(*bn, {make_entry(*bn, numeral(0).under(Tag::bang(0)), {})}, {}, 0), DomainError);
}

TEST_CASE("hiding theorem on games and legality of constructed positions") {
    std::vector<GamePtr> games{
        tensor(concat(nn(), nn()), nat()),
        concat(nn(), concat(nn(), nn())),
        pairing(concat(nn(), nn()), nn()),
        dagger(concat(lollipop(bang(nat()), nat()), nn())),
        curry(concat(lollipop(bang(with(nat(), nat())), nat()), nn())),
    };
    for (const auto& g : games) {
        auto positions = enumerate_positions(*g, bounds(8, {0, 1}, 1, 3000));
        CHECK(positions.size() > 5);
        for (const auto& s : positions) {
            CHECK(check_legal(s, *g).ok());
            for (unsigned d = 1; d <= g->mu(); ++d) {
                auto h = hide_game(g, d);
                CHECK(h->is_position(hide_jseq(s, d)));
            }
        }
    }
}

TEST_CASE("concatenation middle copies mirror each other on even prefixes") {
    auto g = concat(nn(), concat(nn(), nn()));
    for (const auto& s : enumerate_positions(*g, bounds(10, {0, 1}, 1, 5000))) {
        JSeq mid;
        for (const auto& e : s)
            if (e.move.starts_with(TagKind::Copy)) mid.push_back(e);
        if (mid.size() % 2) continue;
        std::vector<MoveId> one, two;
        for (const auto& e : mid) (e.move.path[0].index == 1 ? one : two).push_back(e.move.tail());
        CHECK(one == two);
    }
}

TEST_CASE("parity replay: Player stays in the component of the last Opponent move") {
    auto t = tensor(nn(), nn());
    for (const auto& s : enumerate_positions(*t, bounds(6, {0, 1}, 1, 5000)))
        for (std::size_t k = 1; k < s.size(); ++k)
            if (s[k].label.owner == Owner::P)
                CHECK(s[k].move.path[0].kind == s[k - 1].move.path[0].kind);
    auto c = concat(nn(), nn());
    for (const auto& s : enumerate_positions(*c, bounds(8, {0, 1}, 1, 5000))) {
        for (CopyIndex side : {CopyIndex(0), CopyIndex(1)}) {
            auto r = c->restrict(s, side).seq;
            for (std::size_t k = 1; k < r.size(); ++k) CHECK(r[k].label.owner != r[k - 1].label.owner);
        }
    }
}

TEST_CASE("construction errors and JSON") {
    CHECK_THROWS_AS(concat(nn(), lollipop(bit(), nat())), ConstructionError);
    CHECK_THROWS_AS(dagger(nn()), ConstructionError);
    CHECK_THROWS_AS(curry(nn()), ConstructionError);
    auto g = game_from_json(nlohmann::json::parse(
        R"({"kind":"concat","children":[{"kind":"lollipop","children":[{"kind":"nat"},{"kind":"nat"}]},)"
        R"({"kind":"lollipop","children":[{"kind":"nat"},{"kind":"nat"}]}]})"));
    CHECK(g->mu() == 1);
    CHECK(same_game(game_from_json(g->describe()), g));
}

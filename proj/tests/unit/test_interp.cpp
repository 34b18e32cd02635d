#include "doctest.h"

#include "hm/interp/interp.hpp"
#include "hm/syntax/generate.hpp"

using namespace hm;
using namespace hm::interp;
using namespace hm::syntax;

namespace {

const char* const kDouble = "\\z:N. case(z)[y -> 2*y]";

TermPtr program1() {
    return parse(std::string("(\\x:N. (") + kDouble + ") (succ @x)) 5");
}

Oracle answer_with(std::uint64_t ctx, std::uint64_t input) {
    return [=](const JSeq& u, std::size_t q) -> std::optional<std::uint64_t> {
        return column_of(u[q]) == "ctx" ? ctx : input;
    };
}

std::optional<std::uint64_t> final_answer(const Drive& d) {
    if (!d.answered) return std::nullopt;
    return numeral_value(d.play.back().move);
}

// `table` occurs in order inside `cells`, and both agree exactly on their external cells.
bool matches_table(const std::vector<Cell>& cells, const std::vector<Cell>& table) {
    auto external = [](const std::vector<Cell>& cs) {
        std::vector<Cell> out;
        for (const auto& c : cs)
            if (c.column.rfind("N_", 0) != 0) out.push_back(c);
        return out;
    };
    if (external(cells) != external(table)) return false;
    std::size_t k = 0;
    for (const auto& c : cells)
        if (k < table.size() && c == table[k]) ++k;
    return k == table.size();
}

std::vector<Cell> successor_table(std::uint64_t m) {
    std::string a = std::to_string(m), b = std::to_string(m + 1);
    return {{"res", "q"}, {"arg1", "q"}, {"arg1", "0"}, {"N_2", "q"}, {"N_1", "q"},
            {"ctx", "q"}, {"ctx", a},    {"N_1", a},     {"N_2", b},   {"res", b}};
}

std::vector<Cell> identity_table(std::uint64_t n) {
    std::string a = std::to_string(n);
    return {{"res", "q"}, {"arg1", "q"}, {"arg1", "7"}, {"N_3", "q"}, {"ctx", "q"}, {"ctx", a}, {"N_3", a}, {"res", a}};
}

}  // namespace

TEST_CASE("types and contexts") {
    CHECK(same_game(interp_type(nat_ty()), nat()));
    CHECK(same_game(interp_ctx({}), terminal()));
    CHECK(same_game(interp_type(arrow_ty(nat_ty(), nat_ty())), arrow(nat(), nat())));
    CHECK(same_game(interp_ctx({{"x", nat_ty()}}), with(terminal(), nat())));
    CHECK(interp_type(parse_ty("(N => N) => N"))->normalized());
}

TEST_CASE("numerals and values") {
    Morphism five = interp_term(typecheck({}, num(5)));
    PlaySet ps = plays(*five.strat);
    REQUIRE(ps.plays.size() == 2);
    CHECK(ps.plays[0].empty());
    CHECK(render(ps.plays[1]) == "R.q R.5>0");
    for (const char* v : {"\\x:N. @x", kDouble, "\\f:N => N. \\x:N. case(f @x)[y -> y]", "succ"}) {
        TypedTerm j = typecheck({}, parse(v));
        CHECK(interp_term(j).strat->game()->normalized());
        CHECK(degree_audit(interp_term(j), j).ok);
    }
}

TEST_CASE("theta") {
    StrategyPtr t = theta();
    Drive d = drive(*t, [](const JSeq& u, std::size_t q) -> std::optional<std::uint64_t> {
        return u[q].move.path[1] == Tag::bang(0) ? 2 : 9;
    });
    REQUIRE(final_answer(d));
    CHECK(*final_answer(d) == 9);
    // The second question asks component 2 of the product in a fresh thread.
    CHECK(d.play[3].move.path == std::vector<Tag>{Tag::left(), Tag::bang(1), Tag::right(), Tag::at(2)});
    Drive f = drive(*theta(1), [](const JSeq&, std::size_t) -> std::optional<std::uint64_t> { return 4; });
    CHECK(*final_answer(f) == 5);
}

TEST_CASE("cond plays follow the column tables") {
    Context ctx{{"x", nat_ty()}};
    TypedTerm j = typecheck(ctx, parse("cond (succ @x) @x", ctx));
    Morphism m = interp_term(j);
    CHECK(m.strat->game()->mu() == 3);
    CHECK(degree_audit(m, j).ok);
    for (std::uint64_t v = 0; v <= 8; ++v) {
        Drive zero = drive(*m.strat, answer_with(v, 0));
        CHECK(final_answer(zero) == v + 1);
        CHECK_MESSAGE(matches_table(merged_cells(zero.play), successor_table(v)), render_cells(merged_cells(zero.play)));
        Drive seven = drive(*m.strat, answer_with(v, 7));
        CHECK(final_answer(seven) == v);
        CHECK_MESSAGE(matches_table(merged_cells(seven.play), identity_table(v)), render_cells(merged_cells(seven.play)));
    }
}

TEST_CASE("program 1 contracts to q 12 one degree at a time") {
    TypedTerm j = typecheck({}, program1());
    CHECK(j.exec == 3);
    for (unsigned e = 3;; --e) {
        Morphism m = interp_term(j);
        CHECK(m.strat->game()->mu() == e);
        CHECK(degree_audit(m, j).ok);
        Drive d = drive(*m.strat, [](const JSeq&, std::size_t) { return std::nullopt; });
        CHECK(final_answer(d) == 12u);
        if (e == 0) break;
        TypedTerm k = op_step(j).term;
        CHECK(strat_equiv(*hide_strategy(m.strat, 1), *interp_term(k).strat).equal());
        CHECK(strat_equiv(*m.strat, *interp_term(k).strat).tag == EquivVerdict::Tag::Distinguished);
        j = k;
    }
    CHECK(render_cells(merged_cells(drive(*interp_term(Context{}, program1()).strat,
                                          [](const JSeq&, std::size_t) { return std::nullopt; })
                                        .play))
              .rfind("q@res q@N_3", 0) == 0);
}

TEST_CASE("degree audit of a balanced application tree") {
    TypedTerm j = typecheck({}, parse("((\\a:N. \\b:N. @b) 1) (((\\a:N. \\b:N. @a) 2) ((\\a:N. @a) 3))"));
    CHECK(j.exec == 3);
    DegreeAudit a = degree_audit(interp_term(j), j);
    CHECK(a.ok);
    CHECK(a.max_degree == 3);
    CHECK(a.app_nodes == 5);
}

TEST_CASE("generated configurations") {
    // Closed and first-order-open configurations with first-order interfaces.
    TermGenerator gen(23);
    TyPtr n = nat_ty();
    TyPtr tys[3] = {n, arrow_ty(n, n), arrow_ty(n, arrow_ty(n, n))};
    Context ctxs[3] = {{}, {{"u", n}}, {{"u", n}, {"v", n}}};
    ProbeBounds b;
    b.max_play_len = 12;
    std::size_t steps = 0;
    for (int i = 0; i < 60; ++i) {
        TypedTerm j = typecheck(ctxs[i % 3], gen.configuration(ctxs[i % 3], tys[(i / 3) % 3]));
        Morphism m = interp_term(j);
        DegreeAudit a = degree_audit(m, j);
        CHECK_MESSAGE(a.ok, print(j.raw));
        // E^ω(⟦M⟧) agrees with the interpretation of its value.
        TypedTerm v = typecheck(j.ctx, normal_form(j.raw));
        CHECK_MESSAGE(strat_equiv(*hide_strategy(m.strat, Depth::omega()), *interp_term(v).strat, b).equal(),
                      print(j.raw));
        // Weakening: the extra hypothesis is ignored.
        Context wide = j.ctx;
        wide.emplace_back("w_extra", n);
        Morphism weak = then(proj1(interp_ctx(j.ctx), nat()), interp_term(v));
        CHECK(ext_equiv(weak, interp_term(wide, v.raw), b).equal());
        while (j.exec > 0) {
            TypedTerm k = op_step(j).term;
            Morphism mk = interp_term(k);
            CHECK_MESSAGE(strat_equiv(*hide_strategy(m.strat, 1), *mk.strat, b).equal(), print(j.raw));
            m = mk;
            j = k;
            ++steps;
        }
    }
    CHECK(steps > 30);
}

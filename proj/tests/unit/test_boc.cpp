#include "doctest.h"

#include "hm/boc/boc.hpp"

using namespace hm;

namespace {

ProbeBounds small() {
    ProbeBounds b;
    b.max_play_len = 6;
    b.numeral_probes = {0, 1, 3};
    b.max_copy_index = 1;
    b.fuel = 2000;
    return b;
}

Morphism five() { return morphism(constant(bang(terminal()), 5)); }
Morphism succ() { return morphism(succ_banged()); }
Morphism dbl() { return morphism(double_banged()); }

std::size_t internal_moves(const JSeq& s) {
    std::size_t n = 0;
    for (const auto& e : s) n += e.label.degree > 0;
    return n;
}

JSeq longest(const Strategy& s) {
    JSeq best;
    for (const auto& p : plays(s, small()).plays)
        if (p.size() > best.size()) best = p;
    return best;
}

}  // namespace

TEST_CASE("evaluation is one step of hiding") {
    Morphism v = five();
    CHECK(is_value(v));
    CHECK(evaluate_once(v).strat == v.strat);
    auto seven = evaluate_to_value(morphism(constant(bang(terminal()), 7)), 3);
    REQUIRE(std::holds_alternative<Evaluated>(seven));
    CHECK(std::get<Evaluated>(seven).steps == 0);

    Morphism pipeline = then(five(), then(succ(), dbl()));
    REQUIRE(pipeline.strat->game()->mu() == 2);
    JSeq before = longest(*pipeline.strat);
    Morphism once = evaluate_once(pipeline);
    JSeq after = longest(*once.strat);
    CHECK(before.size() == 10);
    CHECK(internal_moves(before) == 8);
    CHECK(after.size() == 6);
    CHECK(internal_moves(after) == 4);
    CHECK(after == hide_jseq(before, 1));
    CHECK(same_game(once.dom, pipeline.dom));
    CHECK(same_game(once.cod, pipeline.cod));

    auto value = evaluate_to_value(pipeline, 10);
    REQUIRE(std::holds_alternative<Evaluated>(value));
    CHECK(std::get<Evaluated>(value).steps == 2);
    CHECK(render(longest(*std::get<Evaluated>(value).value.strat)) == "R.q R.12>0");
    CHECK(std::holds_alternative<Divergent>(evaluate_to_value(pipeline, 1)));

    Morphism id = identity(nat());
    CHECK(evaluate_once(id).strat == id.strat);
}

TEST_CASE("extensional equivalence") {
    auto b = small();
    CHECK(ext_equiv(succ(), succ(), b).equal());
    auto sd = then(succ(), dbl()), ds = then(dbl(), succ());
    auto v = ext_equiv(sd, ds, b);
    CHECK(v.tag == EquivVerdict::Tag::Distinguished);
    // Different pipelines with the same value.
    auto ss = then(then(succ(), succ()), dbl());
    auto ds2 = then(dbl(), then(succ(), succ()));
    auto alt = then(then(dbl(), succ()), then(succ(), succ()));
    CHECK(ext_equiv(ds2, alt, b).tag == EquivVerdict::Tag::Distinguished);
    CHECK(strat_equiv(*then(five(), sd).strat, *then(then(five(), succ()), dbl()).strat, b).tag ==
          EquivVerdict::Tag::Distinguished);
    CHECK(ext_equiv(then(five(), sd), then(then(five(), succ()), dbl()), b).equal());
    CHECK_FALSE(ext_equiv(ss, sd, b).equal());
}

TEST_CASE("cartesian closed laws hold up to extensional equivalence") {
    auto reports = check_ccboc_laws(default_law_samples(), small());
    CHECK(reports.size() >= 2 * 13);
    for (const auto& r : reports) CHECK_MESSAGE(r.holds, r.law << ": " << r.detail << " " << render(r.witness));
}

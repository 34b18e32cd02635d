#include "hm/boc/boc.hpp"

#include <random>

namespace hm {

namespace {

struct Harness {
    const ProbeBounds& b;
    std::vector<BoCReport> out;

    void record(std::string law, const EquivVerdict& v, bool want_equal = true) {
        BoCReport r{std::move(law), true, {}, {}};
        bool equal = v.tag == EquivVerdict::Tag::Equal;
        if (v.tag == EquivVerdict::Tag::Inconclusive) {
            r.holds = false;
            r.detail = "inconclusive: " + v.reason;
        } else if (equal != want_equal) {
            r.holds = false;
            r.detail = want_equal ? "distinguished (" + v.side + ") " + v.reason : "unexpectedly equal";
            r.witness = v.position;
        } else if (!want_equal) {
            r.detail = "distinguished at " + render(v.position);
            r.witness = v.position;
        }
        out.push_back(std::move(r));
    }

    void check(std::string law, bool ok, std::string detail) {
        out.push_back(BoCReport{std::move(law), ok, ok ? std::string{} : std::move(detail), {}});
    }

    void ext(std::string law, const Morphism& x, const Morphism& y) { record(std::move(law), ext_equiv(x, y, b)); }
};

}  // namespace

std::vector<BoCReport> check_ccboc_laws(const std::vector<MorphismTriple>& samples, const ProbeBounds& b) {
    Harness h{b, {}};
    for (const auto& [f, g, k] : samples) {
        Morphism fg = then(f, g);

        // Subject reduction: one evaluation step keeps the type.
        Morphism e = evaluate_once(fg);
        Interface before = fg.strat->game()->interface(), after = e.strat->game()->interface();
        h.check("subject-reduction", same_game(before.dom, after.dom) && same_game(before.cod, after.cod),
                "evaluation changed the interface");

        // Composition: evaluating a concatenation changes it, and values compose to terminating computations.
        // A morphism includes its game: E drops μ by one even when no play reaches the middle copies.
        if (same_game(e.strat->game(), fg.strat->game()))
            h.record("composition: E(f;g) differs from f;g", strat_equiv(*e.strat, *fg.strat, b), false);
        else
            h.check("composition: E(f;g) differs from f;g", true, {});
        bool terminates = !is_value(f) || !is_value(g) ||
                          std::holds_alternative<Evaluated>(evaluate_to_value(fg, fg.strat->game()->mu()));
        h.check("composition: values compose to a terminating computation", terminates,
                "f;g did not reach a value within μ steps");

        // Identities.
        Morphism id = identity(f.dom);
        h.check("identities: E(id) = id", evaluate_once(id).strat == id.strat ||
                                             strat_equiv(*evaluate_once(id).strat, *id.strat, b).equal(),
                "E(id) differs from id");

        // 2-cells are ≅: reflexive and symmetric on the samples.
        h.ext("2-cells: f ≅ f", f, f);
        Morphism fid = then(f, identity(f.cod));
        h.check("2-cells: ≅ is symmetric", ext_equiv(f, fid, b).tag == ext_equiv(fid, f, b).tag,
                "asymmetric verdicts");

        h.ext("associativity", then(then(f, g), k), then(f, then(g, k)));
        h.ext("left unit", then(identity(f.dom), f), f);
        h.ext("right unit", then(f, identity(f.cod)), f);

        Morphism p = pair(f, fg);
        h.ext("product β (first)", then(p, proj1(f.cod, g.cod)), f);
        h.ext("product β (second)", then(p, proj2(f.cod, g.cod)), fg);
        h.ext("surjective pairing", pair(then(p, proj1(f.cod, g.cod)), then(p, proj2(f.cod, g.cod))), p);

        // Exponentials for μ = π₂ ; g : B & B → C.
        Morphism mu = then(proj2(f.cod, f.cod), g);
        Morphism lam = curry(mu);
        Morphism applied = then(pair(then(proj1(f.cod, f.cod), lam), proj2(f.cod, f.cod)), ev(f.cod, g.cod));
        h.ext("exponential β", applied, mu);
        h.ext("exponential η", curry(applied), lam);
    }
    return h.out;
}

std::vector<MorphismTriple> default_law_samples() {
    Morphism five = morphism(constant(bang(terminal()), 5));
    Morphism succ = morphism(succ_banged());
    Morphism dbl = morphism(double_banged());
    return {{five, succ, dbl}, {succ, dbl, succ}};
}

std::vector<MorphismTriple> sample_law_triples(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    auto affine = [&]() {
        std::uint64_t a = 1 + rng() % 3, c = rng() % 3;
        return morphism(unary([a, c](std::uint64_t n) { return a * n + c; },
                              std::to_string(a) + "n+" + std::to_string(c), true));
    };
    // Endomorphisms of N: values, constants, and one unevaluated composite.
    auto endo = [&]() -> Morphism {
        switch (rng() % 5) {
            case 0: return morphism(succ_banged());
            case 1: return morphism(double_banged());
            case 2: return morphism(constant(bang(nat()), rng() % 6));
            case 3: return affine();
            default: return then(morphism(succ_banged()), morphism(double_banged()));
        }
    };
    std::vector<MorphismTriple> out;
    for (std::size_t i = 0; i < count; ++i) {
        Morphism f = rng() % 3 == 0 ? morphism(constant(bang(terminal()), rng() % 6)) : endo();
        Morphism g = endo();
        Morphism h = endo();
        out.push_back({f, g, h});
    }
    return out;
}

}  // namespace hm

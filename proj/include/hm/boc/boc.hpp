#pragma once

#include "hm/strategies/analysis.hpp"

#include <string>
#include <variant>
#include <vector>

namespace hm {

// A morphism A → B: a strategy on some J with H^ω(J) ⊴ !A ⊸ B.
struct Morphism {
    GamePtr dom;  // A (normalized)
    GamePtr cod;  // B (normalized)
    StrategyPtr strat;
};

// Reads dom/cod off the strategy's interface !A ⊸ B.
Morphism morphism(StrategyPtr s);

bool is_value(const Morphism& f);

Morphism identity(GamePtr a);                    // der_A
Morphism then(const Morphism& f, const Morphism& g);  // f ; g = f† ‡ g
Morphism pair(const Morphism& f, const Morphism& g);  // ⟨f, g⟩ : C → A & B
Morphism proj1(GamePtr a, GamePtr b);             // A & B → A
Morphism proj2(GamePtr a, GamePtr b);             // A & B → B
Morphism curry(const Morphism& f);                // A & B → C gives A → (B ⇒ C)
Morphism ev(GamePtr b, GamePtr c);                // (B ⇒ C) & B → C
GamePtr arrow(GamePtr a, GamePtr b);              // A ⇒ B = !A ⊸ B

Morphism evaluate_once(const Morphism& f);

struct Evaluated {
    Morphism value;
    std::size_t steps = 0;
};
struct Divergent {
    std::size_t fuel = 0;
};
std::variant<Evaluated, Divergent> evaluate_to_value(const Morphism& f, std::size_t fuel);

EquivVerdict ext_equiv(const Morphism& f, const Morphism& g, const ProbeBounds& b = {});

struct BoCReport {
    std::string law;  // axiom or CCC law name
    bool holds = true;
    std::string detail;
    JSeq witness;
};
nlohmann::json to_json(const BoCReport& r);

struct MorphismTriple {
    Morphism f, g, h;  // f : A → B, g : B → C, h : C → D
};

std::vector<BoCReport> check_ccboc_laws(const std::vector<MorphismTriple>& samples, const ProbeBounds& b = {});

// Default sample triples over numerals, successor and doubling.
std::vector<MorphismTriple> default_law_samples();
// `count` triples over numerals, constants, affine maps and a composite; deterministic per seed.
std::vector<MorphismTriple> sample_law_triples(std::uint64_t seed, std::size_t count);

}  // namespace hm

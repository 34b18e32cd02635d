#pragma once

#include "hm/interp/interp.hpp"
#include "hm/syntax/generate.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hm::dcp {

struct StepReport {
    syntax::TypedTerm before, after;
    EquivVerdict hide_matches;    // H(⟦before⟧) against ⟦after⟧, expected Equal
    EquivVerdict strictly_finer;  // ⟦before⟧ against ⟦after⟧, expected Distinguished
    ProbeBounds bounds;
    bool passed() const {
        return hide_matches.tag == EquivVerdict::Tag::Equal && strictly_finer.tag == EquivVerdict::Tag::Distinguished;
    }
};

// j must be a configuration with exec ≥ 1.
StepReport check_step(const syntax::TypedTerm& j, const ProbeBounds& b = {}, const interp::Options& o = {});

struct TraceReport {
    syntax::TypedTerm start;
    std::vector<StepReport> steps;  // M → M₁ → … → value
    EquivVerdict terminal;          // E^ω(⟦M⟧) against ⟦value⟧
    std::vector<std::string> chain;  // play chain of each configuration, start first
    bool passed() const;
};

TraceReport verify_trace(const syntax::TypedTerm& j, const ProbeBounds& b = {}, const interp::Options& o = {});

// The play of σ against an Opponent answering every external question with `input`, as the
// move sequence with relay copies collapsed: merged cells, then runs of one numeral merged.
std::string play_chain(const Strategy& s, std::uint64_t input = 0);

// Ht(N) = 0, Ht(A ⇒ B) = max(Ht(A) + 1, Ht(B)).
unsigned type_height(const syntax::TyPtr& a);
// Largest height among the program's type and the types of its λ-abstractions.
unsigned term_height(const syntax::TypedTerm& j);

struct CorpusItem {
    syntax::TypedTerm term;
    unsigned height = 0;
};

// Closed configurations of the first-order types N, N ⇒ N, N ⇒ N ⇒ N in rotation; deterministic per seed.
std::vector<CorpusItem> gen_corpus(std::uint64_t seed, std::size_t count, syntax::GenOptions opts = {});

struct CorpusReport {
    std::size_t programs = 0;
    std::size_t steps = 0;
    std::size_t failed_steps = 0;
    std::size_t inconclusive = 0;
    std::size_t exec_mismatches = 0;  // trace length differs from the execution number
    std::vector<std::size_t> by_height;  // programs per height
    std::vector<TraceReport> failures;
    double seconds = 0;
    bool passed() const { return failed_steps == 0 && inconclusive == 0 && exec_mismatches == 0 && failures.empty(); }
};

CorpusReport verify_corpus(std::uint64_t seed, std::size_t count, syntax::GenOptions opts = {},
                           const ProbeBounds& b = {});

nlohmann::json to_json(const StepReport& r);
nlohmann::json to_json(const TraceReport& r);
nlohmann::json to_json(const CorpusReport& r);

}  // namespace hm::dcp

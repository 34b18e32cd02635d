#pragma once

#include "hm/boc/boc.hpp"
#include "hm/strategies/analysis.hpp"
#include "hm/syntax/reduce.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hm::interp {

// ⟦N⟧ = N, ⟦A⇒B⟧ = !⟦A⟧ ⊸ ⟦B⟧.
GamePtr interp_type(const syntax::TyPtr& a);
// ⟦ε⟧ = 1, ⟦Γ, x:A⟧ = ⟦Γ⟧ & ⟦A⟧.
GamePtr interp_ctx(const syntax::Context& ctx);

// ϑ : !(N & N^ω) ⊸ N. Asks the scrutinee, then component n of the product, and copies its answer.
// `shift` perturbs the copied answer; it exists only for fault injection.
StrategyPtr theta(std::uint64_t shift = 0);

struct Options {
    std::uint64_t theta_shift = 0;
    // false keeps each case as the unhidden ⟨⟦scrutinee⟧, ⟨⟦F(n)⟧⟩_n⟩† ‡ ϑ; for debugging only.
    bool hide_cases = true;
};

Morphism interp_term(const syntax::TypedTerm& j, const Options& o = {});
// Interprets a well-typed raw term in `ctx`; the term must be free of family placeholders.
Morphism interp_term(const syntax::Context& ctx, const syntax::TermPtr& t, const Options& o = {});

// ⌊σ⌋ applied to τ: ⟨τ, σ⟩† ‡ ev.
Morphism apply_sem(const Morphism& tau, const Morphism& sigma);

struct DegreeAudit {
    bool ok = true;
    unsigned max_degree = 0;  // μ of the interpreted game
    unsigned exec = 0;        // execution number of the root
    unsigned app_nodes = 0;
    std::vector<std::string> mismatches;  // "path: detail"
};

DegreeAudit degree_audit(const Morphism& m, const syntax::TypedTerm& j);

// Opponent's answer to an external Player question at index `q` of u; nullopt leaves it open.
using Oracle = std::function<std::optional<std::uint64_t>(const JSeq& u, std::size_t q)>;

struct Drive {
    JSeq play;  // with internal moves
    RunOutcome outcome = RunOutcome::Reply;
    bool answered = false;  // the opening question received its answer
};

// Plays σ against a deterministic Opponent that opens with the initial question and answers
// every external Player question through `oracle`.
Drive drive(const Strategy& s, const Oracle& oracle, std::size_t fuel = 10000, std::size_t max_external = 64);

// The column of a move in a play of ⟦Γ ⊢ M : A⟧: "ctx" for the context, "argj" for the j-th
// argument of A, "res" for the result, "N_d" for internal moves of degree d.
std::string column_of(const Entry& e);

struct Cell {
    std::string column;
    std::string move;  // "q" or a numeral
    bool operator==(const Cell&) const = default;
};

// One cell per entry, merging runs of the same move in the same column (copycat relays).
std::vector<Cell> merged_cells(const JSeq& play);
std::string render_cells(const std::vector<Cell>& cells);
// One row per cell under the columns ctx, arg1 … argk, N_1 … N_μ, res; internal moves carry
// their degree as a subscript.
std::string render_columns(const std::vector<Cell>& cells);

}  // namespace hm::interp

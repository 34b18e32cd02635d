#pragma once

#include "hm/strategies/strategy.hpp"

#include <map>
#include <string>
#include <vector>

namespace hm {

struct PlaySet {
    std::vector<JSeq> plays;  // even-length, prefix-closed, sorted
    std::vector<std::pair<JSeq, std::string>> inconclusive;  // odd position and reason
};

// Bounded unfolding of σ: Opponent probes external moves (one representative per canonical
// form when up_to_equiv); internal Opponent moves are the forced copies. max_play_len bounds
// the external length, fuel the internal steps between two external moves.
PlaySet plays(const Strategy& s, const ProbeBounds& b = {}, bool up_to_equiv = true);

// The external Opponent moves available after the even play u, keyed by canonical form.
std::vector<Entry> opponent_probes(const Strategy& s, const JSeq& u, const ProbeBounds& b,
                                   bool up_to_equiv = true);

enum class RunOutcome { Reply, Undefined, Fuel, Broken };

// Extends u, which ends in an Opponent move, by σ's moves and the forced internal Opponent
// copies up to σ's next external reply; `fuel` bounds the internal steps.
RunOutcome run_to_reply(const Strategy& s, JSeq& u, std::size_t fuel);

struct EquivVerdict {
    enum class Tag { Equal, Distinguished, Inconclusive };
    Tag tag = Tag::Equal;
    JSeq position;  // Distinguished: external Opponent-ended play on which the two disagree
    std::string side;  // "left"/"right": only that side replies; "both": replies differ
    std::string reason;
    std::size_t renamed = 0;  // internal move names paired up by the renaming

    bool equal() const { return tag == Tag::Equal; }
};

std::string to_string(EquivVerdict::Tag t);
nlohmann::json to_json(const EquivVerdict& v);

// Synchronous bisimulation over Opponent probes, comparing full replies (internal moves
// included) up to copy-index renumbering and a consistent renaming of internal moves.
EquivVerdict strat_equiv(const Strategy& s, const Strategy& t, const ProbeBounds& b = {});

struct PropertyResult {
    bool holds = true;
    JSeq witness;
    std::string detail;
};

struct PropertyReport {
    std::map<std::string, PropertyResult> results;  // deterministic, externally_consistent, valid, ...
    std::vector<std::string> notes;
    bool all_hold() const;
};

nlohmann::json to_json(const PropertyReport& r);

PropertyReport check_strategy_properties(const Strategy& s, const ProbeBounds& b = {});

// Columned rendering, one column per component game, internal moves with degree subscripts.
std::string render_table(const Strategy& s, const JSeq& play);

}  // namespace hm

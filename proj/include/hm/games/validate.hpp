#pragma once

#include "hm/games/game.hpp"

#include <string>
#include <vector>

namespace hm {

// Renumbers BangIndex and Thread indices per scope by order of first occurrence. The scope
// of an index is the canonicalised path prefix before it.
JSeq canonical(const JSeq& s);

// s ≃^d t, decided as equality of canonical forms of the d-hidden sequences.
bool pos_equiv(const Game& g, const JSeq& s, const JSeq& t, Depth d);

struct PositionBounds {
    MoveProbes probes;
    std::size_t max_length = 4;
    std::size_t limit = 2000;  // cap on the number of positions produced
};

// All positions up to the bounds, found by extending with enabled moves and filtering
// through the position oracle. Prefix-closed by construction.
std::vector<JSeq> enumerate_positions(const Game& g, const PositionBounds& b);

// The extensions s·m accepted by the oracle, one per candidate move and justifier.
std::vector<JSeq> extensions(const Game& g, const JSeq& s, const MoveProbes& probes);

struct GameViolation {
    std::string axiom;  // P1, DP2, I1, I2, DI3, legality
    std::string detail;
};

struct GameDiagnostics {
    std::vector<GameViolation> violations;
    std::size_t probed = 0;
    bool ok() const { return violations.empty(); }
};

GameDiagnostics validate_game(const Game& g, const std::vector<JSeq>& probe, const MoveProbes& probes = {});

struct SubgameVerdict {
    bool holds = true;
    std::string witness;
};

SubgameVerdict is_subgame(const Game& h, const Game& g, const PositionBounds& b);

}  // namespace hm

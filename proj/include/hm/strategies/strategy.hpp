#pragma once

#include "hm/games/game.hpp"

#include <json.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hm {

struct ProbeBounds {
    std::size_t max_play_len = 48;
    std::vector<std::uint64_t> numeral_probes{0, 1, 2, 3, 4, 5, 6, 7, 8};
    unsigned max_copy_index = 3;
    std::size_t fuel = 10000;

    MoveProbes moves() const { return {numeral_probes, max_copy_index}; }
};

nlohmann::json to_json(const ProbeBounds& b);
// Missing keys keep their defaults; unknown keys and non-positive values are rejected.
ProbeBounds bounds_from_json(const nlohmann::json& j, ProbeBounds base = {});

struct FuelExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A deterministic strategy presented as its next-move function on odd-length positions.
class Strategy {
public:
    virtual ~Strategy() = default;
    virtual GamePtr game() const = 0;
    // Player's reply to a position ending in an Opponent move; nullopt where undefined.
    virtual std::optional<Entry> next(const JSeq& s) const = 0;
    // Construction tree mirroring the combinators used.
    virtual nlohmann::json meta() const = 0;
};

using StrategyPtr = std::shared_ptr<const Strategy>;
using PartnerMap = std::function<std::optional<MoveId>(const MoveId&)>;

// Copies each Opponent move to its partner; a copy points at the partner of the
// original's justifier, or at the original when that justifier was not copied.
StrategyPtr copycat_with(GamePtr game, PartnerMap partner, std::string name);

StrategyPtr copycat(GamePtr a);      // on A ⊸ A
StrategyPtr dereliction(GamePtr a);  // on !A ⊸ A, thread 0
// On dom ⊸ N: answers the initial question with n.
StrategyPtr constant(GamePtr dom, std::uint64_t n);
// On N ⊸ N (linear) or !N ⊸ N (thread 0): asks the input once and answers f(input).
StrategyPtr unary(std::function<std::uint64_t(std::uint64_t)> f, std::string name, bool banged);
StrategyPtr succ_linear();
StrategyPtr double_linear();
StrategyPtr succ_banged();
StrategyPtr double_banged();

StrategyPtr tensor_strat(StrategyPtr l, StrategyPtr r);
StrategyPtr pairing_strat(StrategyPtr l, StrategyPtr r);
using StrategyFamily = std::function<StrategyPtr(std::uint64_t)>;
StrategyPtr pairing_family_strat(StrategyFamily members, unsigned mu);
StrategyPtr promotion_strat(StrategyPtr s);
StrategyPtr curry(StrategyPtr s);
StrategyPtr uncurry(StrategyPtr s);
StrategyPtr concat_strat(StrategyPtr s, StrategyPtr t);
StrategyPtr hide_strategy(StrategyPtr s, Depth d);
StrategyPtr hide_strategy(StrategyPtr s, Depth d, std::size_t fuel);
StrategyPtr compose(StrategyPtr s, StrategyPtr t);

// The pr_B response to a position ending in an internal Player move in a middle copy.
std::optional<Entry> forced_o(const JSeq& s);

// The normalized game dom ⊸ cod that external plays of the strategy live in.
GamePtr external_game(const Strategy& s);

}  // namespace hm

#pragma once

#include "hm/strategies/strategy.hpp"

namespace hm::detail {

MoveId path_move(std::string base, std::initializer_list<Tag> tags);

// Asks `inner` for its reply on s restricted to `component` of `outer`, lifting the answer back.
std::optional<Entry> delegate(const Game& outer, const CopyIndex& component, const Strategy& inner,
                              const JSeq& s);

// In copycat plays pairs are (Opponent original, Player copy): the other member of j's pair.
std::size_t partner_index(const JSeq& s, std::size_t j);

}  // namespace hm::detail

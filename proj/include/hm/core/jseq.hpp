#pragma once

#include "hm/core/move.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hm {

// One occurrence in a justified sequence. The label is cached from the arena so that
// hiding and views never need to consult the arena again.
struct Entry {
    MoveId move;
    Label label;
    std::optional<std::size_t> pointer;

    bool operator==(const Entry&) const = default;
    std::strong_ordering operator<=>(const Entry&) const = default;
};

// Pointers are indices into earlier entries; equality is entrywise.
using JSeq = std::vector<Entry>;

struct Completeness {
    Depth d;
    bool holds;
};

// Empty, or ending in an external or (> d)-internal move.
Completeness completeness(const JSeq& s, Depth d, unsigned mu);
bool is_complete(const JSeq& s, unsigned d);

// The first ancestor of entry i along its pointer chain that survives d-fold hiding.
std::size_t external_justifier(const JSeq& s, std::size_t i, unsigned d);

// Deletes 0 < degree ≤ d, applies ⊖ d to survivors and rewires pointers.
JSeq hide_jseq(const JSeq& s, unsigned d);

// The ♮ operator: hide, then drop the last survivor unless s was d-complete.
JSeq truncate_hide(const JSeq& s, unsigned d);

// Deletes the single entry `i`, which must have degree 1, rewiring its children to
// its justifier and decrementing nothing else. Used to test order independence.
JSeq delete_entry(const JSeq& s, std::size_t i);

// Indices of the view of s[0, len), in ascending order.
std::vector<std::size_t> p_view_indices(const JSeq& s, std::size_t len);
std::vector<std::size_t> o_view_indices(const JSeq& s, std::size_t len);

JSeq p_view(const JSeq& s);
JSeq o_view(const JSeq& s);
// Sub-sequence at the given ascending indices; pointers to dropped entries become absent.
JSeq subsequence(const JSeq& s, const std::vector<std::size_t>& indices);

JSeq prefix(const JSeq& s, std::size_t len);

nlohmann::json to_json(const JSeq& s);
JSeq jseq_from_json(const nlohmann::json& j);
// Compact one-line rendering, e.g. "R.q O/ L.q>0 ...".
std::string render(const JSeq& s);

}  // namespace hm

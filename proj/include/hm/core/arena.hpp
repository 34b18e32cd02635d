#pragma once

#include "hm/core/jseq.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hm {

// Finite slices through infinite move sets: numerals answered by flat games and
// copy indices opened under exponentials.
struct MoveProbes {
    std::vector<std::uint64_t> numerals{0, 1, 2, 3, 4, 5, 6, 7, 8};
    unsigned max_copy_index = 3;
};

// An intensional dynamic arena: membership, labels and enabling as computable predicates.
class Arena {
public:
    virtual ~Arena() = default;

    // Label of m, or nullopt when m is not a move of the arena.
    virtual std::optional<Label> label(const MoveId& m) const = 0;
    // from == nullptr stands for ⋆.
    virtual bool enables(const MoveId* from, const MoveId& to) const = 0;
    virtual unsigned mu() const = 0;
    // Moves enabled by `from` (⋆ when null), sliced by the probes.
    virtual std::vector<MoveId> enabled_moves(const MoveId* from, const MoveProbes& probes) const = 0;

    bool contains(const MoveId& m) const { return label(m).has_value(); }
    Label label_of(const MoveId& m) const;
};

using ArenaPtr = std::shared_ptr<const Arena>;

struct ArenaViolation {
    std::string axiom;  // "E1".."E4" or "mu"
    std::string detail;
};

struct ArenaDiagnostics {
    std::vector<ArenaViolation> violations;
    unsigned mu = 0;  // supremum of degrees over the sample
    bool ok() const { return violations.empty(); }
};

ArenaDiagnostics validate_arena(const Arena& a, const std::vector<MoveId>& sample);

// The d-external arena. Enabling across deleted chains is searched through
// enabled_moves under `probes`.
ArenaPtr hide_arena(ArenaPtr a, Depth d, MoveProbes probes = {});

// Every move reachable from ⋆ through enabled_moves, up to `depth` enabling steps.
std::vector<MoveId> sample_moves(const Arena& a, const MoveProbes& probes, unsigned depth);

enum class LegalityKind { Ok, Justification, Alternation, GeneralizedVisibility, IeSwitch };

struct LegalityVerdict {
    LegalityKind kind = LegalityKind::Ok;
    std::size_t position = 0;
    std::string detail;
    bool ok() const { return kind == LegalityKind::Ok; }
};

std::string to_string(LegalityKind k);

// j-sequence conditions only: labels agree with the arena, pointers go back to enablers.
LegalityVerdict check_justified(const JSeq& s, const Arena& a);
LegalityVerdict check_legal(const JSeq& s, const Arena& a);

// Builds an entry, looking the label up in the arena.
Entry make_entry(const Arena& a, MoveId m, std::optional<std::size_t> pointer);

}  // namespace hm

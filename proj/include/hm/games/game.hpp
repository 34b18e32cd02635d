#pragma once

#include "hm/core/arena.hpp"

#include <json.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>

namespace hm {

class Game;
using GamePtr = std::shared_ptr<const Game>;

struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An occurrence translated into one constituent of a construction.
struct Routed {
    CopyIndex component;  // constituent (0/1 for binary nodes, thread or index otherwise)
    bool shared = false;  // belongs to every constituent (the common domain of a pairing)
    MoveId move;
    Label label;
};

// s restricted to one constituent, with pointers into dropped entries removed.
struct Restriction {
    JSeq seq;
    std::vector<std::size_t> origin;  // origin[k] = index in s of seq[k]
};

// The external interface dom ⊸ cod of a game whose ω-hiding is a linear function space.
struct Interface {
    GamePtr dom;
    GamePtr cod;
};

// A dynamic game: an intensional arena with a position oracle, built as a construction tree.
class Game : public Arena, public std::enable_shared_from_this<Game> {
public:
    virtual std::string kind() const = 0;
    virtual nlohmann::json describe() const = 0;
    virtual bool is_position(const JSeq& s) const = 0;
    // Structural d-hiding for a resolved d ≥ 1.
    virtual GamePtr hide_by(unsigned d) const = 0;
    // Only for games shaped like (a hidden form of) A ⊸ B.
    virtual Interface interface() const;

    // Routing to constituents; leaves have none.
    virtual std::optional<Routed> route(const MoveId& m, const Label& l) const;
    virtual MoveId lift(const CopyIndex& component, const MoveId& inner) const;
    virtual Label lift_label(const CopyIndex& component, const MoveId& inner, const Label& l) const;

    bool normalized() const { return mu() == 0; }
    std::string type_key() const { return describe().dump(); }
    GamePtr self() const { return shared_from_this(); }

    // Entries of s routed to `component`, plus shared entries.
    Restriction restrict(const JSeq& s, const CopyIndex& component) const;
};

// Answers of a flat game: all naturals, or a finite set of tokens (possibly empty).
struct FlatAnswers {
    bool naturals = true;
    std::set<std::string> tokens;
};

GamePtr terminal();
GamePtr flat(FlatAnswers answers);
GamePtr nat();
GamePtr empty_game();
GamePtr tensor(GamePtr l, GamePtr r);
// A ⊸ B; A is normalized by ω-hiding first.
GamePtr lollipop(GamePtr a, GamePtr b);
GamePtr with(GamePtr l, GamePtr r);
// &_{n∈ℕ} A, moves tagged Index(n).
GamePtr power(GamePtr a);
GamePtr bang(GamePtr a);
// ⟨L, R⟩ for H^ω(L) ⊴ C ⊸ A and H^ω(R) ⊴ C ⊸ B.
GamePtr pairing(GamePtr l, GamePtr r);
// ⟨G_n⟩_{n∈ℕ} for H^ω(G_n) ⊴ C ⊸ A; `mu` bounds μ(G_n) for all n.
using GameFamily = std::function<GamePtr(std::uint64_t)>;
GamePtr pairing_family(GameFamily members, unsigned mu);
// G† for H^ω(G) ⊴ !A ⊸ B.
GamePtr dagger(GamePtr g);
// J ‡ K for H^ω(J) ⊴ A ⊸ B, H^ω(K) ⊴ B ⊸ C, B normalized.
GamePtr concat(GamePtr j, GamePtr k);
// Λ(G) for H^ω(G) ⊴ !(Γ & A) ⊸ B, giving !Γ ⊸ (!A ⊸ B).
GamePtr curry(GamePtr g);
// Λ⁻¹(G) for H^ω(G) ⊴ !Γ ⊸ (!A ⊸ B), giving !(Γ & A) ⊸ B.
GamePtr uncurry(GamePtr g);

GamePtr hide_game(const GamePtr& g, Depth d);

// Construction-tree JSON for normalized and concatenated types (no families).
GamePtr game_from_json(const nlohmann::json& j);

// Structural identity of games as construction trees.
bool same_game(const GamePtr& a, const GamePtr& b);

}  // namespace hm

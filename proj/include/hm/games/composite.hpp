#pragma once

#include "hm/games/game.hpp"

#include <map>
#include <mutex>

namespace hm {

// ⟨L, R⟩ (components 0/1) or ⟨G_n⟩_{n∈ℕ} (component n). The domain C is shared.
class PairingGame final : public Game {
public:
    PairingGame(GamePtr l, GamePtr r);
    PairingGame(GameFamily family, unsigned mu);

    std::optional<Label> label(const MoveId& m) const override;
    bool enables(const MoveId* from, const MoveId& to) const override;
    unsigned mu() const override;
    std::vector<MoveId> enabled_moves(const MoveId* from, const MoveProbes& probes) const override;
    std::string kind() const override { return family_ ? "pairing_family" : "pairing"; }
    nlohmann::json describe() const override;
    bool is_position(const JSeq& s) const override;
    GamePtr hide_by(unsigned d) const override;
    Interface interface() const override;
    std::optional<Routed> route(const MoveId& m, const Label& l) const override;
    MoveId lift(const CopyIndex& c, const MoveId& inner) const override;

    bool is_family() const { return static_cast<bool>(family_); }
    GamePtr member(const CopyIndex& c) const;

private:
    Tag side_tag(const CopyIndex& c) const;
    Tag part_tag(const CopyIndex& c) const;

    GamePtr left_, right_;
    GameFamily family_;
    unsigned family_mu_ = 0;
    mutable std::mutex memo_mutex_;
    mutable std::map<std::uint64_t, GamePtr> memo_;
};

// G† with threads i: codomain moves under BangIndex(i), domain moves under
// BangIndex(⟨i, j⟩), internal moves under Thread(i).
class DaggerGame final : public Game {
public:
    explicit DaggerGame(GamePtr g);

    std::optional<Label> label(const MoveId& m) const override;
    bool enables(const MoveId* from, const MoveId& to) const override;
    unsigned mu() const override { return inner_->mu(); }
    std::vector<MoveId> enabled_moves(const MoveId* from, const MoveProbes& probes) const override;
    std::string kind() const override { return "dagger"; }
    nlohmann::json describe() const override;
    bool is_position(const JSeq& s) const override;
    GamePtr hide_by(unsigned d) const override;
    Interface interface() const override;
    std::optional<Routed> route(const MoveId& m, const Label& l) const override;
    MoveId lift(const CopyIndex& c, const MoveId& inner) const override;

    const GamePtr& inner() const { return inner_; }

private:
    GamePtr inner_;
};

// J ‡ K: component 0 is J, component 1 is K. Middle copies are Copy(1) (J's codomain)
// and Copy(2) (K's domain), shifted by μ = max(μ(J), μ(K)) + 1.
class ConcatGame final : public Game {
public:
    ConcatGame(GamePtr j, GamePtr k);

    std::optional<Label> label(const MoveId& m) const override;
    bool enables(const MoveId* from, const MoveId& to) const override;
    unsigned mu() const override { return shift_; }
    std::vector<MoveId> enabled_moves(const MoveId* from, const MoveProbes& probes) const override;
    std::string kind() const override { return "concat"; }
    nlohmann::json describe() const override;
    bool is_position(const JSeq& s) const override;
    GamePtr hide_by(unsigned d) const override;
    Interface interface() const override;
    std::optional<Routed> route(const MoveId& m, const Label& l) const override;
    MoveId lift(const CopyIndex& c, const MoveId& inner) const override;
    Label lift_label(const CopyIndex& c, const MoveId& inner, const Label& l) const override;

    const GamePtr& first() const { return j_; }
    const GamePtr& second() const { return k_; }
    const GamePtr& middle() const { return middle_; }
    unsigned shift() const { return shift_; }

    // The pr_B condition on the middle copies.
    bool middle_is_copycat(const JSeq& s) const;

private:
    GamePtr j_, k_, middle_;
    unsigned shift_;
};

// Currying retags !(Γ&A) ⊸ B as !Γ ⊸ (!A ⊸ B); uncurrying is the inverse retagging with
// Γ-threads at even and A-threads at odd indices. Component 0 is the wrapped game.
class CurryGame final : public Game {
public:
    CurryGame(GamePtr g, bool uncurry);

    std::optional<Label> label(const MoveId& m) const override;
    bool enables(const MoveId* from, const MoveId& to) const override;
    unsigned mu() const override { return inner_->mu(); }
    std::vector<MoveId> enabled_moves(const MoveId* from, const MoveProbes& probes) const override;
    std::string kind() const override { return uncurry_ ? "uncurry" : "curry"; }
    nlohmann::json describe() const override;
    bool is_position(const JSeq& s) const override;
    GamePtr hide_by(unsigned d) const override;
    Interface interface() const override { return iface_; }
    std::optional<Routed> route(const MoveId& m, const Label& l) const override;
    MoveId lift(const CopyIndex& c, const MoveId& inner) const override;

    const GamePtr& inner() const { return inner_; }
    // Outer name → wrapped name, nullopt when the outer name is malformed.
    std::optional<MoveId> to_inner(const MoveId& m) const;
    MoveId to_outer(const MoveId& m) const;

private:
    GamePtr inner_;
    bool uncurry_;
    Interface iface_;
};

}  // namespace hm

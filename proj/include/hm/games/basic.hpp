#pragma once

#include "hm/games/game.hpp"

namespace hm {

class TerminalGame final : public Game {
public:
    std::optional<Label> label(const MoveId& m) const override;
    bool enables(const MoveId* from, const MoveId& to) const override;
    unsigned mu() const override { return 0; }
    std::vector<MoveId> enabled_moves(const MoveId* from, const MoveProbes& probes) const override;
    std::string kind() const override { return "terminal"; }
    nlohmann::json describe() const override { return {{"kind", "terminal"}}; }
    bool is_position(const JSeq& s) const override;
    GamePtr hide_by(unsigned) const override { return self(); }
};

class FlatGame final : public Game {
public:
    explicit FlatGame(FlatAnswers answers) : answers_(std::move(answers)) {}
    std::optional<Label> label(const MoveId& m) const override;
    bool enables(const MoveId* from, const MoveId& to) const override;
    unsigned mu() const override { return 0; }
    std::vector<MoveId> enabled_moves(const MoveId* from, const MoveProbes& probes) const override;
    std::string kind() const override { return "flat"; }
    nlohmann::json describe() const override;
    bool is_position(const JSeq& s) const override;
    GamePtr hide_by(unsigned) const override { return self(); }

private:
    bool is_answer(const std::string& base) const;
    FlatAnswers answers_;
};

// Tensor, with and linear implication share the Left/Right tagging.
class BinaryGame final : public Game {
public:
    BinaryGame(std::string kind, GamePtr l, GamePtr r, bool flip_left, bool exclusive)
        : kind_(std::move(kind)), left_(std::move(l)), right_(std::move(r)),
          flip_left_(flip_left), exclusive_(exclusive) {}
    std::optional<Label> label(const MoveId& m) const override;
    bool enables(const MoveId* from, const MoveId& to) const override;
    unsigned mu() const override;
    std::vector<MoveId> enabled_moves(const MoveId* from, const MoveProbes& probes) const override;
    std::string kind() const override { return kind_; }
    nlohmann::json describe() const override;
    bool is_position(const JSeq& s) const override;
    GamePtr hide_by(unsigned d) const override;
    Interface interface() const override;
    std::optional<Routed> route(const MoveId& m, const Label& l) const override;
    MoveId lift(const CopyIndex& c, const MoveId& inner) const override;
    Label lift_label(const CopyIndex& c, const MoveId& inner, const Label& l) const override;

    const GamePtr& left() const { return left_; }
    const GamePtr& right() const { return right_; }

private:
    std::string kind_;
    GamePtr left_, right_;
    bool flip_left_;  // ⊸: domain ownership flipped, codomain initials enable domain initials
    bool exclusive_;  // &: at most one side is played
};

// !A (BangIndex threads) and &_{n∈ℕ} A (Index components).
class IndexedGame final : public Game {
public:
    IndexedGame(TagKind tag, GamePtr inner) : tag_(tag), inner_(std::move(inner)) {}
    std::optional<Label> label(const MoveId& m) const override;
    bool enables(const MoveId* from, const MoveId& to) const override;
    unsigned mu() const override { return inner_->mu(); }
    std::vector<MoveId> enabled_moves(const MoveId* from, const MoveProbes& probes) const override;
    std::string kind() const override { return tag_ == TagKind::BangIndex ? "bang" : "power"; }
    nlohmann::json describe() const override;
    bool is_position(const JSeq& s) const override;
    GamePtr hide_by(unsigned d) const override;
    std::optional<Routed> route(const MoveId& m, const Label& l) const override;
    MoveId lift(const CopyIndex& c, const MoveId& inner) const override;

    const GamePtr& inner() const { return inner_; }

private:
    TagKind tag_;
    GamePtr inner_;
};

}  // namespace hm

#pragma once

// Test-only helpers: explicit finite arenas and seeded random generators.

#include "hm/core/arena.hpp"

#include <map>
#include <random>
#include <set>

namespace hm::test {

class FiniteArena final : public Arena {
public:
    void add(const std::string& name, Label l, const std::vector<std::string>& enablers) {
        labels_[name] = l;
        order_.push_back(name);
        for (const auto& e : enablers) {
            if (e == "*") initial_.insert(name);
            else enabled_[e].insert(name);
        }
        mu_ = std::max(mu_, l.degree);
    }
    std::optional<Label> label(const MoveId& m) const override {
        auto it = labels_.find(m.base);
        if (!m.path.empty() || it == labels_.end()) return std::nullopt;
        return it->second;
    }
    bool enables(const MoveId* from, const MoveId& to) const override {
        if (!label(to)) return false;
        if (!from) return initial_.count(to.base) > 0;
        auto it = enabled_.find(from->base);
        return from->path.empty() && it != enabled_.end() && it->second.count(to.base) > 0;
    }
    unsigned mu() const override { return mu_; }
    std::vector<MoveId> enabled_moves(const MoveId* from, const MoveProbes&) const override {
        std::vector<MoveId> out;
        if (!from) {
            for (const auto& n : initial_) out.push_back(MoveId{n, {}});
            return out;
        }
        auto it = enabled_.find(from->base);
        if (from->path.empty() && it != enabled_.end())
            for (const auto& n : it->second) out.push_back(MoveId{n, {}});
        return out;
    }
    std::vector<MoveId> moves() const {
        std::vector<MoveId> out;
        for (const auto& n : order_) out.push_back(MoveId{n, {}});
        return out;
    }

private:
    std::map<std::string, Label> labels_;
    std::vector<std::string> order_;
    std::set<std::string> initial_;
    std::map<std::string, std::set<std::string>> enabled_;
    unsigned mu_ = 0;
};

inline Label lab(Owner o, Kind k, unsigned d) { return Label{o, k, d}; }

// A random valid dynamic arena: a forest of moves obeying E1–E4, plus extra enablers.
inline FiniteArena random_arena(std::mt19937_64& rng, int size = 10, unsigned max_degree = 3) {
    FiniteArena a;
    struct Node { std::string name; Label label; };
    std::vector<Node> nodes;
    std::uniform_int_distribution<int> coin(0, 3);
    int roots = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < roots; ++i) {
        nodes.push_back({"m" + std::to_string(i), Label{Owner::O, Kind::Q, 0}});
        a.add(nodes.back().name, nodes.back().label, {"*"});
    }
    for (int i = roots; i < size; ++i) {
        // Answers only hang off questions; pick a question parent.
        std::vector<std::size_t> questions;
        for (std::size_t k = 0; k < nodes.size(); ++k)
            if (nodes[k].label.kind == Kind::Q) questions.push_back(k);
        const Node parent = nodes[questions[rng() % questions.size()]];
        Label l;
        l.owner = flip(parent.label.owner);
        l.kind = coin(rng) == 0 ? Kind::A : Kind::Q;
        if (l.kind == Kind::A || parent.label.owner == Owner::P)
            l.degree = parent.label.degree;
        else
            l.degree = static_cast<unsigned>(rng() % (max_degree + 1));
        nodes.push_back({"m" + std::to_string(i), l});
        a.add(nodes.back().name, l, {parent.name});
    }
    return a;
}

// A random legal position of `a`, grown by picking legal extensions.
inline JSeq random_legal(std::mt19937_64& rng, const Arena& a, const std::vector<MoveId>& moves,
                         std::size_t max_len) {
    JSeq s;
    while (s.size() < max_len) {
        std::vector<Entry> options;
        for (const auto& m : moves) {
            if (a.enables(nullptr, m)) {
                JSeq t = s;
                t.push_back(make_entry(a, m, std::nullopt));
                if (check_legal(t, a).ok()) options.push_back(t.back());
            }
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (!a.enables(&s[j].move, m)) continue;
                JSeq t = s;
                t.push_back(make_entry(a, m, j));
                if (check_legal(t, a).ok()) options.push_back(t.back());
            }
        }
        if (options.empty()) break;
        s.push_back(options[rng() % options.size()]);
    }
    return s;
}

// A random j-sequence (justification only, no legality constraints).
inline JSeq random_jseq(std::mt19937_64& rng, const Arena& a, const std::vector<MoveId>& moves,
                        std::size_t max_len) {
    JSeq s;
    while (s.size() < max_len) {
        std::vector<Entry> options;
        for (const auto& m : moves) {
            if (a.enables(nullptr, m)) options.push_back(make_entry(a, m, std::nullopt));
            for (std::size_t j = 0; j < s.size(); ++j)
                if (a.enables(&s[j].move, m)) options.push_back(make_entry(a, m, j));
        }
        if (options.empty()) break;
        s.push_back(options[rng() % options.size()]);
    }
    return s;
}

inline Entry ent(const std::string& base, Label l, std::optional<std::size_t> p) {
    return Entry{MoveId{base, {}}, l, p};
}

}  // namespace hm::test

#include "hm/core/arena.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hm {

Label Arena::label_of(const MoveId& m) const {
    auto l = label(m);
    if (!l) throw DomainError("not a move of the arena: " + to_string(m));
    return *l;
}

ArenaDiagnostics validate_arena(const Arena& a, const std::vector<MoveId>& sample) {
    ArenaDiagnostics out;
    std::vector<Label> labels;
    labels.reserve(sample.size());
    for (const auto& m : sample) {
        labels.push_back(a.label_of(m));
        out.mu = std::max(out.mu, labels.back().degree);
    }
    auto report = [&](const char* axiom, const std::string& detail) {
        out.violations.push_back({axiom, detail});
    };
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const MoveId& n = sample[i];
        const Label& ln = labels[i];
        if (a.enables(nullptr, n)) {
            if (!(ln == Label{Owner::O, Kind::Q, 0}))
                report("E1", "initial move " + to_string(n) + " is labelled " + to_string(ln));
            for (const auto& m : sample)
                if (a.enables(&m, n))
                    report("E1", "initial move " + to_string(n) + " is also enabled by " +
                                     to_string(m));
        }
        for (std::size_t j = 0; j < sample.size(); ++j) {
            const MoveId& m = sample[j];
            if (!a.enables(&m, n)) continue;
            const Label& lm = labels[j];
            const std::string pair = to_string(m) + " |- " + to_string(n);
            if (ln.kind == Kind::A && (lm.kind != Kind::Q || lm.degree != ln.degree))
                report("E2", pair);
            if (lm.owner == ln.owner) report("E3", pair);
            if (lm.degree != ln.degree && lm.owner != Owner::O) report("E4", pair);
        }
    }
    if (out.mu > a.mu()) report("mu", "sample degree exceeds declared mu");
    return out;
}

namespace {

class HiddenArena final : public Arena {
public:
    HiddenArena(ArenaPtr base, unsigned d, MoveProbes probes)
        : base_(std::move(base)), d_(d), probes_(std::move(probes)) {}

    std::optional<Label> label(const MoveId& m) const override {
        auto l = base_->label(m);
        if (!l || deleted(*l)) return std::nullopt;
        l->degree = monus(l->degree, d_);
        return l;
    }

    bool enables(const MoveId* from, const MoveId& to) const override {
        if (!label(to)) return false;
        if (from == nullptr) return base_->enables(nullptr, to);
        if (!label(*from)) return false;
        if (base_->enables(from, to)) return true;
        bool found = false;
        walk_deleted(*from, [&](const MoveId& x) {
            if (base_->enables(&x, to)) found = true;
            return found;
        });
        return found;
    }

    unsigned mu() const override { return monus(base_->mu(), d_); }

    std::vector<MoveId> enabled_moves(const MoveId* from, const MoveProbes& probes) const override {
        std::vector<MoveId> out;
        for (auto& m : base_->enabled_moves(from, probes))
            if (label(m)) out.push_back(std::move(m));
        if (from != nullptr) {
            walk_deleted(*from, [&](const MoveId& x) {
                for (auto& m : base_->enabled_moves(&x, probes))
                    if (label(m)) out.push_back(std::move(m));
                return false;
            });
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    bool deleted(const Label& l) const { return l.degree > 0 && l.degree <= d_; }

    // Visits every deleted x reached from `from` by an even-length, nonempty chain of
    // deleted moves; stops early when `visit` returns true.
    template <class Visit>
    void walk_deleted(const MoveId& from, Visit visit) const {
        constexpr unsigned kMaxChain = 16;
        std::set<std::pair<MoveId, bool>> seen;
        std::deque<std::tuple<MoveId, bool, unsigned>> queue;  // move, odd-length chain, length
        for (auto& x : base_->enabled_moves(&from, probes_))
            if (auto l = base_->label(x); l && deleted(*l)) queue.emplace_back(std::move(x), true, 1);
        while (!queue.empty()) {
            auto [x, odd, len] = std::move(queue.front());
            queue.pop_front();
            if (!seen.emplace(x, odd).second) continue;
            if (!odd && visit(x)) return;
            if (len >= kMaxChain) continue;
            for (auto& y : base_->enabled_moves(&x, probes_))
                if (auto l = base_->label(y); l && deleted(*l)) queue.emplace_back(std::move(y), !odd, len + 1);
        }
    }

    ArenaPtr base_;
    unsigned d_;
    MoveProbes probes_;
};

}  // namespace

ArenaPtr hide_arena(ArenaPtr a, Depth d, MoveProbes probes) {
    unsigned k = d.resolve(a->mu());
    if (k == 0) return a;
    return std::make_shared<HiddenArena>(std::move(a), k, std::move(probes));
}

std::vector<MoveId> sample_moves(const Arena& a, const MoveProbes& probes, unsigned depth) {
    std::set<MoveId> seen;
    std::vector<MoveId> frontier = a.enabled_moves(nullptr, probes);
    for (unsigned step = 0; step < depth && !frontier.empty(); ++step) {
        std::vector<MoveId> next;
        for (auto& m : frontier) {
            if (!seen.insert(m).second) continue;
            for (auto& n : a.enabled_moves(&m, probes))
                if (!seen.count(n)) next.push_back(std::move(n));
        }
        frontier = std::move(next);
    }
    for (auto& m : frontier) seen.insert(std::move(m));
    return {seen.begin(), seen.end()};
}

std::string to_string(LegalityKind k) {
    switch (k) {
        case LegalityKind::Ok: return "ok";
        case LegalityKind::Justification: return "justification";
        case LegalityKind::Alternation: return "alternation";
        case LegalityKind::GeneralizedVisibility: return "generalized-visibility";
        case LegalityKind::IeSwitch: return "ie-switch";
    }
    return "?";
}

LegalityVerdict check_justified(const JSeq& s, const Arena& a) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Entry& e = s[i];
        auto l = a.label(e.move);
        if (!l) return {LegalityKind::Justification, i, "not a move: " + to_string(e.move)};
        if (!(*l == e.label)) return {LegalityKind::Justification, i, "label mismatch"};
        if (!e.pointer) {
            if (!a.enables(nullptr, e.move))
                return {LegalityKind::Justification, i, "non-initial move without justifier"};
        } else if (*e.pointer >= i || !a.enables(&s[*e.pointer].move, e.move)) {
            return {LegalityKind::Justification, i, "pointer does not target an enabler"};
        }
    }
    return {};
}

LegalityVerdict check_legal(const JSeq& s, const Arena& a) {
    if (auto v = check_justified(s, a); !v.ok()) return v;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i - 1].label.owner == s[i].label.owner)
            return {LegalityKind::Alternation, i, "two consecutive moves by the same player"};
        if (s[i - 1].label.degree != s[i].label.degree && s[i - 1].label.owner != Owner::O)
            return {LegalityKind::IeSwitch, i, "degree change after a P-move"};
    }
    for (unsigned d = 0; d <= a.mu(); ++d) {
        std::vector<std::size_t> origin;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i].label.degree == 0 || s[i].label.degree > d) origin.push_back(i);
        JSeq h;
        try {
            h = hide_jseq(s, d);
        } catch (const StructuralError& e) {
            return {LegalityKind::Justification, 0, e.what()};
        }
        for (std::size_t k = 0; k < h.size(); ++k) {
            if (!h[k].pointer) continue;
            auto view = h[k].label.owner == Owner::P ? p_view_indices(h, k) : o_view_indices(h, k);
            if (!std::binary_search(view.begin(), view.end(), *h[k].pointer))
                return {LegalityKind::GeneralizedVisibility, origin[k],
                        "justifier outside the view at depth " + std::to_string(d)};
        }
    }
    return {};
}

Entry make_entry(const Arena& a, MoveId m, std::optional<std::size_t> pointer) {
    Label l = a.label_of(m);
    return Entry{std::move(m), l, pointer};
}

}  // namespace hm

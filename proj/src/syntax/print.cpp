#include "hm/syntax/term.hpp"

#include <set>
#include <string>
#include <vector>

namespace hm::syntax {

namespace {

void collect_names(const TermPtr& t, std::set<std::string>& out) {
    switch (t->kind) {
        case TermKind::Var: out.insert(t->name); return;
        case TermKind::Num:
        case TermKind::Sym: return;
        case TermKind::Lam:
            out.insert(t->name);
            collect_names(t->a, out);
            return;
        case TermKind::App:
            collect_names(t->a, out);
            collect_names(t->b, out);
            return;
        case TermKind::Case:
            collect_names(t->a, out);
            for (const auto& [k, m] : t->fam->overrides) collect_names(m, out);
            collect_names(t->fam->body, out);
            return;
        case TermKind::Iter:
            collect_names(t->a, out);
            collect_names(t->b, out);
            for (const auto& m : t->args) collect_names(m, out);
            if (t->fam) {
                for (const auto& [k, m] : t->fam->overrides) collect_names(m, out);
                collect_names(t->fam->body, out);
            }
            return;
    }
}

struct Printer {
    std::set<std::string> used;
    std::vector<std::pair<std::string, std::string>> binders;  // original → display, innermost last

    std::string display(const std::string& b) const {
        for (std::size_t i = binders.size(); i-- > 0;)
            if (binders[i].first == b) return binders[i].second;
        return b;
    }

    std::string pick() const {
        static const char* const pool[] = {"y", "z", "w", "n", "m", "k"};
        auto ok = [&](const std::string& s) {
            if (used.count(s)) return false;
            for (const auto& [o, d] : binders)
                if (d == s) return false;
            return true;
        };
        for (const char* p : pool)
            if (ok(p)) return p;
        for (int i = 1;; ++i)
            if (ok("y" + std::to_string(i))) return "y" + std::to_string(i);
    }

    std::string affine(const Affine& a) const {
        std::string s;
        if (a.mul != 1) s = std::to_string(a.mul) + "*";
        s += display(a.binder);
        if (a.add > 0) s += "+" + std::to_string(a.add);
        if (a.add < 0) s += "-" + std::to_string(-a.add);
        return s;
    }

    std::string branches(const Family& f) {
        std::string s = "[";
        for (const auto& [k, m] : f.overrides) s += std::to_string(k) + " -> " + go(m, 0) + ", ";
        std::string d = pick();
        binders.emplace_back(f.binder, d);
        s += d + " -> " + go(f.body, 0) + "]";
        binders.pop_back();
        return s;
    }

    // level 0: anywhere; 1: function position; 2: argument position.
    std::string go(const TermPtr& t, int level) {
        switch (t->kind) {
            case TermKind::Var: return t->name;
            case TermKind::Num: return std::to_string(t->n);
            case TermKind::Sym: return affine(t->sym);
            case TermKind::Lam: {
                std::string s = "\\" + t->name + ":" + print_ty(t->ty) + ". " + go(t->a, 0);
                return level > 0 ? "(" + s + ")" : s;
            }
            case TermKind::App: {
                std::string s = go(t->a, 1) + " " + go(t->b, 2);
                return level > 1 ? "(" + s + ")" : s;
            }
            case TermKind::Case: return "case(" + go(t->a, 0) + ")" + branches(*t->fam);
            case TermKind::Iter: {
                std::string s = "iter[" + affine(t->sym) + "; " + print_ty(t->ty) + "](" + go(t->a, 0) + ", " +
                                go(t->b, 0);
                for (const auto& m : t->args) s += ", " + go(m, 0);
                return s + ")" + (t->fam ? branches(*t->fam) : "");
            }
        }
        return {};
    }
};

}  // namespace

std::string print(const TermPtr& t) {
    Printer p;
    collect_names(t, p.used);
    return p.go(t, 0);
}

}  // namespace hm::syntax

#include "hm/syntax/term.hpp"

#include "detail.hpp"

#include <string>
#include <vector>

namespace hm::syntax {

namespace {

// Bound names on each side, innermost last; equal depth means the same binder.
struct Scope {
    std::vector<std::string> vars_l, vars_r, bind_l, bind_r;
};

int depth_of(const std::vector<std::string>& v, const std::string& x) {
    for (std::size_t i = v.size(); i-- > 0;)
        if (v[i] == x) return static_cast<int>(i);
    return -1;
}

bool same_name(const std::vector<std::string>& l, const std::vector<std::string>& r, const std::string& a,
               const std::string& b) {
    int da = depth_of(l, a), db = depth_of(r, b);
    if (da < 0 && db < 0) return a == b;
    return da == db;
}

bool eq(const TermPtr& s, const TermPtr& t, Scope& sc);

bool eq_affine(const Affine& a, const Affine& b, Scope& sc) {
    return a.mul == b.mul && a.add == b.add && same_name(sc.bind_l, sc.bind_r, a.binder, b.binder);
}

FamilyPtr identity_family() {
    static const FamilyPtr id = family({}, "y", sym({"y", 1, 0}));
    return id;
}

bool same_keys(const Family& s, const Family& t) {
    if (s.overrides.size() != t.overrides.size()) return false;
    for (auto i = s.overrides.begin(), j = t.overrides.begin(); i != s.overrides.end(); ++i, ++j)
        if (i->first != j->first) return false;
    return true;
}

bool eq_fam(const FamilyPtr& s, const FamilyPtr& t, Scope& sc) {
    FamilyPtr fs = s, ft = t;
    if (!same_keys(*s, *t)) {
        fs = canonical_family(s);
        ft = canonical_family(t);
    }
    if (fs->overrides.size() != ft->overrides.size()) return false;
    for (auto i = fs->overrides.begin(), j = ft->overrides.begin(); i != fs->overrides.end(); ++i, ++j)
        if (i->first != j->first || !eq(i->second, j->second, sc)) return false;
    sc.bind_l.push_back(fs->binder);
    sc.bind_r.push_back(ft->binder);
    bool r = eq(fs->body, ft->body, sc);
    sc.bind_l.pop_back();
    sc.bind_r.pop_back();
    return r;
}

bool eq(const TermPtr& s, const TermPtr& t, Scope& sc) {
    if (s->kind != t->kind) return false;
    switch (s->kind) {
        case TermKind::Var: return same_name(sc.vars_l, sc.vars_r, s->name, t->name);
        case TermKind::Num: return s->n == t->n;
        case TermKind::Sym: return eq_affine(s->sym, t->sym, sc);
        case TermKind::Lam: {
            if (!ty_eq(s->ty, t->ty)) return false;
            sc.vars_l.push_back(s->name);
            sc.vars_r.push_back(t->name);
            bool r = eq(s->a, t->a, sc);
            sc.vars_l.pop_back();
            sc.vars_r.pop_back();
            return r;
        }
        case TermKind::App: return eq(s->a, t->a, sc) && eq(s->b, t->b, sc);
        case TermKind::Case: return eq(s->a, t->a, sc) && eq_fam(s->fam, t->fam, sc);
        case TermKind::Iter: {
            if (!eq_affine(s->sym, t->sym, sc) || !ty_eq(s->ty, t->ty) || s->args.size() != t->args.size())
                return false;
            if (!eq(s->a, t->a, sc) || !eq(s->b, t->b, sc)) return false;
            for (std::size_t i = 0; i < s->args.size(); ++i)
                if (!eq(s->args[i], t->args[i], sc)) return false;
            return eq_fam(s->fam ? s->fam : identity_family(), t->fam ? t->fam : identity_family(), sc);
        }
    }
    return false;
}

bool ident(const TermPtr& s, const TermPtr& t);

bool ident_fam(const FamilyPtr& s, const FamilyPtr& t) {
    if (s == t) return true;
    if (!s || !t || s->binder != t->binder || !same_keys(*s, *t)) return false;
    for (auto i = s->overrides.begin(), j = t->overrides.begin(); i != s->overrides.end(); ++i, ++j)
        if (!ident(i->second, j->second)) return false;
    return ident(s->body, t->body);
}

bool ident(const TermPtr& s, const TermPtr& t) {
    if (s == t) return true;
    if (s->kind != t->kind || s->name != t->name || s->n != t->n) return false;
    if (s->sym.binder != t->sym.binder || s->sym.mul != t->sym.mul || s->sym.add != t->sym.add) return false;
    if ((s->ty || t->ty) && (!s->ty || !t->ty || !ty_eq(s->ty, t->ty))) return false;
    if ((s->a || t->a) && (!s->a || !t->a || !ident(s->a, t->a))) return false;
    if ((s->b || t->b) && (!s->b || !t->b || !ident(s->b, t->b))) return false;
    if (s->args.size() != t->args.size()) return false;
    for (std::size_t i = 0; i < s->args.size(); ++i)
        if (!ident(s->args[i], t->args[i])) return false;
    return ident_fam(s->fam, t->fam);
}

}  // namespace

bool detail::identical(const TermPtr& s, const TermPtr& t) { return ident(s, t); }

bool alpha_eq(const TermPtr& s, const TermPtr& t) {
    Scope sc;
    return eq(s, t, sc);
}

}  // namespace hm::syntax

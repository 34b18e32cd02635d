#include "hm/syntax/term.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace hm::syntax {

namespace {

enum class Tok { Ident, Number, Sym, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isalpha(c) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\''))
                ++i;
            out.push_back({Tok::Ident, s.substr(start, i - start), start});
        } else if (std::isdigit(c)) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Number, s.substr(start, i - start), start});
        } else if (s.compare(i, 2, "->") == 0 || s.compare(i, 2, "=>") == 0) {
            out.push_back({Tok::Sym, s.substr(i, 2), start});
            i += 2;
        } else if (s.compare(i, 2, "\xce\xbb") == 0) {  // λ
            out.push_back({Tok::Sym, "\\", start});
            i += 2;
        } else if (std::string("\\:.()[],@+-*;").find(static_cast<char>(c)) != std::string::npos) {
            out.push_back({Tok::Sym, std::string(1, static_cast<char>(c)), start});
            ++i;
        } else {
            throw SyntaxError(std::string("unexpected character '") + static_cast<char>(c) + "'", start);
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

struct Parser {
    std::vector<Token> toks;
    std::size_t i = 0;
    // Innermost last; a null type marks a family binder.
    std::vector<std::pair<std::string, TyPtr>> scope;

    const Token& peek() const { return toks[i]; }
    bool at(const std::string& sym) const { return peek().kind == Tok::Sym && peek().text == sym; }
    bool at_ident(const std::string& w) const { return peek().kind == Tok::Ident && peek().text == w; }

    [[noreturn]] void fail(const std::string& what) const {
        const Token& t = peek();
        throw SyntaxError(what + (t.kind == Tok::End ? " (found end of input)" : " (found '" + t.text + "')"),
                          t.pos);
    }

    void expect(const std::string& sym) {
        if (!at(sym)) fail("expected '" + sym + "'");
        ++i;
    }

    std::string ident() {
        if (peek().kind != Tok::Ident) fail("expected identifier");
        return toks[i++].text;
    }

    std::uint64_t number() {
        if (peek().kind != Tok::Number) fail("expected numeral");
        const Token& t = toks[i++];
        try {
            return std::stoull(t.text);
        } catch (const std::exception&) {
            throw SyntaxError("numeral out of range", t.pos);
        }
    }

    TyPtr ty() {
        TyPtr d;
        if (at("(")) {
            ++i;
            d = ty();
            expect(")");
        } else if (at_ident("N")) {
            ++i;
            d = nat_ty();
        } else {
            fail("expected type");
        }
        if (at("=>")) {
            ++i;
            return arrow_ty(d, ty());
        }
        return d;
    }

    // The innermost entry named x: a term variable's type, or null for a family binder.
    const std::pair<std::string, TyPtr>* lookup(const std::string& x) const {
        for (std::size_t k = scope.size(); k-- > 0;)
            if (scope[k].first == x) return &scope[k];
        return nullptr;
    }

    bool binder_named(const std::string& x) const {
        auto* e = lookup(x);
        return e && !e->second;
    }

    // [k *] y [(+|-) c] over a family binder y.
    Affine affine_tail(std::uint64_t mul) {
        std::size_t pos = peek().pos;
        std::string y = ident();
        if (!binder_named(y)) throw SyntaxError("'" + y + "' is not a branch binder", pos);
        Affine a{y, mul, 0};
        if (at("+") || at("-")) {
            bool neg = at("-");
            ++i;
            auto c = static_cast<std::int64_t>(number());
            a.add = neg ? -c : c;
        }
        return a;
    }

    Affine affine() {
        if (peek().kind == Tok::Number) {
            std::uint64_t k = number();
            if (!at("*")) return {"", 0, static_cast<std::int64_t>(k)};
            ++i;
            return affine_tail(k);
        }
        return affine_tail(1);
    }

    TermPtr term() {
        if (at("\\")) {
            ++i;
            std::string x = ident();
            expect(":");
            TyPtr t = ty();
            expect(".");
            scope.emplace_back(x, t);
            TermPtr body = term();
            scope.pop_back();
            return lam(x, t, body);
        }
        TermPtr f = atom();
        while (starts_atom()) f = app(f, atom());
        if (at("\\")) f = app(f, term());  // a trailing λ extends to the right
        return f;
    }

    bool starts_atom() const {
        const Token& t = peek();
        if (t.kind == Tok::Ident || t.kind == Tok::Number) return true;
        return t.kind == Tok::Sym && (t.text == "(" || t.text == "@");
    }

    TermPtr atom() {
        const Token& t = peek();
        if (t.kind == Tok::Number) {
            std::uint64_t k = number();
            if (at("*")) {
                ++i;
                return sym(affine_tail(k));
            }
            return num(k);
        }
        if (at("(")) {
            ++i;
            TermPtr m = term();
            expect(")");
            return m;
        }
        if (at("@")) {
            ++i;
            std::size_t pos = peek().pos;
            std::string x = ident();
            for (std::size_t k = scope.size(); k-- > 0;)
                if (scope[k].first == x && scope[k].second) return eta_var(x, scope[k].second);
            throw SyntaxError("type of '" + x + "' is unknown for @" + x, pos);
        }
        if (t.kind != Tok::Ident) fail("expected term");
        if (t.text == "case") return case_term();
        if (t.text == "iter") return iter_term();
        if (t.text == "succ" && !lookup("succ")) return ++i, succ_term();
        if (t.text == "pred" && !lookup("pred")) return ++i, pred_term();
        if (t.text == "cond" && !lookup("cond")) return ++i, cond_term();
        if (t.text == "itr" && !lookup("itr")) {
            ++i;
            expect("@");
            return itr_term(type_atom());
        }
        std::string x = ident();
        if (binder_named(x)) {
            --i;
            return sym(affine_tail(1));
        }
        return var(x);
    }

    TyPtr type_atom() {
        if (at("(")) {
            ++i;
            TyPtr t = ty();
            expect(")");
            return t;
        }
        if (!at_ident("N")) fail("expected type");
        ++i;
        return nat_ty();
    }

    TermPtr case_term() {
        ++i;
        expect("(");
        TermPtr scrut = term();
        expect(")");
        return case_of(scrut, branches());
    }

    FamilyPtr branches() {
        expect("[");
        std::map<std::uint64_t, TermPtr> ov;
        while (peek().kind == Tok::Number) {
            std::size_t pos = peek().pos;
            std::uint64_t k = number();
            expect("->");
            if (ov.count(k)) throw SyntaxError("duplicate branch " + std::to_string(k), pos);
            ov.emplace(k, term());
            expect(",");
        }
        if (peek().kind != Tok::Ident) fail("expected default branch 'y -> M'");
        std::string y = ident();
        expect("->");
        scope.emplace_back(y, nullptr);
        TermPtr body = term();
        scope.pop_back();
        expect("]");
        return family(std::move(ov), y, body);
    }

    TermPtr iter_term() {
        ++i;
        expect("[");
        Affine c = affine();
        expect(";");
        TyPtr a = ty();
        expect("]");
        expect("(");
        TermPtr f = term();
        expect(",");
        TermPtr x = term();
        std::vector<TermPtr> args;
        while (at(",")) {
            ++i;
            args.push_back(term());
        }
        expect(")");
        FamilyPtr cont = at("[") ? branches() : nullptr;
        return iter(c, a, f, x, std::move(args), cont);
    }
};

}  // namespace

TermPtr parse(const std::string& text, const Context& ctx) {
    Parser p{lex(text)};
    for (const auto& e : ctx) p.scope.push_back(e);
    TermPtr t = p.term();
    if (p.peek().kind != Tok::End) p.fail("unexpected trailing input");
    return t;
}

TyPtr parse_ty(const std::string& text) {
    Parser p{lex(text)};
    TyPtr t = p.ty();
    if (p.peek().kind != Tok::End) p.fail("unexpected trailing input");
    return t;
}

}  // namespace hm::syntax

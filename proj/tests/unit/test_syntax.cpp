#include "doctest.h"

#include "hm/core/move.hpp"
#include "hm/syntax/generate.hpp"

using namespace hm::syntax;

namespace {

const char* const kDouble = "itr@N (\\x:N. succ (succ @x)) 0";

TermPtr nf_of(const std::string& s) { return normal_form(parse(s)); }

std::uint64_t as_num(const TermPtr& t) {
    REQUIRE(t->kind == TermKind::Num);
    return t->n;
}

}  // namespace

TEST_CASE("parse and print") {
    CHECK(parse("0")->kind == TermKind::Num);
    TermPtr s = parse("succ");
    CHECK(alpha_eq(s, parse("\\x:N. case(x)[y -> y+1]")));
    CHECK(print(parse("\\x:N. case(x)[y -> y+1]")) == "\\x:N. case(x)[y -> y+1]");
    for (const char* text : {kDouble, "\\x:N. case(x)[0 -> 0, y -> 2*y-1]", "(\\f:N => N. f 3) succ",
                             "cond (succ @x) @x", "\\g:(N => N) => N. @g"}) {
        Context ctx{{"x", nat_ty()}};
        TermPtr t = parse(text, ctx);
        CHECK_MESSAGE(alpha_eq(parse(print(t), ctx), t), print(t));
    }
    CHECK_THROWS_AS(parse("case(x)[0 -> 1]"), SyntaxError);
    CHECK_THROWS_AS(parse("@q"), SyntaxError);
    CHECK_THROWS_AS(parse("(\\x:N. x"), SyntaxError);
}

TEST_CASE("alpha equivalence") {
    CHECK(alpha_eq(parse("\\x:N. @x"), parse("\\y:N. @y")));
    CHECK_FALSE(alpha_eq(parse("(\\x:N. 0) 1"), parse("(\\x:N. 0) 2")));
    // An override equal to the default instance is pruned.
    CHECK(alpha_eq(parse("\\x:N. case(x)[3 -> 4, y -> y+1]"), parse("succ")));
    CHECK_FALSE(alpha_eq(parse("\\x:N. case(x)[3 -> 5, y -> y+1]"), parse("succ")));
}

TEST_CASE("typing and execution numbers") {
    auto t = typecheck({}, parse("5"));
    CHECK(t.exec == 0);
    CHECK(t.cls == TermClass::Value);
    auto d = typecheck({}, parse(kDouble));
    CHECK(print_ty(d.ty) == "N => N");
    CHECK(d.cls == TermClass::Configuration);
    // (V₁V₂)((V₃V₄)(V₅V₆)) with values V₁ = V₃ = λab.b̲, V₅ = λx.x̲ and numerals.
    std::string k = "(\\a:N. \\b:N. @b)", id = "(\\x:N. @x)";
    auto e = typecheck({}, parse("(" + k + " 0) ((" + k + " 1) (" + id + " 2))"));
    CHECK(e.exec == 3);
    CHECK_THROWS_AS(typecheck({}, parse("succ succ")), TypeError);
    CHECK_THROWS_AS(typecheck({}, parse("x")), TypeError);
}

TEST_CASE("reduction") {
    CHECK(as_num(step_beta_theta(parse("case(3)[y -> y+1]"), {})) == 4);
    CHECK(as_num(nf_of("(\\x:N. @x) 2")) == 2);
    CHECK(as_num(nf_of("pred 0")) == 0);
    CHECK(as_num(nf_of("pred 7")) == 6);
    CHECK(as_num(nf_of("itr@N succ 0 3")) == 3);
    CHECK(as_num(nf_of("cond 4 9 0")) == 4);
    CHECK(as_num(nf_of("cond 4 9 3")) == 9);
    TermPtr d = nf_of(kDouble);
    CHECK_MESSAGE(alpha_eq(d, parse("\\z:N. case(z)[y -> 2*y]")), print(d));
    for (std::uint64_t n = 0; n <= 32; ++n) CHECK(as_num(normal_form(app(d, num(n)))) == 2 * n);
    CHECK(typecheck({}, d).cls == TermClass::Value);
}

TEST_CASE("operational steps") {
    TermPtr dbl = nf_of(kDouble);
    Context ctx;
    TermPtr p1 = app(lam("x", nat_ty(), app(dbl, app(parse("succ"), parse("@x", {{"x", nat_ty()}})))), num(5));
    TypedTerm t = typecheck(ctx, p1);
    CHECK(t.exec == 3);
    unsigned steps = 0;
    while (t.cls != TermClass::Value) {
        t = op_step(t).term;
        ++steps;
    }
    CHECK(steps == 3);
    CHECK(as_num(t.raw) == 12);
    CHECK(op_step(t).noop);
    CHECK_THROWS_AS(op_step(typecheck({}, parse("case(succ 1)[y -> y]"))), hm::DomainError);
}

TEST_CASE("metatheory over generated terms") {
    MetatheoryReport r = check_metatheory(120, 17);
    for (const auto& f : r.failures) MESSAGE(f);
    CHECK(r.ok());
    CHECK(r.terms == 120);
}

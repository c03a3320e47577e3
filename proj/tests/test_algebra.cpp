#include "doctest.h"
#include "test_support.hpp"

#include "conchoid/algebra/operations.hpp"
#include "conchoid/algebra/parser.hpp"

using namespace conchoid::algebra;
using testing_support::P;

TEST_CASE("scalars in Q(i)") {
    Scalar a(Rational(1, 2), Rational(3));
    CHECK(a.conj().conj() == a);
    CHECK(a.norm() == Rational(37, 4));
    CHECK(a * a.inverse() == Scalar(1));
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK(scalar_sqrt(Scalar(-4), Field::Q) == std::nullopt);
    CHECK(*scalar_sqrt(Scalar(-4), Field::Qi) == Scalar(Rational(0), Rational(2)));
    // (1+2i)^2 = -3+4i
    CHECK(*scalar_sqrt(Scalar(Rational(-3), Rational(4)), Field::Qi) == Scalar(Rational(1), Rational(2)));
    CHECK(*rational_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK(!rational_sqrt(Rational(2)));
}

TEST_CASE("canonical serialization") {
    CHECK(P("z^2 - x^2*1 + y^2").to_string() == "-x^2+y^2+z^2");
    CHECK(P("x^2+y^2-z^2").to_string() == "x^2+y^2-z^2");
    CHECK(P("-x").to_string() == "-x");
    CHECK(P("3*x").to_string() == "3*x");
    CHECK(P("(1+2*i)*x", Field::Qi).to_string() == "(1+2*i)*x");
    CHECK(P("i*x", Field::Qi).to_string() == "i*x");
    CHECK_THROWS_AS(P("x/2"), ParseError);
}

TEST_CASE("parser errors carry offsets") {
    try {
        (void)P("x^2+");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
    }
    CHECK_THROWS_AS(P("2x"), ParseError);
    CHECK_THROWS_AS(P("x+i"), ParseError);
    CHECK_NOTHROW(P("x+i", Field::Qi));
    CHECK_THROWS_AS(P("x^-1"), ParseError);
    CHECK_THROWS_AS(P("w+1"), ParseError);
    CHECK(P("3/6*x").to_string() == "1/2*x");
}

TEST_CASE("parse/serialize round trip on random polynomials") {
    std::mt19937 rng(11);
    for (int k = 0; k < 100; ++k) {
        MultiPoly f = testing_support::random_poly(rng, {"x", "y", "z", "t"}, 3, 7);
        if (k % 3 == 0) f *= Scalar(testing_support::small_rational(rng), Rational(k % 2));
        Field fld = f.coefficient_field();
        std::string s = f.to_string();
        MultiPoly g = parse_polynomial(s, fld);
        CHECK(g == f);
        CHECK(g.to_string() == s);
    }
}

TEST_CASE("ring axioms") {
    std::mt19937 rng(5);
    for (int k = 0; k < 20; ++k) {
        auto f = testing_support::random_poly(rng, {"x", "y"}, 3);
        auto g = testing_support::random_poly(rng, {"y", "z"}, 2);
        auto h = testing_support::random_poly(rng, {"x", "z"}, 2);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * g == g * f);
        CHECK((f - f).is_zero());
    }
}

TEST_CASE("exact division") {
    CHECK(*poly_exact_div(P("x^2-y^2"), P("x-y")) == P("x+y"));
    CHECK(*poly_exact_div(P("x^2*(x^2+y^2-z^2)"), P("x^2+y^2-z^2")) == P("x^2"));
    CHECK(*poly_exact_div(P("x^2+1", Field::Qi), P("x+i", Field::Qi)) == P("x-i", Field::Qi));
    CHECK(!poly_exact_div(P("x^2+y"), P("x")));
    CHECK_THROWS(poly_exact_div(P("x"), MultiPoly()));
    std::mt19937 rng(7);
    for (int k = 0; k < 30; ++k) {
        auto f = testing_support::random_poly(rng, {"x", "y", "z"}, 4);
        auto g = testing_support::random_poly(rng, {"x", "y", "z"}, 3);
        if (g.is_zero()) continue;
        auto q = poly_exact_div(f * g, g);
        REQUIRE(q);
        CHECK(*q == f);
    }
}

TEST_CASE("gcd") {
    CHECK(poly_gcd(P("x^2-y^2"), P("x^2-2*x*y+y^2")) == P("x-y"));
    auto f = P("3*x^3*y-2*z^4+x*y*z^2");
    CHECK(poly_gcd(f, f) == f.monic());
    auto r = P("x^2*(x^2+y^2-1)");
    CHECK(poly_exact_div(poly_gcd(r, r.derivative("x")), P("x")));
    CHECK(poly_gcd(P("x^2+1"), P("x^2+2")) == P("1"));
    CHECK(poly_gcd(P("x^2+1", Field::Qi), P("x^2+2*i*x-1", Field::Qi)) == P("x+i", Field::Qi));

    std::mt19937 rng(3);
    int checked = 0;
    for (int k = 0; k < 25; ++k) {
        auto a = testing_support::random_poly(rng, {"x", "y", "z"}, 2);
        auto b = testing_support::random_poly(rng, {"x", "y", "z"}, 2);
        auto h = testing_support::random_poly(rng, {"x", "y", "z"}, 2);
        if (a.is_zero() || b.is_zero() || h.is_zero()) continue;
        MultiPoly g0 = poly_gcd(a, b);
        MultiPoly g1 = poly_gcd(a * h, b * h);
        // oracle: both sides divide each other's multiples in the expected way
        CHECK(equal_up_to_scalar(g1, h * g0));
        ++checked;
    }
    CHECK(checked > 15);
}

TEST_CASE("homogeneous gcd keeps powers of the last variable") {
    auto a = P("z^2*(x^2+y^2)");
    auto b = P("z^3*(x+y)*(x^2+y^2)");
    CHECK(poly_gcd(a, b) == P("x^2*z^2+y^2*z^2"));
}

TEST_CASE("squarefree part") {
    CHECK(equal_up_to_scalar(squarefree_part(P("x^2*(x^2+y^2-z^2)")), P("x*(x^2+y^2-z^2)")));
    CHECK(equal_up_to_scalar(squarefree_part(P("(x-y)^3*(x+z)^2*y")), P("(x-y)*(x+z)*y")));
}

TEST_CASE("formal square roots") {
    CHECK(*formal_square_root(P("x^2+2*x*y+y^2")) == P("x+y"));
    CHECK(!formal_square_root(P("x^2+y^2")));
    CHECK(*formal_square_root(P("(y^2-2*y*z)^2")) == P("y^2-2*y*z"));
    CHECK(!formal_square_root(P("-x^2")));
    CHECK(*formal_square_root(P("-x^2", Field::Qi)) == P("i*x", Field::Qi));
    std::mt19937 rng(9);
    for (int k = 0; k < 20; ++k) {
        auto g = testing_support::random_poly(rng, {"x", "y", "z"}, 3);
        if (g.is_zero()) continue;
        auto r = formal_square_root(g * g);
        REQUIRE(r);
        CHECK((*r == g || *r == -g));
        CHECK(r->leading_coefficient().is_canonically_positive());
    }
    auto s = square_root_up_to_scalar(P("-3*(x+2*y)^2"));
    REQUIRE(s);
    CHECK(s->scale == Scalar(-3));
    CHECK(s->root == P("x+2*y"));
    CHECK(!square_root_up_to_scalar(P("x*y")));
}

namespace {
std::vector<Scalar> values(const std::vector<Root>& r) {
    std::vector<Scalar> v;
    for (const auto& x : r) v.push_back(x.value);
    return v;
}
UniPoly U(const std::string& s, Field f = Field::Q) { return UniPoly::from_multipoly(P(s, f), "t"); }
} // namespace

TEST_CASE("rational roots") {
    CHECK(values(rational_roots(U("t^2-4"))) == std::vector<Scalar>{Scalar(-2), Scalar(2)});
    CHECK(rational_roots(U("t^2+1")).empty());
    CHECK(values(rational_roots(U("t^2+1", Field::Qi))) ==
          std::vector<Scalar>{Scalar(Rational(0), Rational(-1)), Scalar(Rational(0), Rational(1))});
    auto m = rational_roots(U("t^3*(t-1/2)^2"));
    REQUIRE(m.size() == 2);
    CHECK(m[0].multiplicity == 3);
    CHECK(m[1].value == Scalar(Rational(1, 2)));
    CHECK(m[1].multiplicity == 2);
    CHECK(rational_roots(U("t^3-2")).empty());
}

TEST_CASE("rational roots of chosen products are recovered exactly") {
    std::mt19937 rng(21);
    for (int k = 0; k < 15; ++k) {
        std::vector<Scalar> chosen;
        UniPoly f({Scalar(1)});
        int n = testing_support::small_int(rng, 1, 6);
        for (int j = 0; j < n; ++j) {
            Scalar r(testing_support::small_rational(rng, 9));
            if (std::find(chosen.begin(), chosen.end(), r) != chosen.end()) continue;
            chosen.push_back(r);
            f = f * UniPoly({-r, Scalar(1)});
        }
        f = f * U("t^2+t+1"); // no rational roots
        auto got = values(rational_roots(f));
        std::sort(chosen.begin(), chosen.end(), [](const Scalar& a, const Scalar& b) { return a.re() < b.re(); });
        CHECK(got == chosen);
    }
}

TEST_CASE("rational roots with hard-to-factor coefficients use the numeric path") {
    // 100003 and 100019 are primes above the trial-division cutoff
    Rational r1(Integer("1000000007"), Integer(100003) * 100019);
    Rational r2(-7, 100043);
    UniPoly f = UniPoly({-Scalar(r1), Scalar(1)}) * UniPoly({-Scalar(r2), Scalar(1)}) * U("t^3-5") * U("t^2+3");
    auto got = values(rational_roots(f));
    CHECK(got == std::vector<Scalar>{Scalar(r2), Scalar(r1)});

    Scalar g1(Rational(3, 100003), Rational(-2, 7));
    Scalar g2(Rational(-1), Rational(5, 2));
    UniPoly h = UniPoly({-g1, Scalar(1)}, Field::Qi) * UniPoly({-g2, Scalar(1)}, Field::Qi) * U("t^3+t+7", Field::Qi);
    auto gh = values(rational_roots(h));
    CHECK(gh == std::vector<Scalar>{g2, g1});
    for (const auto& v : gh) CHECK(h.evaluate(v).is_zero());
}

TEST_CASE("homogeneous decomposition") {
    auto d = homogeneous_decompose(P("x^2+y^2-z^2"));
    REQUIRE(d.size() == 3);
    CHECK(d[0] == P("x^2+y^2"));
    CHECK(d[1].is_zero());
    CHECK(d[2] == P("-1"));
    auto l = homogeneous_decompose(P("2*x+3*y+5*z"));
    CHECK(l[0] == P("2*x+3*y"));
    CHECK(l[1] == P("5"));
    auto c = homogeneous_decompose(P("z^3"));
    REQUIRE(c.size() == 4);
    CHECK(c[3] == P("1"));
    CHECK(c[0].is_zero());
    CHECK_THROWS(homogeneous_decompose(P("x^2+z")));
}

TEST_CASE("binary form factoring") {
    auto q = factor_binary_form(P("x^2+y^2"), Field::Q);
    REQUIRE(q.size() == 1);
    CHECK(q[0].first == P("x^2+y^2"));
    auto qi = factor_binary_form(P("x^2+y^2"), Field::Qi);
    REQUIRE(qi.size() == 2);
    MultiPoly prod = qi[0].first * qi[1].first;
    CHECK(prod == P("x^2+y^2"));
    auto f = factor_binary_form(P("y^3*(2*x-y)^2*(x^2-3*y^2)"), Field::Q);
    MultiPoly back(Scalar(1));
    for (auto& [p, m] : f) back *= p.pow(static_cast<unsigned>(m));
    CHECK(equal_up_to_scalar(back, P("y^3*(2*x-y)^2*(x^2-3*y^2)")));
    CHECK(f.size() == 3);
}

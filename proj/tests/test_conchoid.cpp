#include "doctest.h"
#include "test_support.hpp"

#include "conchoid/core/conchoid.hpp"

using namespace conchoid::algebra;
using namespace conchoid::core;
using testing_support::P;
using testing_support::random_form;
using testing_support::small_int;

namespace {
PlaneCurve curve(const std::string& s, Field f = Field::Q) { return PlaneCurve(P(s, f)); }
MultiPoly dehomogenize(const MultiPoly& f) { return f.substitute("z", MultiPoly(Scalar(1))).with_variables({"x", "y"}); }

// Form whose terms all have (y, z)-degree at least eta, i.e. the curve has multiplicity >= eta at [1:0:0].
MultiPoly form_through_x_point(std::mt19937& rng, int deg, int eta) {
    while (true) {
        MultiPoly p({"x", "y", "z"});
        for (int a = 0; a <= deg - eta; ++a)
            for (int b = 0; a + b <= deg; ++b)
                if (small_int(rng, 0, 2) != 0) p.add_term(Monomial{a, b, deg - a - b}, Scalar(small_int(rng, -4, 4)));
        if (!p.is_zero() && p.total_degree() == deg && valuation(p, "z") == 0 && valuation(p, "y") == 0) return p;
    }
}
} // namespace

TEST_CASE("plane curve basics") {
    PlaneCurve c = curve("x^2+y^2-z^2");
    CHECK(c.degree() == 2);
    CHECK(c.z_parts()[0] == P("x^2+y^2"));
    CHECK_THROWS(curve("x^2+z"));
    CHECK_THROWS(curve("t*x"));
    CHECK(ProjPoint(Scalar(2), Scalar(4), Scalar(2)) == ProjPoint::affine(Scalar(1), Scalar(2)));
    CHECK(ProjPoint(Scalar(2), Scalar(0), Scalar(0)).to_string() == "[1:0:0]");
    CHECK_THROWS(Scene(curve("z*(x-y)")));
    CHECK(Scene(curve("x^2+y^2-x*z")).origin_on_base);
}

TEST_CASE("hyperbola from two lines") {
    // F = ax+by+cz, G = a'x+b'y+c'z with (a,b,c) = (1,1,1), (a',b',c') = (1,-1,2)
    PlaneCurve F = curve("x+y+z"), G = curve("x-y+2*z");
    MultiPoly expect = -(F.equation() * G.equation() - P("2*z^2"));
    CHECK(raw_conchoidal_transform(F, G) == expect);
    CHECK(conchoidal_transform(F, G).equation() == expect.monic());
}

TEST_CASE("limacon from the unit circle and the line x = 2") {
    PlaneCurve R = conchoidal_transform(curve("x^2+y^2-z^2"), curve("x-2*z"));
    CHECK(R.degree() == 4);
    CHECK(equal_up_to_scalar(dehomogenize(R.equation()), P("4*y^2+x^4+x^2*y^2-4*x^3-4*x*y^2+3*x^2")));
}

TEST_CASE("circle with a line through the center and with the line at infinity") {
    PlaneCurve B = curve("x^2+y^2-z^2");
    CHECK(equal_up_to_scalar(conchoidal_transform(B, curve("x")).equation(), P("x^2*(x^2+y^2-z^2)")));
    CHECK(equal_up_to_scalar(conchoidal_transform(B, curve("z")).equation(), P("z^2*(x^2+y^2)")));
    CHECK_THROWS_AS(conchoidal_transform(curve("z"), curve("z^2")), IdenticallyZero);
}

TEST_CASE("conchoid of a line has the closed form") {
    std::mt19937 rng(41);
    for (int rep = 0; rep < 10; ++rep) {
        MultiPoly ab = MultiPoly::x() * Scalar(small_int(rng, -5, 5)) + MultiPoly::y() * Scalar(small_int(rng, 1, 5));
        MultiPoly F = ab + MultiPoly::z() * Scalar(small_int(rng, 1, 5));
        MultiPoly G = random_form(rng, small_int(rng, 1, 3));
        MultiPoly expect = G.substitute({{"x", MultiPoly::x() * F}, {"y", MultiPoly::y() * F}, {"z", ab * MultiPoly::z()}});
        CHECK(equal_up_to_scalar(conchoidal_transform(PlaneCurve(F), PlaneCurve(G)).equation(), expect));
    }
}

TEST_CASE("degree, symmetry and additivity") {
    std::mt19937 rng(43);
    for (int rep = 0; rep < 8; ++rep) {
        int d = small_int(rng, 1, 3), delta = small_int(rng, 1, 2);
        PlaneCurve B(random_form(rng, d)), C(random_form(rng, delta));
        MultiPoly R = raw_conchoidal_transform(B, C);
        if (R.is_zero()) continue;
        CHECK(R.total_degree() == 2 * d * delta);
        CHECK(equal_up_to_scalar(R, raw_conchoidal_transform(C, B)));
        PlaneCurve C2(random_form(rng, 1));
        MultiPoly prod = raw_conchoidal_transform(B, PlaneCurve(C.equation() * C2.equation()));
        CHECK(equal_up_to_scalar(prod, R * raw_conchoidal_transform(B, C2)));
    }
}

TEST_CASE("base curve divides the transform when C passes through A") {
    std::mt19937 rng(47);
    for (int rep = 0; rep < 8; ++rep) {
        int d = small_int(rng, 1, 2), delta = small_int(rng, 1, 3), nu = small_int(rng, 1, delta);
        MultiPoly F = random_form(rng, d);
        // G_0 = ... = G_(nu-1) = 0: every term has (x, y)-degree >= nu
        MultiPoly G({"x", "y", "z"});
        while (G.is_zero() || G.total_degree() != delta) {
            G = MultiPoly({"x", "y", "z"});
            for (int a = 0; a <= delta; ++a)
                for (int b = 0; a + b <= delta; ++b)
                    if (a + b >= nu && small_int(rng, 0, 2)) G.add_term(Monomial{a, b, delta - a - b}, Scalar(small_int(rng, -3, 3)));
        }
        MultiPoly R = raw_conchoidal_transform(PlaneCurve(F), PlaneCurve(G));
        CHECK(poly_exact_div(R, F.pow(static_cast<unsigned>(nu))).has_value());
    }
}

TEST_CASE("common point at infinity forces multiplicity") {
    std::mt19937 rng(53);
    const ProjPoint X(Scalar(1), Scalar(0), Scalar(0));
    for (int rep = 0; rep < 8; ++rep) {
        int d = small_int(rng, 1, 3), delta = small_int(rng, 1, 3);
        int eta = small_int(rng, 1, d), eps = small_int(rng, 1, delta);
        if (eps > eta) std::swap(eps, eta);
        if (eta > d || eps > delta) continue;
        MultiPoly F = form_through_x_point(rng, d, eta), G = form_through_x_point(rng, delta, eps);
        MultiPoly R = raw_conchoidal_transform(PlaneCurve(F), PlaneCurve(G));
        if (R.is_zero()) continue;
        // Phi rows lie in (y,z)^eta and G rows in (y,z)^eps, so every term of the determinant has order >= eta*delta + eps*d.
        int mult = multiplicity_at(PlaneCurve(R), X);
        CHECK(mult >= eta * delta + eps * d);
        if ((eta - eps) * (d - delta) <= 0) CHECK(mult >= eps * delta + eta * d);
        int line_power = valuation(R, "y");
        CHECK(line_power >= eps * (eta - eps) + eps * (eps + 1) / 2);
        MESSAGE("eps=" << eps << " eta=" << eta << " observed y-power " << line_power << " (eps*eta=" << eps * eta << ")");
    }
}

TEST_CASE("local data at the origin and at infinity") {
    std::mt19937 rng(59);
    const ProjPoint A = ProjPoint::affine(Scalar(0), Scalar(0));
    int done = 0;
    for (int rep = 0; rep < 40 && done < 8; ++rep) {
        int delta = small_int(rng, 1, 2);
        PlaneCurve B(random_form(rng, 2)), C(random_form(rng, delta));
        const MultiPoly& F2 = B.z_parts().front();
        const MultiPoly& Gd = C.z_parts().front();
        // A off both curves, top forms squarefree and coprime
        if (B.z_parts().back().is_zero() || C.z_parts().back().is_zero()) continue;
        if (F2.is_zero() || Gd.is_zero()) continue;
        if (!poly_gcd(F2, F2.derivative("x")).is_constant() || !poly_gcd(Gd, Gd.derivative("x")).is_constant()) continue;
        if (!poly_gcd(F2, Gd).is_constant()) continue;
        PlaneCurve R = conchoidal_transform(B, C);
        CHECK(multiplicity_at(R, A) == 2 * delta);
        CHECK(equal_up_to_scalar(infinity_restriction(R), F2.pow(static_cast<unsigned>(delta)) * Gd.pow(2)));
        if (delta == 1) {
            const auto& parts = C.z_parts();
            MultiPoly ab = parts[0], c = parts[1];
            MultiPoly cone = B.equation().substitute({{"x", c * MultiPoly::x()}, {"y", c * MultiPoly::y()}, {"z", ab}});
            CHECK(equal_up_to_scalar(tangent_cone_at(R, A), cone));
        }
        ++done;
    }
    CHECK(done >= 6);

    PlaneCurve lim = conchoidal_transform(curve("x^2+y^2-z^2"), curve("x-2*z"));
    CHECK(multiplicity_at(lim, A) == 2);
    CHECK(multiplicity_at(curve("x^2+y^2-z^2"), ProjPoint::affine(Scalar(1), Scalar(0))) == 1);
    CHECK(multiplicity_at(curve("z^2*(x^2+y^2)"), A) == 2);
    CHECK(multiplicity_at(curve("x^2+y^2-z^2"), A) == 0);
    CHECK(multiplicity_at(curve("y^2*z-x^3"), ProjPoint(Scalar(0), Scalar(1), Scalar(0))) == 1);
    CHECK(tangent_cone_at(curve("x^2*z-y^3"), A) == P("x^2"));
    CHECK_THROWS(tangent_cone_at(curve("x^2+y^2-z^2"), A));
    // the circle meets x + 2z = 0 at (-2, +-sqrt(-3)): the cone is the pair of lines through A and these points
    CHECK(equal_up_to_scalar(tangent_cone_at(lim, A), P("3*x^2+4*y^2")));
    CHECK(infinity_restriction(curve("z^2*(x^2+y^2)")).is_zero());
}

TEST_CASE("membership oracle") {
    PlaneCurve B = curve("x^2+y^2-z^2"), C = curve("x-2*z");
    CHECK(membership_value(B, C, ProjPoint::affine(Scalar(3), Scalar(0))).value.is_zero());
    CHECK(!membership_value(B, C, ProjPoint::affine(Scalar(0), Scalar(5))).value.is_zero());
    CHECK_THROWS(membership_value(B, C, ProjPoint(Scalar(1), Scalar(0), Scalar(0))));

    std::mt19937 rng(61);
    for (int rep = 0; rep < 5; ++rep) {
        PlaneCurve b(random_form(rng, small_int(rng, 1, 3))), c(random_form(rng, small_int(rng, 1, 2)));
        MultiPoly R = raw_conchoidal_transform(b, c);
        for (int k = 0; k < 10; ++k) {
            Scalar a(testing_support::small_rational(rng)), bb(testing_support::small_rational(rng));
            Membership m = membership_value(b, c, ProjPoint::affine(a, bb));
            if (m.degenerate) continue;
            CHECK(m.value == R.evaluate({{"x", a}, {"y", bb}, {"z", Scalar(1)}}));
        }
    }
}

TEST_CASE("known components of the circle examples") {
    Scene scene(curve("x^2+y^2-z^2"));
    PlaneCurve L = curve("x");
    Divisor d = extract_known_components(conchoidal_transform(scene.base, L), scene, L);
    CHECK(d.multiplicity(Label::Input) == 2);
    CHECK(d.multiplicity(Label::Base) == 1);
    CHECK(d.multiplicity(Label::Residual) == 0);
    CHECK(d.expand() == conchoidal_transform(scene.base, L).equation());

    PlaneCurve Z = curve("z");
    Divisor e = extract_known_components(conchoidal_transform(scene.base, Z), scene, Z);
    CHECK(e.multiplicity(Label::LineInfinity) == 2);
    CHECK(e.multiplicity(Label::LineBlock) == 1);
    CHECK(e.find(Label::LineBlock)->poly == P("x^2+y^2"));
    CHECK(e.multiplicity(Label::Base) == 0);
    Divisor ei = extract_known_components(conchoidal_transform(scene.base, Z), scene, Z, Field::Qi);
    CHECK(ei.multiplicity(Label::LineBlock) == 2);
    CHECK(ei.expand() == conchoidal_transform(scene.base, Z).equation());

    auto j = d.to_json();
    CHECK(j["components"].size() == 2);
    CHECK(Divisor::from_json(j).expand() == d.expand());
}

TEST_CASE("generic data has no exceptional components") {
    Scene scene(curve("x^2+2*y^2-3*x*z-5*z^2"));
    PlaneCurve C = curve("2*x-3*y+7*z");
    PlaneCurve R = conchoidal_transform(scene.base, C);
    Divisor d = extract_known_components(R, scene, C);
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].label == Label::Residual);
    CHECK(d.expand() == R.equation());
}

TEST_CASE("elimination loses the multiplicity") {
    PlaneCurve B = curve("x^2+y^2-z^2");
    CHECK(equal_up_to_scalar(elimination_crosscheck(B, curve("x")), P("x*(x^2+y^2-1)")));
    MultiPoly lim = elimination_crosscheck(B, curve("x-2*z"));
    CHECK(equal_up_to_scalar(lim, P("4*y^2+x^4+x^2*y^2-4*x^3-4*x*y^2+3*x^2")));
    PlaneCurve F = curve("x+y+z"), G = curve("x-y+2*z");
    CHECK(equal_up_to_scalar(elimination_crosscheck(F, G),
                             squarefree_part(dehomogenize(conchoidal_transform(F, G).equation()))));
}

TEST_CASE("degree and genus prediction") {
    CHECK(degree_genus_predict(2, 0, 1, 0) == std::pair<int, Rational>{4, 0});
    CHECK(degree_genus_predict(2, 0, 2, 0) == std::pair<int, Rational>{8, 1});
    CHECK(degree_genus_predict(3, 1, 1, 0) == std::pair<int, Rational>{6, 1});
    CHECK_THROWS(degree_genus_predict(3, 0, 1, 0));
}

#include "doctest.h"
#include "test_support.hpp"

#include "conchoid/algebra/operations.hpp"
#include "conchoid/resultant/resultant.hpp"

using namespace conchoid::algebra;
using namespace conchoid::resultant;
using testing_support::P;

namespace {
PolyMatrix matrix(int n, const std::vector<std::string>& e) {
    PolyMatrix M(n, n);
    for (int i = 0; i < n * n; ++i) M.entries[static_cast<std::size_t>(i)] = P(e[static_cast<std::size_t>(i)]);
    return M;
}

// Cofactor expansion along the first row; independent of the library's elimination code.
MultiPoly laplace(const PolyMatrix& M) {
    if (M.rows == 1) return M.at(0, 0);
    MultiPoly acc;
    for (int j = 0; j < M.cols; ++j) {
        PolyMatrix sub(M.rows - 1, M.cols - 1);
        for (int r = 1; r < M.rows; ++r) {
            int cc = 0;
            for (int c = 0; c < M.cols; ++c)
                if (c != j) sub.at(r - 1, cc++) = M.at(r, c);
        }
        MultiPoly term = M.at(0, j) * laplace(sub);
        if (j % 2) acc -= term;
        else acc += term;
    }
    return acc;
}
} // namespace

TEST_CASE("phi forms") {
    auto l = phi_forms(P("2*x+3*y+5*z"));
    REQUIRE(l.size() == 2);
    CHECK(l[0] == P("2*x+3*y+5*z"));
    CHECK(l[1] == P("-(2*x+3*y)"));
    auto c = phi_forms(P("x^2+y^2-z^2"));
    REQUIRE(c.size() == 3);
    CHECK(c[0] == P("x^2+y^2-z^2"));
    CHECK(c[1] == P("-2*(x^2+y^2)"));
    CHECK(c[2] == P("x^2+y^2"));
    auto z = phi_forms(P("z^3"));
    CHECK(z[0] == P("z^3"));
    for (std::size_t i = 1; i < z.size(); ++i) CHECK(z[i].is_zero());
}

TEST_CASE("phi forms generating identity") {
    std::mt19937 rng(2);
    MultiPoly lam = MultiPoly::variable("t"), mu = MultiPoly::variable("u");
    for (int d = 1; d <= 3; ++d) {
        for (int rep = 0; rep < 3; ++rep) {
            MultiPoly F = testing_support::random_form(rng, d);
            auto phi = phi_forms(F);
            MultiPoly lhs;
            for (int i = 0; i <= d; ++i)
                lhs += lam.pow(static_cast<unsigned>(i)) * mu.pow(static_cast<unsigned>(d - i)) * phi[static_cast<std::size_t>(i)];
            MultiPoly rhs = F.substitute({{"x", (mu - lam) * MultiPoly::x()}, {"y", (mu - lam) * MultiPoly::y()}, {"z", mu * MultiPoly::z()}});
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("conchoid matrix of two lines") {
    // a=1,b=2,c=3 ; a'=-1,b'=4,c'=5
    MultiPoly F = P("x+2*y+3*z"), G = P("-x+4*y+5*z");
    PolyMatrix M = conchoid_matrix(F, G);
    REQUIRE(M.rows == 2);
    CHECK(M.at(0, 0) == P("-(x+2*y)"));
    CHECK(M.at(0, 1) == F);
    CHECK(M.at(1, 0) == P("-x+4*y"));
    CHECK(M.at(1, 1) == P("5*z"));
    MultiPoly det = poly_matrix_det(M, 2);
    CHECK(det == -(F * G - P("15*z^2")));
}

TEST_CASE("conchoid matrix shapes") {
    MultiPoly F = P("x+2*y+3*z"), G = P("x^2-y*z+4*z^2+x*y");
    PolyMatrix A = conchoid_matrix(F, G);
    REQUIRE(A.rows == 3);
    CHECK(A.at(2, 0) == P("x^2+x*y"));
    CHECK(A.at(2, 1) == P("-y*z"));
    CHECK(A.at(2, 2) == P("4*z^2"));
    PolyMatrix B = conchoid_matrix(G, F);
    MultiPoly a = poly_matrix_det(A, 4), b = poly_matrix_det(B, 4);
    CHECK((a == b || a == -b));
    CHECK(a == laplace(A));
}

TEST_CASE("small determinants") {
    CHECK(poly_matrix_det(matrix(2, {"x", "y", "y", "x"}), 2) == P("x^2-y^2"));
    CHECK(poly_matrix_det(matrix(4, {"1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "1", "0", "0", "0", "0", "1"}), 0) == P("1"));
    CHECK(poly_matrix_det(matrix(2, {"x", "1", "1", "x"}), 2) == P("x^2-1"));
    CHECK_THROWS_AS(poly_matrix_det(matrix(2, {"x^2", "0", "0", "x^2"}), 2), std::runtime_error);
    CHECK_THROWS_AS(poly_matrix_det(matrix(2, {"x^2", "1", "1", "x"}), 1), std::runtime_error);
    CHECK_THROWS_AS(poly_matrix_det(PolyMatrix(2, 3), 1), std::invalid_argument);
}

TEST_CASE("interpolated determinant agrees with direct elimination and cofactor expansion") {
    std::mt19937 rng(17);
    for (int n = 3; n <= 4; ++n) {
        for (int rep = 0; rep < 6; ++rep) {
            PolyMatrix M(n, n);
            for (auto& e : M.entries) e = testing_support::random_poly(rng, {"x", "y", "z"}, 2, 3);
            MultiPoly a = poly_matrix_det(M, 2 * n);
            CHECK(a == bareiss_det(M));
            CHECK(a == laplace(M));
            // forcing the polynomial path
            CHECK(a == poly_matrix_det(M, 2 * n, DetOptions{1, false}));
            // evaluation commutes with the determinant
            std::map<std::string, Scalar> pt{{"x", Scalar(Rational(2, 3))}, {"y", Scalar(-5)}, {"z", Scalar(Rational(7, 2))}};
            std::vector<Scalar> vals;
            for (const auto& e : M.entries) vals.push_back(e.evaluate(pt));
            CHECK(a.evaluate(pt) == scalar_det(vals, n));
        }
    }
}

TEST_CASE("homogeneous conchoid determinants agree with cofactor expansion") {
    std::mt19937 rng(23);
    for (int rep = 0; rep < 6; ++rep) {
        int d = testing_support::small_int(rng, 1, 3), delta = testing_support::small_int(rng, 1, 3);
        MultiPoly F = testing_support::random_form(rng, d), G = testing_support::random_form(rng, delta);
        PolyMatrix M = conchoid_matrix(F, G);
        CHECK(poly_matrix_det(M, 2 * d * delta) == laplace(M));
    }
}

TEST_CASE("sylvester resultants") {
    MultiPoly r = sylvester_resultant(P("t-x"), P("t-y"), "t");
    CHECK((r == P("x-y") || r == P("y-x")));
    CHECK(sylvester_resultant(P("t^2-2"), P("t^2-3"), "t") == P("1"));
    CHECK_THROWS(sylvester_resultant(P("x"), P("y"), "t"));
    CHECK(sylvester_resultant(P("t^2+1"), P("x+1"), "t") == P("(x+1)^2"));
}

TEST_CASE("resultants against the product-of-roots formula") {
    std::mt19937 rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        int m = testing_support::small_int(rng, 1, 4);
        Scalar a(testing_support::small_int(rng, 1, 5));
        UniPoly f({a});
        std::vector<Scalar> roots;
        for (int k = 0; k < m; ++k) {
            roots.emplace_back(testing_support::small_rational(rng));
            f = f * UniPoly({-roots.back(), Scalar(1)});
        }
        MultiPoly g = testing_support::random_poly(rng, {"t", "x"}, 3);
        if (g.degree_in("t") < 1) continue;
        int n = g.degree_in("t");
        MultiPoly expect = MultiPoly(a.pow(static_cast<unsigned>(n)));
        for (const auto& r : roots) expect *= g.substitute("t", MultiPoly(r));
        MultiPoly got = sylvester_resultant(f.to_multipoly("t"), g, "t");
        CHECK(got == expect);
        MultiPoly back = sylvester_resultant(g, f.to_multipoly("t"), "t");
        CHECK((back == got || back == -got));
    }
}

TEST_CASE("resultant multiplicativity") {
    std::mt19937 rng(37);
    for (int rep = 0; rep < 8; ++rep) {
        MultiPoly f = testing_support::random_poly(rng, {"t", "x"}, 2);
        MultiPoly h = testing_support::random_poly(rng, {"t", "x"}, 2);
        MultiPoly g = testing_support::random_poly(rng, {"t", "y"}, 2);
        if (f.degree_in("t") < 1 || h.degree_in("t") < 1 || g.degree_in("t") < 1) continue;
        CHECK(sylvester_resultant(f * h, g, "t") == sylvester_resultant(f, g, "t") * sylvester_resultant(h, g, "t"));
    }
}

TEST_CASE("formal-degree scalar resultant") {
    // (t-1)(t-2) and t-3: res = (3-1)(3-2)... with lc(f)=1: res(f,g) = prod g(r) = (1-3)(2-3) = 2
    CHECK(sylvester_resultant_formal({Scalar(2), Scalar(-3), Scalar(1)}, 2, {Scalar(-3), Scalar(1)}, 1) == Scalar(2));
    // both leading coefficients vanish formally -> determinant has a zero first column
    CHECK(sylvester_resultant_formal({Scalar(1), Scalar(1)}, 2, {Scalar(1), Scalar(2)}, 2).is_zero());
}

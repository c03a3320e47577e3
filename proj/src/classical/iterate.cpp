#include "internal.hpp"

#include <stdexcept>

namespace conchoid::classical {

namespace {

PlaneCurve conchoid_for_radius(const CircleSpec& B, int k, const PlaneCurve& C) {
    CircleSpec Bk{B.center, B.r2 * k * k};
    return core::conchoidal_transform(Bk.curve(), C);
}

} // namespace

core::Divisor iterated_conchoid(const CircleSpec& B, const PlaneCurve& C, int n, Field field) {
    if (n < 1) throw std::invalid_argument("iterated_conchoid: n must be at least 1");
    if (!(B.center == Point2{})) throw std::invalid_argument("iterated_conchoid: the circle must be centered at the origin");
    PlaneCurve base = B.curve();
    core::Scene scene(base);
    if (n == 1) return core::extract_known_components(core::conchoidal_transform(base, C), scene, C, field);

    PlaneCurve previous = conchoid_for_radius(B, n - 1, C);
    PlaneCurve R = core::conchoidal_transform(base, previous);
    // Going back by r from radius (n-1) r lands on radius n-2, which for n = 2 is C itself.
    PlaneCurve behind = n == 2 ? C : conchoid_for_radius(B, n - 2, C);
    core::Divisor d = core::extract_known_components(R, scene, behind, field);

    PlaneCurve expected = conchoid_for_radius(B, n, C);
    auto residual = d.find(core::Label::Residual);
    if (!residual) throw PatternMismatch("iterated conchoid: nothing left after the known components");
    if (!algebra::equal_up_to_scalar(residual->poly, expected.equation()))
        throw PatternMismatch("iterated conchoid: residual " + residual->poly.to_string() + " is not the conchoid for radius " +
                              std::to_string(n) + " r");
    if (d.multiplicity(core::Label::Input) == 0) throw PatternMismatch("iterated conchoid: the curve two steps back is missing");
    return d;
}

} // namespace conchoid::classical

#include "conchoid/core/types.hpp"

#include "conchoid/algebra/parser.hpp"

#include <stdexcept>

namespace conchoid::core {

PlaneCurve::PlaneCurve(const MultiPoly& equation) {
    if (equation.is_zero()) throw std::invalid_argument("curve equation is zero");
    if (!equation.is_homogeneous()) throw std::invalid_argument("curve equation is not homogeneous: " + equation.to_string());
    for (const auto& v : equation.support())
        if (v != "x" && v != "y" && v != "z") throw std::invalid_argument("curve equation uses variable '" + v + "'");
    eq_ = equation.with_variables({"x", "y", "z"});
    degree_ = eq_.total_degree();
    parts_ = algebra::homogeneous_decompose(eq_);
}

ProjPoint::ProjPoint(Scalar x, Scalar y, Scalar z) : coords{std::move(x), std::move(y), std::move(z)} {
    if (coords[0].is_zero() && coords[1].is_zero() && coords[2].is_zero()) throw std::invalid_argument("point with all coordinates zero");
}

ProjPoint ProjPoint::canonical() const {
    int k = 2;
    while (coords[static_cast<std::size_t>(k)].is_zero()) --k;
    Scalar inv = coords[static_cast<std::size_t>(k)].inverse();
    return {coords[0] * inv, coords[1] * inv, coords[2] * inv};
}

std::string ProjPoint::to_string() const {
    ProjPoint c = canonical();
    return "[" + c.coords[0].to_string() + ":" + c.coords[1].to_string() + ":" + c.coords[2].to_string() + "]";
}

bool operator==(const ProjPoint& p, const ProjPoint& q) {
    ProjPoint a = p.canonical(), b = q.canonical();
    return a.coords == b.coords;
}

Scene::Scene(PlaneCurve b) : base(std::move(b)) {
    if (algebra::valuation(base.equation(), "z") > 0) throw std::invalid_argument("the line at infinity is a component of the base curve");
    origin_on_base = base.z_parts().back().is_zero();
}

std::string to_string(Label l) {
    switch (l) {
    case Label::Base: return "base";
    case Label::LineInfinity: return "linf";
    case Label::LineBlock: return "lineblock";
    case Label::Input: return "input";
    case Label::Residual: return "residual";
    }
    return "residual";
}

Label label_from_string(const std::string& s) {
    for (Label l : {Label::Base, Label::LineInfinity, Label::LineBlock, Label::Input, Label::Residual})
        if (to_string(l) == s) return l;
    throw std::invalid_argument("unknown component label '" + s + "'");
}

MultiPoly Divisor::expand() const {
    MultiPoly acc(unit);
    for (const auto& c : components) acc *= c.poly.pow(static_cast<unsigned>(c.mult));
    return acc;
}

int Divisor::total_degree() const {
    int d = 0;
    for (const auto& c : components) d += c.mult * c.poly.total_degree();
    return d;
}

int Divisor::multiplicity(Label l) const {
    int m = 0;
    for (const auto& c : components)
        if (c.label == l) m += c.mult;
    return m;
}

std::optional<Component> Divisor::find(Label l) const {
    for (const auto& c : components)
        if (c.label == l) return c;
    return std::nullopt;
}

nlohmann::json Divisor::to_json() const {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : components) comps.push_back({{"poly", c.poly.to_string()}, {"mult", c.mult}, {"label", to_string(c.label)}});
    return {{"unit", unit.to_string()}, {"components", comps}};
}

Divisor Divisor::from_json(const nlohmann::json& j, Field field) {
    Divisor d;
    d.unit = algebra::parse_scalar(j.at("unit").get<std::string>(), field);
    for (const auto& c : j.at("components"))
        d.components.push_back({algebra::parse_polynomial(c.at("poly").get<std::string>(), field), c.at("mult").get<int>(),
                                label_from_string(c.at("label").get<std::string>())});
    return d;
}

} // namespace conchoid::core

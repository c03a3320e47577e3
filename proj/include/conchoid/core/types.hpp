#pragma once

#include "conchoid/algebra/operations.hpp"

#include "json.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace conchoid::core {

using algebra::BinaryForm;
using algebra::Field;
using algebra::MultiPoly;
using algebra::Rational;
using algebra::Scalar;

/// A projective plane curve: a nonzero homogeneous polynomial in x, y, z.
class PlaneCurve {
public:
    explicit PlaneCurve(const MultiPoly& equation);

    const MultiPoly& equation() const { return eq_; }
    int degree() const { return degree_; }
    Field field() const { return eq_.field(); }
    /// [F_d, ..., F_0] with F = sum F_h z^(d-h).
    const std::vector<BinaryForm>& z_parts() const { return parts_; }
    std::string to_string() const { return eq_.to_string(); }

private:
    MultiPoly eq_;
    int degree_;
    std::vector<BinaryForm> parts_;
};

/// Point of the projective plane; equality is up to a nonzero factor.
struct ProjPoint {
    std::array<Scalar, 3> coords;

    ProjPoint(Scalar x, Scalar y, Scalar z);
    static ProjPoint affine(const Scalar& a, const Scalar& b) { return {a, b, Scalar(1)}; }
    bool is_affine() const { return !coords[2].is_zero(); }
    /// Last nonzero coordinate scaled to 1.
    ProjPoint canonical() const;
    std::string to_string() const;
    friend bool operator==(const ProjPoint& p, const ProjPoint& q);
};

/// The base curve B together with the fixed point A = [0:0:1] and line z = 0.
struct Scene {
    explicit Scene(PlaneCurve base);
    PlaneCurve base;
    /// A lies on B, so the genericity hypotheses on B fail.
    bool origin_on_base = false;
};

enum class Label { Base, LineInfinity, LineBlock, Input, Residual };
std::string to_string(Label l);
Label label_from_string(const std::string& s);

struct Component {
    MultiPoly poly;
    int mult = 1;
    Label label = Label::Residual;
};

/// unit * prod poly^mult, with labels recording where each factor came from.
struct Divisor {
    Scalar unit{1};
    std::vector<Component> components;

    MultiPoly expand() const;
    int total_degree() const;
    /// Sum of multiplicities over components with the label, or for a specific polynomial.
    int multiplicity(Label l) const;
    std::optional<Component> find(Label l) const;
    nlohmann::json to_json() const;
    static Divisor from_json(const nlohmann::json& j, Field field = Field::Qi);
};

} // namespace conchoid::core

#pragma once

// Circles as base curves: the classical conchoids of Nicomedes and Pascal.
//
// Everything here is stated for a center A = (a, b). Internally the plane is
// translated so that A sits at the origin, where q = x^2 + y^2 and the lines
// l1 = x + iy, l2 = x - iy through A and the cyclic points take their simplest form.

#include "conchoid/core/conchoid.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conchoid::classical {

using algebra::Field;
using algebra::MultiPoly;
using algebra::Rational;
using algebra::Scalar;
using core::PlaneCurve;

struct Point2 {
    Rational a = 0, b = 0;
    friend bool operator==(const Point2& p, const Point2& q) { return p.a == q.a && p.b == q.b; }
};

/// The circle (x - a)^2 + (y - b)^2 = r2.
struct CircleSpec {
    Point2 center;
    Rational r2 = 1;
    PlaneCurve curve() const;
};

/// f(x + a z, y + b z, z): moves A to the origin.
MultiPoly recenter(const MultiPoly& f, const Point2& A);

/// (x - a z) + i (y - b z) and (x - a z) - i (y - b z).
std::pair<MultiPoly, MultiPoly> cyclic_tangent_pair(const Point2& A);

/// (x - a z)^2 + (y - b z)^2.
MultiPoly squared_distance_form(const Point2& A);

enum class Parity { Even, Odd };

/// Certificate that the conchoid of C around A splits, with q, l1, l2 taken at A:
///   even degree:  scale * G = H1^2 - kappa * q * H2^2
///   odd degree:   scale * G = l1 * H1^2 - kappa * l2 * H2^2
struct SplitWitness {
    Parity parity = Parity::Even;
    Point2 center;
    MultiPoly H1, H2;
    Scalar scale{1};
    Scalar kappa{1};

    Field field() const;
    /// Checks the identity exactly against G.
    bool verify(const MultiPoly& G) const;
    nlohmann::json to_json() const;
};

enum class SplitVerdict { Split, Irreducible, Inconclusive };
std::string to_string(SplitVerdict v);

struct SplitResult {
    SplitVerdict verdict = SplitVerdict::Inconclusive;
    std::optional<SplitWitness> witness;
    std::string detail;
};

/// Decides whether the proper conchoid of the irreducible curve C with respect
/// to any circle centered at A is reducible. Complete for degree <= 4; for higher
/// degree only the necessary square conditions on l1, l2 are checked.
SplitResult split_test(const PlaneCurve& C, const Point2& A);

/// The two components of the proper conchoid of C for the circle (A, r2), read
/// off a witness. nullopt when they are not defined over Q(i), that is when r2
/// or kappa is not a square there.
std::optional<std::pair<MultiPoly, MultiPoly>> split_components(const PlaneCurve& C, const SplitWitness& w, const Rational& r2);

/// What the transform leaves after removing B and the lines through A (the proper conchoid), monic.
MultiPoly proper_conchoid(const CircleSpec& B, const PlaneCurve& C);

struct FocusResult {
    bool is_focus = false;
    MultiPoly polar; // polar line of A
    Scalar c{0};     // equation proportional to polar^2 - c q when is_focus
};

/// For a smooth conic C: A is a focus exactly when C = l^2 - c q with l the polar of A.
FocusResult conic_focus_split(const PlaneCurve& C, const Point2& A);

/// Thrown when the iterated transform does not decompose in the expected shape.
class PatternMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The conchoid of the (n-1)-th conchoid of C, with B centered at the origin.
/// n = 1 is the plain transform. For n >= 2 the result is checked to be B, the
/// line blocks, C_{n-2} (C itself for n = 2, label input) and C_n (label residual),
/// where C_k is the conchoid of C for radius k r.
core::Divisor iterated_conchoid(const CircleSpec& B, const PlaneCurve& C, int n, Field field = Field::Qi);

/// Squared radii suggested by the points of D on lines through A: for every
/// squared distance s between two such points on one line, s/4, s and 4 s.
/// Default probes are the horizontal and vertical lines through A.
std::vector<Rational> candidate_radii(const PlaneCurve& D, const Point2& A, const std::vector<MultiPoly>& probes = {});

enum class Verdict { Yes, No, Inconclusive };
std::string to_string(Verdict v);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Candidate {
    Point2 center;
    Rational r2;
    MultiPoly witness;
};

struct RecognitionReport {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<Check> checks;
    std::vector<Candidate> candidates;
    nlohmann::json to_json() const;
};

/// Is D the full conchoid of some curve C with respect to some circle?
/// Searches rational centers and radii only; anything irrational gives inconclusive, never no.
RecognitionReport recognize_complete(const PlaneCurve& D);

/// Is D a component of the proper conchoid of some curve with respect to some circle?
RecognitionReport recognize_proper(const PlaneCurve& D);

} // namespace conchoid::classical

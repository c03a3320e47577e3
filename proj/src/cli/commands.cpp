#include "conchoid/cli/commands.hpp"

#include "conchoid/algebra/parser.hpp"
#include "conchoid/classical/classical.hpp"
#include "conchoid/cli/plot.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <random>
#include <sstream>

namespace conchoid::cli {

using algebra::Field;
using algebra::MultiPoly;
using algebra::Rational;
using algebra::Scalar;
using core::PlaneCurve;
using nlohmann::json;

namespace {

// Math answered in the negative, as opposed to a usage error.
struct Negative : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

Rational parse_rational(const std::string& s) {
    Scalar v = algebra::parse_scalar(s, Field::Q);
    return v.re();
}

classical::Point2 parse_point(const std::string& s) {
    auto parts = split_commas(s);
    if (parts.size() != 2) throw std::invalid_argument("--center expects a,b");
    return {parse_rational(parts[0]), parse_rational(parts[1])};
}

std::string show_point(const classical::Point2& A) { return "(" + A.a.get_str() + ", " + A.b.get_str() + ")"; }

void print_divisor(std::ostream& out, const core::Divisor& d) {
    out << "unit: " << d.unit << "\n";
    for (const auto& c : d.components) out << to_string(c.label) << " x" << c.mult << ": " << c.poly << "\n";
}

struct Options {
    bool json = false;
    std::string field = "Q";
    bool affine = false;
    std::string B, C, D, curve; // empty B: the unit circle
    std::string center = "0,0";
    std::string r2;
    int n = 2;
    std::string mode = "complete";
    bool proper = false;
    int d = 0, delta = 0;
    std::string g, gamma = "0";
    std::string window = "-2,2,-2,2";
    int grid = 128;
    std::string output;
};

Field field_of(const Options& o) { return o.field == "Qi" ? Field::Qi : Field::Q; }

PlaneCurve curve_arg(const Options& o, const std::string& text, const char* name) {
    if (text.empty() && std::string_view(name) == "--B") return parse_curve("x^2+y^2-z^2");
    if (text.empty()) throw std::invalid_argument(std::string("missing curve ") + name);
    return parse_curve(text, field_of(o), o.affine);
}

int cmd_transform(const Options& o, std::ostream& out) {
    PlaneCurve B = curve_arg(o, o.B, "--B"), C = curve_arg(o, o.C, "--C");
    PlaneCurve R = core::conchoidal_transform(B, C);
    if (o.proper) {
        core::Divisor d = core::extract_known_components(R, core::Scene(B), C, field_of(o));
        if (o.json) out << d.to_json().dump(2) << "\n";
        else print_divisor(out, d);
        return kSuccess;
    }
    if (o.json) out << json{{"equation", R.to_string()}, {"degree", R.degree()}}.dump(2) << "\n";
    else out << R.to_string() << "\n";
    return kSuccess;
}

int cmd_split(const Options& o, std::ostream& out) {
    PlaneCurve C = curve_arg(o, o.C, "--C");
    auto A = parse_point(o.center);
    classical::SplitResult r = classical::split_test(C, A);
    std::optional<std::pair<MultiPoly, MultiPoly>> comps;
    if (r.witness && !o.r2.empty()) comps = classical::split_components(C, *r.witness, parse_rational(o.r2));
    if (o.json) {
        json j{{"verdict", to_string(r.verdict)}, {"detail", r.detail}, {"witness", r.witness ? r.witness->to_json() : json(nullptr)}};
        if (comps) j["components"] = {comps->first.to_string(), comps->second.to_string()};
        out << j.dump(2) << "\n";
    } else {
        out << "verdict: " << to_string(r.verdict) << "\n" << "detail: " << r.detail << "\n";
        if (r.witness) {
            const auto& w = *r.witness;
            out << (w.parity == classical::Parity::Even ? "scale*C = H1^2 - kappa*q*H2^2\n" : "scale*C = l1*H1^2 - kappa*l2*H2^2\n");
            out << "H1: " << w.H1 << "\nH2: " << w.H2 << "\nscale: " << w.scale << "\nkappa: " << w.kappa << "\n";
        }
        if (comps) out << "component: " << comps->first << "\ncomponent: " << comps->second << "\n";
        else if (r.witness && !o.r2.empty()) out << "components are not defined over Q(i) for this radius\n";
    }
    switch (r.verdict) {
    case classical::SplitVerdict::Split: return kSuccess;
    case classical::SplitVerdict::Irreducible: return kNegative;
    default: return kInconclusive;
    }
}

int cmd_focus(const Options& o, std::ostream& out) {
    PlaneCurve C = curve_arg(o, o.C, "--C");
    auto A = parse_point(o.center);
    classical::FocusResult f = classical::conic_focus_split(C, A);
    if (o.json) {
        out << json{{"focus", f.is_focus}, {"polar", f.polar.to_string()}, {"c", f.c.to_string()}}.dump(2) << "\n";
    } else {
        out << "focus: " << (f.is_focus ? "yes" : "no") << "\npolar: " << f.polar << "\n";
        if (f.is_focus) out << "C ~ polar^2 - " << (f.c.is_compound() ? "(" + f.c.to_string() + ")" : f.c.to_string()) << "*q\n";
    }
    return f.is_focus ? kSuccess : kNegative;
}

int cmd_iterate(const Options& o, std::ostream& out) {
    PlaneCurve C = curve_arg(o, o.C, "--C");
    classical::CircleSpec B{{}, o.r2.empty() ? Rational(1) : parse_rational(o.r2)};
    core::Divisor d;
    try {
        d = classical::iterated_conchoid(B, C, o.n, o.field == "Q" ? Field::Qi : field_of(o));
    } catch (const classical::PatternMismatch& e) {
        throw Negative(e.what());
    }
    if (o.json) out << d.to_json().dump(2) << "\n";
    else {
        print_divisor(out, d);
        out << "total degree: " << d.total_degree() << "\n";
    }
    return kSuccess;
}

int cmd_recognize(const Options& o, std::ostream& out) {
    if (o.mode != "complete" && o.mode != "proper") throw std::invalid_argument("--mode must be complete or proper");
    PlaneCurve D = curve_arg(o, o.D, "--D");
    classical::RecognitionReport r = o.mode == "complete" ? classical::recognize_complete(D) : classical::recognize_proper(D);
    if (o.json) {
        out << r.to_json().dump(2) << "\n";
    } else {
        out << "verdict: " << to_string(r.verdict) << "\n";
        for (const auto& c : r.checks) out << (c.passed ? "[pass] " : "[fail] ") << c.name << ": " << c.detail << "\n";
        for (const auto& c : r.candidates) out << "A = " << show_point(c.center) << ", r^2 = " << c.r2 << ", C: " << c.witness << "\n";
    }
    switch (r.verdict) {
    case classical::Verdict::Yes: return kSuccess;
    case classical::Verdict::No: return kNegative;
    default: return kInconclusive;
    }
}

int cmd_genus(const Options& o, std::ostream& out) {
    if (o.d < 1 || o.delta < 1) throw std::invalid_argument("--d and --delta must be positive");
    Rational g = o.g.empty() ? Rational((o.d - 1) * (o.d - 2), 2) : parse_rational(o.g);
    g.canonicalize();
    auto [deg, genus] = core::degree_genus_predict(o.d, g, o.delta, parse_rational(o.gamma));
    if (o.json) out << json{{"degree", deg}, {"genus", genus.get_str()}}.dump(2) << "\n";
    else out << "degree " << deg << ", genus " << genus << "\n";
    return kSuccess;
}

int cmd_eliminate(const Options& o, std::ostream& out) {
    PlaneCurve B = curve_arg(o, o.B, "--B"), C = curve_arg(o, o.C, "--C");
    MultiPoly e = core::elimination_crosscheck(B, C);
    if (o.json) out << json{{"equation", e.to_string()}}.dump(2) << "\n";
    else out << e << "\n";
    return kSuccess;
}

int cmd_plot(const Options& o, std::ostream& out) {
    std::optional<PlaneCurve> f;
    if (!o.curve.empty()) f = curve_arg(o, o.curve, "--curve");
    else f = core::conchoidal_transform(curve_arg(o, o.B, "--B"), curve_arg(o, o.C, "--C"));
    auto w = split_commas(o.window);
    if (w.size() != 4) throw std::invalid_argument("--window expects xmin,xmax,ymin,ymax");
    PlotSpec spec;
    spec.xmin = parse_rational(w[0]);
    spec.xmax = parse_rational(w[1]);
    spec.ymin = parse_rational(w[2]);
    spec.ymax = parse_rational(w[3]);
    spec.grid = o.grid;
    Plot p = render_svg(*f, spec);
    if (o.output.empty() || o.output == "-") {
        out << p.svg;
        return kSuccess;
    }
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot write " + o.output);
    file << p.svg;
    if (o.json) out << json{{"output", o.output}, {"segments", p.segments}}.dump(2) << "\n";
    else out << "wrote " << p.segments << " segments to " << o.output << "\n";
    return kSuccess;
}

// Invariants of the transform checked on the supplied pair.
int cmd_verify(const Options& o, std::ostream& out) {
    PlaneCurve B = curve_arg(o, o.B, "--B"), C = curve_arg(o, o.C, "--C");
    struct Line {
        std::string name;
        std::string status; // pass, fail, skip
        std::string detail;
    };
    std::vector<Line> lines;
    MultiPoly R = core::raw_conchoidal_transform(B, C);
    const int d = B.degree(), delta = C.degree();
    if (R.is_zero()) throw Negative("the transform vanishes identically");
    lines.push_back({"degree", R.total_degree() == 2 * d * delta ? "pass" : "fail",
                     std::to_string(R.total_degree()) + " vs 2*d*delta = " + std::to_string(2 * d * delta)});
    lines.push_back({"symmetry", algebra::equal_up_to_scalar(R, core::raw_conchoidal_transform(C, B)) ? "pass" : "fail", "R(B, C) ~ R(C, B)"});

    std::mt19937 rng(1);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 5);
    int agree = 0, degenerate = 0, total = 20;
    for (int k = 0; k < total; ++k) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        a.canonicalize();
        b.canonicalize();
        core::Membership m = core::membership_value(B, C, core::ProjPoint::affine(a, b));
        if (m.degenerate) {
            ++degenerate;
            continue;
        }
        agree += m.value == R.evaluate({{"x", Scalar(a)}, {"y", Scalar(b)}, {"z", Scalar(1)}});
    }
    lines.push_back({"membership", agree + degenerate == total ? "pass" : "fail",
                     std::to_string(agree) + " of " + std::to_string(total - degenerate) + " oracle values equal R(a, b, 1)"});

    const MultiPoly &Fd = B.z_parts().front(), &Gd = C.z_parts().front();
    if (Gd.is_zero() || !algebra::poly_gcd(Fd, Gd).is_constant()) {
        lines.push_back({"infinity", "skip", "top forms of B and C share a factor"});
    } else {
        bool ok = algebra::equal_up_to_scalar(core::infinity_restriction(PlaneCurve(R)),
                                             Fd.pow(static_cast<unsigned>(delta)) * Gd.pow(static_cast<unsigned>(d)));
        lines.push_back({"infinity", ok ? "pass" : "fail", "R(x, y, 0) ~ F_d^delta G_delta^d"});
    }
    try {
        PlaneCurve Rc = core::conchoidal_transform(B, C);
        core::Divisor dv = core::extract_known_components(Rc, core::Scene(B), C, field_of(o));
        lines.push_back({"reconstruction", dv.expand() == Rc.equation() ? "pass" : "fail", "known components times residual give R"});
    } catch (const std::invalid_argument& e) {
        lines.push_back({"reconstruction", "skip", e.what()});
    }

    bool all = true;
    json arr = json::array();
    for (const auto& l : lines) {
        all = all && l.status != "fail";
        arr.push_back({{"name", l.name}, {"status", l.status}, {"detail", l.detail}});
    }
    if (o.json) {
        out << json{{"passed", all}, {"checks", arr}}.dump(2) << "\n";
    } else {
        for (const auto& l : lines) {
            std::string tag = l.status == "pass" ? "PASS" : l.status == "fail" ? "FAIL" : "SKIP";
            out << tag << " " << l.name << ": " << l.detail << "\n";
        }
    }
    return all ? kSuccess : kNegative;
}

} // namespace

PlaneCurve parse_curve(std::string_view text, Field field, bool affine) {
    MultiPoly p = algebra::parse_polynomial(text, field);
    for (const auto& v : p.support())
        if (v != "x" && v != "y" && v != "z") throw std::invalid_argument("curves use only x, y, z (found " + v + ")");
    if (affine) {
        if (p.involves("z")) throw std::invalid_argument("--affine input must not contain z");
        if (p.is_zero()) throw std::invalid_argument("the zero polynomial is not a curve");
        p = algebra::homogenize(p, "z", p.total_degree());
    } else if (!p.is_homogeneous()) {
        throw std::invalid_argument("equation is not homogeneous (pass --affine to homogenize with z)");
    }
    return PlaneCurve(p.with_variables({"x", "y", "z"}));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Conchoids of plane algebraic curves", "conchoid"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_option("--field", o.field, "coefficient field")->check(CLI::IsMember({"Q", "Qi"}));
    app.add_flag("--affine", o.affine, "homogenize affine input with z");

    auto* transform = app.add_subcommand("transform", "conchoid of C with respect to B");
    transform->add_option("--B", o.B, "base curve (default: unit circle)");
    transform->add_option("--C", o.C, "curve to transform")->required();
    transform->add_flag("--proper", o.proper, "decompose into known components and the proper conchoid");

    auto* split = app.add_subcommand("split", "is the conchoid of C for a circle around A reducible?");
    split->add_option("--C", o.C, "curve to test")->required();
    split->add_option("--center", o.center, "A as a,b");
    split->add_option("--r2", o.r2, "squared radius for the components");

    auto* focus = app.add_subcommand("focus", "is A a focus of the conic C?");
    focus->add_option("--C", o.C, "conic")->required();
    focus->add_option("--center", o.center, "A as a,b");

    auto* iterate = app.add_subcommand("iterate", "conchoid of the conchoid, n times");
    iterate->add_option("--C", o.C, "starting curve")->required();
    iterate->add_option("--r2", o.r2, "squared radius of the circle around the origin");
    iterate->add_option("--n", o.n, "number of steps")->check(CLI::Range(1, 8));

    auto* recognize = app.add_subcommand("recognize", "is D a conchoid for some circle?");
    recognize->add_option("--D", o.D, "curve to recognize")->required();
    recognize->add_option("--mode", o.mode, "complete or proper")->check(CLI::IsMember({"complete", "proper"}));

    auto* genus = app.add_subcommand("genus", "predicted degree and genus");
    genus->add_option("--d", o.d, "degree of B")->required();
    genus->add_option("--delta", o.delta, "degree of C")->required();
    genus->add_option("--g", o.g, "genus of B (default: smooth)");
    genus->add_option("--gamma", o.gamma, "genus of C");

    auto* eliminate = app.add_subcommand("eliminate", "conchoid by elimination, affine and squarefree");
    eliminate->add_option("--B", o.B, "base curve (default: unit circle)");
    eliminate->add_option("--C", o.C, "curve to transform")->required();

    auto* plot = app.add_subcommand("plot", "SVG of the real affine locus");
    plot->add_option("--curve", o.curve, "curve to draw");
    plot->add_option("--B", o.B, "base curve for --C (default: unit circle)");
    plot->add_option("--C", o.C, "draw the conchoid of C instead");
    plot->add_option("--window", o.window, "xmin,xmax,ymin,ymax");
    plot->add_option("--grid", o.grid, "cells per axis");
    plot->add_option("--output", o.output, "file (default: standard output)");

    auto* verify = app.add_subcommand("verify", "check the transform's invariants on B and C");
    verify->add_option("--B", o.B, "base curve (default: unit circle)");
    verify->add_option("--C", o.C, "curve to transform")->required();

    std::vector<const char*> argv{"conchoid"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (*transform) return cmd_transform(o, out);
        if (*split) return cmd_split(o, out);
        if (*focus) return cmd_focus(o, out);
        if (*iterate) return cmd_iterate(o, out);
        if (*recognize) return cmd_recognize(o, out);
        if (*genus) return cmd_genus(o, out);
        if (*eliminate) return cmd_eliminate(o, out);
        if (*plot) return cmd_plot(o, out);
        if (*verify) return cmd_verify(o, out);
    } catch (const algebra::ParseError& e) {
        err << "syntax error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Negative& e) {
        err << e.what() << "\n";
        return kNegative;
    } catch (const core::IdenticallyZero& e) {
        // Both curves inside z = 0 is a degenerate request, not a negative answer.
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace conchoid::cli

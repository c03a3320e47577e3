#include "conchoid/classical/solver.hpp"

#include "conchoid/resultant/resultant.hpp"

#include <algorithm>

namespace conchoid::classical {

using algebra::MultiPoly;
using algebra::Scalar;

namespace {

void add_unique(std::vector<Assignment>& out, const Assignment& a) {
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
}

// Drops zeros and scalar multiples of equations already present.
std::vector<MultiPoly> normalize(const std::vector<MultiPoly>& eqs) {
    std::vector<MultiPoly> out;
    for (const auto& e : eqs) {
        if (e.is_zero()) continue;
        MultiPoly m = e.monic();
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
    return out;
}

SolveResult solve_univariate(const std::vector<MultiPoly>& eqs, const std::string& v, algebra::Field field) {
    SolveResult r;
    MultiPoly g = eqs.front();
    for (std::size_t i = 1; i < eqs.size(); ++i) g = algebra::poly_gcd(g, eqs[i]);
    auto u = algebra::UniPoly::from_multipoly(g.trimmed(), v).with_field(field);
    int found = 0;
    for (const auto& root : algebra::rational_roots(u)) {
        r.solutions.push_back({{v, root.value}});
        found += root.multiplicity;
    }
    r.exhaustive = found == u.degree();
    return r;
}

} // namespace

SolveResult solve_polynomial_system(std::vector<MultiPoly> eqs, const std::vector<std::string>& vars, algebra::Field field) {
    eqs = normalize(eqs);
    SolveResult result;
    for (const auto& e : eqs)
        if (e.is_constant()) return result; // a nonzero constant: no solutions
    if (eqs.empty()) {
        Assignment zero;
        for (const auto& v : vars) zero[v] = Scalar(0);
        result.solutions.push_back(zero);
        result.exhaustive = vars.empty();
        return result;
    }
    if (vars.size() == 1) return solve_univariate(eqs, vars[0], field);

    const std::string v = vars.back();
    std::vector<std::string> others(vars.begin(), vars.end() - 1);
    std::vector<MultiPoly> with_v, without_v;
    for (const auto& e : eqs) (e.involves(v) ? with_v : without_v).push_back(e);

    if (with_v.size() > 1) {
        MultiPoly g = with_v.front();
        for (std::size_t i = 1; i < with_v.size(); ++i) g = algebra::poly_gcd(g, with_v[i]);
        if (!g.is_constant()) {
            // Zeros of the common factor, plus zeros of the cofactors.
            auto first = without_v;
            first.push_back(g);
            auto second = without_v;
            for (const auto& e : with_v) second.push_back(*algebra::poly_exact_div(e, g));
            SolveResult a = solve_polynomial_system(first, vars, field);
            SolveResult b = solve_polynomial_system(second, vars, field);
            result.exhaustive = a.exhaustive && b.exhaustive;
            for (const auto& s : a.solutions) add_unique(result.solutions, s);
            for (const auto& s : b.solutions) add_unique(result.solutions, s);
            return result;
        }
    }

    std::vector<MultiPoly> eliminated = without_v;
    bool lost = false;
    for (std::size_t i = 0; i < with_v.size(); ++i) {
        for (std::size_t j = i + 1; j < with_v.size(); ++j) {
            MultiPoly r = resultant::sylvester_resultant(with_v[i], with_v[j], v);
            if (r.is_zero()) lost = true;
            else eliminated.push_back(r);
        }
    }
    if (with_v.size() == 1) lost = true; // the others are constrained only by where this equation keeps a root
    SolveResult sub = solve_polynomial_system(eliminated, others, field);
    result.exhaustive = sub.exhaustive && !lost;
    if (with_v.empty()) {
        result.exhaustive = false;
        for (auto s : sub.solutions) {
            s[v] = Scalar(0);
            add_unique(result.solutions, s);
        }
        return result;
    }
    for (const auto& s : sub.solutions) {
        std::map<std::string, MultiPoly> subs;
        for (const auto& [name, value] : s) subs[name] = MultiPoly(value);
        std::vector<MultiPoly> uni;
        for (const auto& e : with_v) uni.push_back(e.substitute(subs));
        uni = normalize(uni);
        if (uni.empty()) {
            Assignment a = s;
            a[v] = Scalar(0);
            add_unique(result.solutions, a);
            result.exhaustive = false;
            continue;
        }
        if (std::any_of(uni.begin(), uni.end(), [](const MultiPoly& p) { return p.is_constant(); })) continue;
        SolveResult last = solve_univariate(uni, v, field);
        if (!last.exhaustive) result.exhaustive = false;
        for (const auto& l : last.solutions) {
            Assignment a = s;
            a[v] = l.at(v);
            add_unique(result.solutions, a);
        }
    }
    return result;
}

} // namespace conchoid::classical

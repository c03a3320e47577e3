#include "conchoid/algebra/operations.hpp"
#include "conchoid/resultant/resultant.hpp"

#include <stdexcept>

namespace conchoid::resultant {

using algebra::binomial;
using algebra::homogeneous_decompose;

namespace {
const std::vector<std::string> kXYZ{"x", "y", "z"};

MultiPoly z_power(int k) { return MultiPoly::z().pow(static_cast<unsigned>(k)); }
} // namespace

std::vector<MultiPoly> phi_forms(const MultiPoly& F) {
    if (F.is_zero() || F.total_degree() < 1) throw std::invalid_argument("phi_forms: degree must be positive");
    const int d = F.total_degree();
    auto parts = homogeneous_decompose(F); // parts[d - j] = F_j
    std::vector<MultiPoly> phi;
    phi.reserve(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) {
        MultiPoly acc(kXYZ, F.field());
        for (int j = i; j <= d; ++j) {
            const MultiPoly& Fj = parts[static_cast<std::size_t>(d - j)];
            if (Fj.is_zero()) continue;
            acc += Fj * z_power(d - j) * Scalar(binomial(static_cast<unsigned>(j), static_cast<unsigned>(i)));
        }
        if (i % 2) acc = -acc;
        phi.push_back(acc.with_variables(kXYZ));
    }
    return phi;
}

PolyMatrix conchoid_matrix(const MultiPoly& F, const MultiPoly& G) {
    if (F.is_zero() || G.is_zero() || F.total_degree() < 1 || G.total_degree() < 1)
        throw std::invalid_argument("conchoid_matrix: both curves need positive degree");
    const int d = F.total_degree(), delta = G.total_degree();
    const Field field = algebra::join(F.field(), G.field());
    auto phi = phi_forms(F);
    auto gparts = homogeneous_decompose(G); // gparts[k] = G_(delta-k)
    const int N = d + delta;
    PolyMatrix M(N, N);
    for (auto& e : M.entries) e = MultiPoly(kXYZ, field);
    for (int r = 0; r < delta; ++r)
        for (int k = 0; k <= d; ++k) M.at(r, r + k) = phi[static_cast<std::size_t>(d - k)].with_field(field);
    for (int s = 0; s < d; ++s)
        for (int k = 0; k <= delta; ++k)
            M.at(delta + s, s + k) = (gparts[static_cast<std::size_t>(k)] * z_power(k)).with_variables(kXYZ).with_field(field);
    return M;
}

PolyMatrix sylvester_matrix(const MultiPoly& f, const MultiPoly& g, const std::string& var, int m, int n) {
    auto cf = f.coefficients_in(var), cg = g.coefficients_in(var);
    if (static_cast<int>(cf.size()) > m + 1 || static_cast<int>(cg.size()) > n + 1)
        throw std::invalid_argument("sylvester_matrix: formal degree below actual degree");
    auto others = algebra::merge_variables(f.variables(), g.variables());
    std::erase(others, var);
    const Field field = algebra::join(f.field(), g.field());
    auto coeff = [&](const std::vector<MultiPoly>& c, int k) {
        if (k < static_cast<int>(c.size())) return c[static_cast<std::size_t>(k)].with_variables(others).with_field(field);
        return MultiPoly(others, field);
    };
    const int N = m + n;
    PolyMatrix M(N, N);
    for (auto& e : M.entries) e = MultiPoly(others, field);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) M.at(i, i + k) = coeff(cf, m - k);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) M.at(n + i, i + k) = coeff(cg, n - k);
    return M;
}

Scalar sylvester_resultant_formal(const std::vector<Scalar>& f, int m, const std::vector<Scalar>& g, int n) {
    auto at = [](const std::vector<Scalar>& c, int k) { return k < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(k)] : Scalar(0); };
    auto check = [](const std::vector<Scalar>& c, int deg) {
        for (std::size_t k = static_cast<std::size_t>(deg) + 1; k < c.size(); ++k)
            if (!c[k].is_zero()) throw std::invalid_argument("formal degree below actual degree");
    };
    check(f, m);
    check(g, n);
    const int N = m + n;
    std::vector<Scalar> a(static_cast<std::size_t>(N * N));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) a[static_cast<std::size_t>(i * N + i + k)] = at(f, m - k);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) a[static_cast<std::size_t>((n + i) * N + i + k)] = at(g, n - k);
    return scalar_det(std::move(a), N);
}

} // namespace conchoid::resultant

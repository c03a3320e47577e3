// Determinants by evaluation and interpolation.
//
// Entries are evaluated on a tensor grid of nonnegative integers, one scalar
// determinant per grid point, and the values are turned back into monomial
// coefficients one axis at a time with the inverse Vandermonde matrix of the
// nodes 0..n. When every entry is homogeneous and the degrees are compatible
// (deg M_ij = r_i + c_j) the determinant is homogeneous of known degree and one
// variable is set to 1 first.

#include "conchoid/algebra/operations.hpp"
#include "conchoid/resultant/resultant.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>

namespace conchoid::resultant {

using algebra::Monomial;
using algebra::Rational;

Scalar scalar_det(std::vector<Scalar> a, int n) {
    if (static_cast<int>(a.size()) != n * n) throw std::invalid_argument("scalar_det: size mismatch");
    if (n == 0) return Scalar(1);
    auto A = [&](int i, int j) -> Scalar& { return a[static_cast<std::size_t>(i * n + j)]; };
    Scalar prev(1);
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        if (A(k, k).is_zero()) {
            int p = k + 1;
            while (p < n && A(p, k).is_zero()) ++p;
            if (p == n) return Scalar(0);
            for (int j = 0; j < n; ++j) std::swap(A(k, j), A(p, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
            }
        }
        prev = A(k, k);
    }
    Scalar d = A(n - 1, n - 1);
    return negate ? -d : d;
}

MultiPoly bareiss_det(PolyMatrix M) {
    if (M.rows != M.cols) throw std::invalid_argument("determinant of a non-square matrix");
    const int n = M.rows;
    Field field = Field::Q;
    std::vector<std::string> vars;
    for (const auto& e : M.entries) {
        field = algebra::join(field, e.field());
        vars = algebra::merge_variables(vars, e.variables());
    }
    if (n == 0) return MultiPoly(Scalar(1), vars, field);
    MultiPoly prev(Scalar(1), vars, field);
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        if (M.at(k, k).is_zero()) {
            int p = k + 1;
            while (p < n && M.at(p, k).is_zero()) ++p;
            if (p == n) return MultiPoly(vars, field);
            for (int j = 0; j < n; ++j) std::swap(M.at(k, j), M.at(p, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                MultiPoly num = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
                auto q = algebra::poly_exact_div(num, prev);
                if (!q) throw std::logic_error("Bareiss step not exact");
                M.at(i, j) = std::move(*q);
            }
        }
        prev = M.at(k, k);
    }
    MultiPoly d = M.at(n - 1, n - 1).with_variables(vars).with_field(field);
    return negate ? -d : d;
}

namespace {

// A polynomial flattened against a fixed variable list for fast evaluation.
struct Compiled {
    std::vector<std::pair<std::vector<int>, Scalar>> terms;
};

Compiled compile(const MultiPoly& p, const std::vector<std::string>& vars) {
    Compiled c;
    MultiPoly q = p.trimmed().with_variables(vars);
    for (const auto& [m, v] : q.terms()) c.terms.emplace_back(m, v);
    return c;
}

// powers[v][e] = point_v^e
Scalar evaluate(const Compiled& c, const std::vector<std::vector<Scalar>>& powers) {
    Scalar acc(0);
    for (const auto& [m, v] : c.terms) {
        Scalar t = v;
        for (std::size_t k = 0; k < m.size(); ++k)
            if (m[k]) t *= powers[k][static_cast<std::size_t>(m[k])];
        acc += t;
    }
    return acc;
}

std::vector<std::vector<Scalar>> power_table(const std::vector<Scalar>& point, const std::vector<int>& maxdeg) {
    std::vector<std::vector<Scalar>> t(point.size());
    for (std::size_t k = 0; k < point.size(); ++k) {
        t[k].resize(static_cast<std::size_t>(maxdeg[k]) + 1);
        t[k][0] = Scalar(1);
        for (int e = 1; e <= maxdeg[k]; ++e) t[k][static_cast<std::size_t>(e)] = t[k][static_cast<std::size_t>(e - 1)] * point[k];
    }
    return t;
}

Scalar det_at(const std::vector<Compiled>& entries, int n, const std::vector<Scalar>& point, const std::vector<int>& maxdeg) {
    auto powers = power_table(point, maxdeg);
    std::vector<Scalar> a;
    a.reserve(entries.size());
    for (const auto& e : entries) a.push_back(evaluate(e, powers));
    return scalar_det(std::move(a), n);
}

// Inverse of the Vandermonde matrix V_ij = i^j, i, j = 0..n, row-major.
std::vector<Rational> inverse_vandermonde(int n) {
    const int N = n + 1;
    std::vector<Rational> a(static_cast<std::size_t>(N * 2 * N));
    auto A = [&](int i, int j) -> Rational& { return a[static_cast<std::size_t>(i * 2 * N + j)]; };
    for (int i = 0; i < N; ++i) {
        Rational p = 1;
        for (int j = 0; j < N; ++j) {
            A(i, j) = p;
            p *= i;
        }
        A(i, N + i) = 1;
    }
    for (int c = 0; c < N; ++c) {
        int p = c;
        while (A(p, c) == 0) ++p;
        if (p != c)
            for (int j = 0; j < 2 * N; ++j) std::swap(A(p, j), A(c, j));
        Rational inv = 1 / A(c, c);
        for (int j = 0; j < 2 * N; ++j) A(c, j) *= inv;
        for (int i = 0; i < N; ++i) {
            if (i == c || A(i, c) == 0) continue;
            Rational f = A(i, c);
            for (int j = 0; j < 2 * N; ++j) A(i, j) -= f * A(c, j);
        }
    }
    std::vector<Rational> out(static_cast<std::size_t>(N * N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) out[static_cast<std::size_t>(i * N + j)] = A(i, N + j);
    return out;
}

const std::vector<Rational>& cached_inverse_vandermonde(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Rational>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, inverse_vandermonde(n)).first;
    return it->second;
}

// Per-variable degree bound from row sums and column sums of entry degrees.
int axis_bound(const PolyMatrix& M, const std::string& v) {
    long rows = 0, cols = 0;
    for (int i = 0; i < M.rows; ++i) {
        int best = 0;
        for (int j = 0; j < M.cols; ++j) best = std::max(best, M.at(i, j).degree_in(v));
        rows += best;
    }
    for (int j = 0; j < M.cols; ++j) {
        int best = 0;
        for (int i = 0; i < M.rows; ++i) best = std::max(best, M.at(i, j).degree_in(v));
        cols += best;
    }
    return static_cast<int>(std::min(rows, cols));
}

// Total degree D with deg M_ij = r_i + c_j on every nonzero entry, when all entries are homogeneous.
std::optional<int> graded_degree(const PolyMatrix& M) {
    const int n = M.rows;
    std::vector<std::optional<int>> r(static_cast<std::size_t>(n)), c(static_cast<std::size_t>(n));
    for (const auto& e : M.entries)
        if (!e.is_zero() && !e.is_homogeneous()) return std::nullopt;
    for (int start = 0; start < n; ++start) {
        if (r[static_cast<std::size_t>(start)]) continue;
        r[static_cast<std::size_t>(start)] = 0;
        std::vector<std::pair<bool, int>> stack{{true, start}};
        while (!stack.empty()) {
            auto [is_row, k] = stack.back();
            stack.pop_back();
            for (int o = 0; o < n; ++o) {
                const MultiPoly& e = is_row ? M.at(k, o) : M.at(o, k);
                if (e.is_zero()) continue;
                int deg = e.total_degree();
                auto& mine = is_row ? r[static_cast<std::size_t>(k)] : c[static_cast<std::size_t>(k)];
                auto& other = is_row ? c[static_cast<std::size_t>(o)] : r[static_cast<std::size_t>(o)];
                int want = deg - *mine;
                if (!other) {
                    other = want;
                    stack.emplace_back(!is_row, o);
                } else if (*other != want) {
                    return std::nullopt;
                }
            }
        }
    }
    int D = 0;
    for (int k = 0; k < n; ++k) {
        if (!c[static_cast<std::size_t>(k)]) return std::nullopt; // an empty column: determinant is zero anyway
        D += *r[static_cast<std::size_t>(k)] + *c[static_cast<std::size_t>(k)];
    }
    return D;
}

struct GridSpec {
    std::vector<std::string> vars;
    std::vector<int> bounds; // per-variable degree bound
    int total_bound;
};

MultiPoly interpolate(const PolyMatrix& M, const GridSpec& g, Field field, const DetOptions& opts) {
    const int n = M.rows;
    const std::size_t k = g.vars.size();
    std::vector<Compiled> entries;
    entries.reserve(M.entries.size());
    for (const auto& e : M.entries) entries.push_back(compile(e, g.vars));
    std::vector<int> maxdeg(k, 0);
    for (const auto& e : entries)
        for (const auto& [m, v] : e.terms)
            for (std::size_t a = 0; a < k; ++a) maxdeg[a] = std::max(maxdeg[a], m[a]);

    std::size_t total = 1;
    for (int b : g.bounds) total *= static_cast<std::size_t>(b + 1);
    std::vector<Scalar> values(total);

    auto point_of = [&](std::size_t idx) {
        std::vector<Scalar> p(k);
        for (std::size_t a = k; a-- > 0;) {
            auto side = static_cast<std::size_t>(g.bounds[a] + 1);
            p[a] = Scalar(static_cast<long>(idx % side));
            idx /= side;
        }
        return p;
    };
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t idx = lo; idx < hi; ++idx) values[idx] = det_at(entries, n, point_of(idx), maxdeg);
    };
    unsigned threads = opts.parallel ? std::max(1U, std::min(8U, std::thread::hardware_concurrency())) : 1U;
    if (threads > 1 && total >= 64) {
        std::vector<std::future<void>> jobs;
        std::size_t chunk = (total + threads - 1) / threads;
        for (std::size_t lo = 0; lo < total; lo += chunk) jobs.push_back(std::async(std::launch::async, work, lo, std::min(total, lo + chunk)));
        for (auto& j : jobs) j.get();
    } else {
        work(0, total);
    }

    // Axis-by-axis conversion from values to coefficients.
    std::size_t stride = 1;
    for (std::size_t a = k; a-- > 0;) {
        const int nb = g.bounds[a];
        const auto side = static_cast<std::size_t>(nb + 1);
        const auto& V = cached_inverse_vandermonde(nb);
        std::vector<Scalar> line(side), out(side);
        for (std::size_t base = 0; base < total; ++base) {
            if ((base / stride) % side != 0) continue;
            for (std::size_t t = 0; t < side; ++t) line[t] = values[base + t * stride];
            for (std::size_t i = 0; i < side; ++i) {
                Scalar acc(0);
                for (std::size_t t = 0; t < side; ++t) {
                    const Rational& w = V[i * side + t];
                    if (w != 0 && !line[t].is_zero()) acc += line[t] * Scalar(w);
                }
                out[i] = acc;
            }
            for (std::size_t t = 0; t < side; ++t) values[base + t * stride] = out[t];
        }
        stride *= side;
    }

    MultiPoly result(g.vars, field);
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (values[idx].is_zero()) continue;
        Monomial m(k);
        std::size_t rest = idx;
        int deg = 0;
        for (std::size_t a = k; a-- > 0;) {
            auto side = static_cast<std::size_t>(g.bounds[a] + 1);
            m[a] = static_cast<int>(rest % side);
            rest /= side;
            deg += m[a];
        }
        if (deg > g.total_bound) throw std::runtime_error("determinant exceeds the degree bound");
        result.add_term(m, values[idx]);
    }

    // Off-grid residual check.
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> num(1, 97), den(2, 11);
    for (int trial = 0; trial < 2; ++trial) {
        std::vector<Scalar> p(k);
        std::map<std::string, Scalar> at;
        for (std::size_t a = 0; a < k; ++a) {
            Rational q(num(rng), den(rng));
            q.canonicalize();
            p[a] = Scalar(q + g.bounds[a]);
            at[g.vars[a]] = p[a];
        }
        if (result.evaluate(at) != det_at(entries, n, p, maxdeg)) throw std::runtime_error("determinant exceeds the degree bound");
    }
    return result;
}

MultiPoly det_with_grid(const PolyMatrix& M, GridSpec g, Field field, const DetOptions& opts) {
    for (std::size_t a = 0; a < g.vars.size(); ++a) g.bounds[a] = std::min({g.bounds[a], axis_bound(M, g.vars[a]), g.total_bound});
    std::size_t total = 1;
    for (int b : g.bounds) {
        total *= static_cast<std::size_t>(b + 1);
        if (total > opts.max_grid) return bareiss_det(M);
    }
    return interpolate(M, g, field, opts);
}

Field common_field(const PolyMatrix& M) {
    Field f = Field::Q;
    for (const auto& e : M.entries) f = algebra::join(f, e.field());
    return f;
}

std::vector<std::string> common_support(const PolyMatrix& M) {
    std::vector<std::string> v;
    for (const auto& e : M.entries) v = algebra::merge_variables(v, e.support());
    return v;
}

} // namespace

MultiPoly poly_matrix_det(const PolyMatrix& M, int degree_bound, const DetOptions& opts) {
    if (M.rows != M.cols) throw std::invalid_argument("determinant of a non-square matrix");
    if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
    const Field field = common_field(M);
    auto vars = common_support(M);
    if (vars.empty()) {
        std::vector<Scalar> a;
        for (const auto& e : M.entries) a.push_back(e.is_zero() ? Scalar(0) : e.constant_value());
        return MultiPoly(scalar_det(std::move(a), M.rows), {}, field);
    }
    auto D = graded_degree(M);
    if (D && *D > degree_bound) throw std::runtime_error("determinant exceeds the degree bound");
    if (D && vars.size() >= 2) {
        const std::string h = vars.back();
        PolyMatrix affine = M;
        for (auto& e : affine.entries) e = e.substitute(h, MultiPoly(Scalar(1))).trimmed();
        std::vector<std::string> rest(vars.begin(), vars.end() - 1);
        GridSpec g{rest, std::vector<int>(rest.size(), *D), *D};
        MultiPoly a = det_with_grid(affine, g, field, opts);
        if (a.is_zero()) return MultiPoly(vars, field);
        return algebra::homogenize(a, h, *D).with_variables(vars);
    }
    GridSpec g{vars, std::vector<int>(vars.size(), degree_bound), degree_bound};
    return det_with_grid(M, g, field, opts).with_variables(vars);
}

MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
    const int m = std::max(0, f.degree_in(var)), n = std::max(0, g.degree_in(var));
    if (m == 0 && n == 0) throw std::invalid_argument("sylvester_resultant: variable '" + var + "' occurs in neither input");
    if (f.is_zero() || g.is_zero()) {
        auto vars = algebra::merge_variables(f.variables(), g.variables());
        std::erase(vars, var);
        return MultiPoly(vars, algebra::join(f.field(), g.field()));
    }
    if (m == 0) return f.pow(static_cast<unsigned>(n));
    if (n == 0) return g.pow(static_cast<unsigned>(m));
    PolyMatrix S = sylvester_matrix(f, g, var, m, n);
    const Field field = algebra::join(f.field(), g.field());
    auto vars = common_support(S);
    if (vars.empty()) return poly_matrix_det(S, 0);
    std::vector<int> bounds;
    for (const auto& v : vars) bounds.push_back(n * std::max(0, f.degree_in(v)) + m * std::max(0, g.degree_in(v)));
    int total = n * f.total_degree() + m * g.total_degree();
    return det_with_grid(S, GridSpec{vars, bounds, total}, field, DetOptions{});
}

} // namespace conchoid::resultant

#ifndef HOPFALG_GROUPLIKES_HPP
#define HOPFALG_GROUPLIKES_HPP

#include <optional>
#include <vector>

#include "hopfalg/hopf.hpp"

namespace hopfalg {

/// All z in K with z^2 = s.  Solved through the Weil restriction to two
/// rational equations; rational square roots are tested exactly.
inline std::vector<Scalar> sqrt_in_field(const Scalar& s) {
    std::vector<Scalar> roots;
    auto rat_sqrt = [](const Rational& r) -> std::optional<Rational> {
        if (r.sign() < 0) return std::nullopt;
        if (r.is_zero()) return Rational(0);
        bigint n = r.num().to_big(), d = r.den().to_big();
        bigint sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
        if (sn * sn != n || sd * sd != d) return std::nullopt;
        return Rational(Int(sn), Int(sd));
    };
    const Rational& s0 = s.r0();
    const Rational& s1 = s.r1();
    // z = u: u^2 = s0 and s1 = 0
    if (s1.is_zero()) {
        if (auto u = rat_sqrt(s0)) {
            roots.emplace_back(*u, Rational(0));
            if (!u->is_zero()) roots.emplace_back(-*u, Rational(0));
        }
    }
    // z = u + v xi, v != 0: with w = v^2, 3 w^2 + (4 s0 + 2 s1) w - s1^2 = 0
    Rational qb = Rational(4) * s0 + Rational(2) * s1, qc = -(s1 * s1);
    Rational disc = qb * qb - Rational(12) * qc;
    if (auto sd = rat_sqrt(disc)) {
        for (int sign : {+1, -1}) {
            Rational w = ((sign > 0 ? *sd : -*sd) - qb) / Rational(6);
            if (w.sign() <= 0) continue;
            auto v = rat_sqrt(w);
            if (!v) continue;
            for (int vs : {+1, -1}) {
                Rational vv = vs > 0 ? *v : -*v;
                Rational u = (s1 / vv - vv) / Rational(2);
                Scalar z(u, vv);
                if (z * z == s) {
                    bool seen = false;
                    for (const auto& o : roots) seen = seen || (o == z);
                    if (!seen) roots.push_back(z);
                }
            }
        }
    }
    return roots;
}

/// Roots in K of a polynomial with K coefficients (ascending degree order).
/// Strategy: strip zero roots, peel candidate roots (all +-xi^k), then solve
/// the residual exactly when its degree is at most 2.  A residual of higher
/// degree with no candidate root cannot be certified root-free and throws;
/// no catalog input reaches that state.
inline std::vector<Scalar> roots_in_field(std::vector<Scalar> cf) {
    while (!cf.empty() && cf.back().is_zero()) cf.pop_back();
    if (cf.size() <= 1) throw Error("RootFinding", "degenerate polynomial");
    std::vector<Scalar> roots;
    while (cf.size() > 1 && cf[0].is_zero()) {
        if (roots.empty() || !(roots.back() == Scalar(0))) roots.push_back(Scalar(0));
        cf.erase(cf.begin());
    }
    auto eval = [&](const Scalar& z) {
        Scalar acc;
        for (size_t p = cf.size(); p-- > 0;) acc = acc * z + cf[p];
        return acc;
    };
    auto deflate = [&](const Scalar& z) {
        // synthetic division by (t - z)
        std::vector<Scalar> q(cf.size() - 1);
        Scalar carry = cf.back();
        for (size_t p = cf.size() - 1; p-- > 0;) {
            q[p] = carry;
            carry = cf[p] + z * carry;
        }
        cf = std::move(q);
    };
    bool progress = true;
    while (cf.size() > 3 && progress) {
        progress = false;
        for (int k = 0; k < 6 && !progress; ++k)
            for (int sgn : {+1, -1}) {
                Scalar z = sgn > 0 ? xi_power(k) : -xi_power(k);
                if (eval(z).is_zero()) {
                    bool seen = false;
                    for (const auto& r : roots) seen = seen || (r == z);
                    if (!seen) roots.push_back(z);
                    deflate(z);
                    progress = true;
                    break;
                }
            }
    }
    if (cf.size() == 2) {
        Scalar z = (-cf[0]) / cf[1];
        bool seen = false;
        for (const auto& r : roots) seen = seen || (r == z);
        if (!seen) roots.push_back(z);
    } else if (cf.size() == 3) {
        Scalar disc = cf[1] * cf[1] - Scalar(4) * cf[2] * cf[0];
        for (const auto& sq : sqrt_in_field(disc)) {
            Scalar z = (sq - cf[1]) / (Scalar(2) * cf[2]);
            bool seen = false;
            for (const auto& r : roots) seen = seen || (r == z);
            if (!seen) roots.push_back(z);
        }
    } else if (cf.size() > 3) {
        throw Error("RootFinding", "residual of degree > 2 without candidate roots");
    }
    return roots;
}

namespace detail {

/// Exact solver for the group-like system Delta(g) = g (x) g, eps(g) = 1.
/// Maintains an affine parametrization x = c + N t refined by propagation;
/// branches on product-form equations (x_j x_k = 0) and on equations
/// univariate in one parameter.  Complete whenever every stuck state is
/// covered by a branch rule, which holds for all catalog inputs; anything
/// else throws rather than returning a partial answer.
class GrouplikeSolver {
public:
    explicit GrouplikeSolver(const FinDimHopf& h) : h_(h), n_(h.dim) {}

    std::vector<Vec> run() {
        std::vector<std::pair<Vec, Scalar>> eqs;
        eqs.emplace_back(h_.counit, Scalar(1));
        recurse(eqs, 0);
        std::vector<Vec> out;
        for (const auto& g : solutions_) {
            if (!is_grouplike(h_, g)) continue;
            bool seen = false;
            for (const auto& o : out) seen = seen || (o == g);
            if (!seen) out.push_back(g);
        }
        return out;
    }

private:
    struct Reduced {
        Vec point;                // zero on free coordinates
        std::vector<Vec> basis;
        std::vector<size_t> free; // free coordinate of each basis vector: t_s = x[free_s]
    };

    std::optional<Reduced> reduce(const std::vector<std::pair<Vec, Scalar>>& eqs) const {
        Mat m(eqs.size(), n_);
        Vec rhs(eqs.size());
        for (size_t r = 0; r < eqs.size(); ++r) {
            for (size_t j = 0; j < n_; ++j) m(r, j) = eqs[r].first[j];
            rhs[r] = eqs[r].second;
        }
        Mat aug(eqs.size(), n_ + 1);
        for (size_t r = 0; r < eqs.size(); ++r) {
            for (size_t j = 0; j < n_; ++j) aug(r, j) = m(r, j);
            aug(r, n_) = rhs[r];
        }
        std::vector<size_t> pivots = row_reduce(aug);
        if (!pivots.empty() && pivots.back() == n_) return std::nullopt;
        Reduced red;
        red.point = Vec(n_);
        for (size_t r = 0; r < pivots.size(); ++r) red.point[pivots[r]] = aug(r, n_);
        std::vector<bool> is_pivot(n_, false);
        for (size_t p : pivots) is_pivot[p] = true;
        for (size_t f = 0; f < n_; ++f) {
            if (is_pivot[f]) continue;
            Vec v(n_);
            v[f] = Scalar(1);
            for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug(r, f);
            red.basis.push_back(std::move(v));
            red.free.push_back(f);
        }
        return red;
    }

    void recurse(std::vector<std::pair<Vec, Scalar>> eqs, int depth) {
        if (depth > 64 || ++branches_ > 20000)
            throw Error("GrouplikeSearchOverflow", "branch tree exceeded bounds");
        auto red_opt = reduce(eqs);
        if (!red_opt) return;
        Reduced red = std::move(*red_opt);

        // propagation: equations whose quadratic part collapsed join the
        // linear system (x_j x_k - sum_i d[i][j][k] x_i = 0 turns affine as
        // soon as one factor is pinned)
        bool changed = true;
        while (changed && !red.basis.empty()) {
            changed = false;
            for (size_t j = 0; j < n_ && !changed; ++j) {
                bool cj = constant_on(red, j);
                for (size_t k = 0; k < n_ && !changed; ++k) {
                    bool ck = constant_on(red, k);
                    if (!cj && !ck) continue;
                    Vec cov(n_);
                    Scalar rhs;
                    if (cj && ck) rhs = -(red.point[j] * red.point[k]);
                    else if (ck) cov[j] += red.point[k];
                    else cov[k] += red.point[j];
                    for (size_t i = 0; i < n_; ++i)
                        for (const auto& t : h_.comult.row(i))
                            if (t.j == j && t.k == k) cov[i] -= t.c;
                    if (!nontrivial(cov)) {
                        if (!rhs.is_zero()) return; // inconsistent branch
                        continue;
                    }
                    eqs.emplace_back(cov, rhs);
                    auto r2 = reduce(eqs);
                    if (!r2) return;
                    if (r2->basis.size() < red.basis.size()) {
                        red = std::move(*r2);
                        changed = true;
                    } else {
                        eqs.pop_back();
                    }
                }
            }
        }

        if (red.basis.empty()) {
            solutions_.push_back(red.point);
            return;
        }

        const size_t f = red.basis.size();
        auto coord_affine = [&](size_t j) {
            Vec c(f + 1);
            c[0] = red.point[j];
            for (size_t s = 0; s < f; ++s) c[s + 1] = red.basis[s][j];
            return c;
        };

        // rule 1: product-form equations a_j(t) a_k(t) = 0 split the branch
        for (size_t j = 0; j < n_; ++j) {
            if (constant_on(red, j)) continue;
            for (size_t k = 0; k < n_; ++k) {
                if (constant_on(red, k)) continue;
                Vec L(f + 1);
                for (size_t i = 0; i < n_; ++i) {
                    Scalar ci;
                    for (const auto& t : h_.comult.row(i))
                        if (t.j == j && t.k == k) ci += t.c;
                    if (ci.is_zero()) continue;
                    Vec xi = coord_affine(i);
                    for (size_t s = 0; s <= f; ++s) L[s] += ci * xi[s];
                }
                bool L_zero = true;
                for (const auto& s : L) L_zero = L_zero && s.is_zero();
                if (!L_zero) continue;
                if (j == k) {
                    branch_with(eqs, red, coord_affine(j), depth);
                } else {
                    branch_with(eqs, red, coord_affine(j), depth);
                    branch_with(eqs, red, coord_affine(k), depth);
                }
                return;
            }
        }

        // rule 2 (power closure): on the solution set every product of
        // coordinates reduces to a linear form through the defining
        // equations, so powers of the first parameter t stay affine and a
        // linear dependence among 1, t, t^2, ... appears within f+2 steps.
        // Branch on the exact roots of that polynomial.
        {
            const size_t fs = red.free[0];
            // affine forms over x: (constant, covector)
            Scalar cur_c0;
            Vec cur_cov(n_);
            cur_cov[fs] = Scalar(1); // t itself
            std::vector<Vec> power_vals; // evaluated in the t-parametrization
            Vec v0(f + 1);
            v0[0] = Scalar(1);
            power_vals.push_back(v0); // t^0
            Mat dep(f + 2, f + 1);
            auto eval_form = [&](const Scalar& c0, const Vec& cov) {
                Vec v(f + 1);
                v[0] = c0;
                for (size_t i = 0; i < n_; ++i) {
                    if (cov[i].is_zero()) continue;
                    v[0] += cov[i] * red.point[i];
                    for (size_t s = 0; s < f; ++s) v[s + 1] += cov[i] * red.basis[s][i];
                }
                return v;
            };
            std::vector<Scalar> poly; // filled when dependence found
            for (size_t m = 1; m <= f + 1 && poly.empty(); ++m) {
                power_vals.push_back(eval_form(cur_c0, cur_cov));
                // check dependence of power_vals via elimination
                Mat sys(f + 1, power_vals.size());
                for (size_t col = 0; col < power_vals.size(); ++col)
                    for (size_t row = 0; row <= f; ++row) sys(row, col) = power_vals[col][row];
                auto ker = kernel_basis(sys);
                if (!ker.empty()) {
                    poly = ker.front();
                } else {
                    // advance: t^{m+1} = t * t^m with x_fs x_i = L_{fs,i}(x)
                    Scalar next_c0;
                    Vec next_cov(n_);
                    next_cov[fs] += cur_c0;
                    for (size_t i = 0; i < n_; ++i) {
                        if (cur_cov[i].is_zero()) continue;
                        for (size_t mrow = 0; mrow < n_; ++mrow)
                            for (const auto& t : h_.comult.row(mrow))
                                if (t.j == fs && t.k == i) next_cov[mrow] += cur_cov[i] * t.c;
                    }
                    cur_c0 = next_c0;
                    cur_cov = std::move(next_cov);
                }
            }
            if (!poly.empty()) {
                for (const auto& root : roots_in_field(poly)) {
                    Vec constr(f + 1);
                    constr[0] = -root;
                    constr[1] = Scalar(1); // t_0 = root
                    branch_with(eqs, red, constr, depth);
                }
                return;
            }
        }
        throw Error("GrouplikeSearchOverflow", "no applicable branch rule");
    }

    bool constant_on(const Reduced& red, size_t j) const {
        for (const auto& v : red.basis)
            if (!v[j].is_zero()) return false;
        return true;
    }

    static bool nontrivial(const Vec& cov) {
        for (const auto& s : cov)
            if (!s.is_zero()) return true;
        return false;
    }

    /// Adds the t-space constraint c0 + sum_s c_{s+1} t_s = 0 (t_s = x[free_s]).
    void branch_with(const std::vector<std::pair<Vec, Scalar>>& eqs, const Reduced& red,
                     const Vec& constr, int depth) {
        std::vector<std::pair<Vec, Scalar>> next = eqs;
        Vec cov(n_);
        for (size_t s = 0; s + 1 < constr.size(); ++s)
            if (!constr[s + 1].is_zero()) cov[red.free[s]] += constr[s + 1];
        next.emplace_back(std::move(cov), -constr[0]);
        recurse(std::move(next), depth + 1);
    }

    const FinDimHopf& h_;
    size_t n_;
    long branches_ = 0;
    std::vector<Vec> solutions_;
};

} // namespace detail

/// All group-like elements, exactly; output is verified and deduplicated.
inline std::vector<Vec> grouplikes(const FinDimHopf& h) {
    h.require_certified(HopfLevel::coalgebra);
    detail::GrouplikeSolver solver(h);
    return solver.run();
}

// ---------------------------------------------------------------------------
// radical / coradical via the trace form (valid in characteristic 0)
// ---------------------------------------------------------------------------

/// Basis of the Jacobson radical of the algebra with multiplication `mult`.
inline std::vector<Vec> algebra_radical(const MultTensor& mult) {
    const size_t n = mult.dim();
    Mat gram(n, n);
    for (size_t u = 0; u < n; ++u)
        for (size_t v = 0; v < n; ++v) {
            Scalar tr;
            for (size_t q = 0; q < n; ++q)
                for (const auto& [p, c] : mult.row(u, q).terms)
                    for (const auto& [k, c2] : mult.row(v, p).terms)
                        if (k == q) tr += c * c2;
            gram(u, v) = tr;
        }
    return kernel_basis(std::move(gram));
}

/// Coradical of H = annihilator of rad(H*); returns a basis.
inline std::vector<Vec> coradical_basis(const FinDimHopf& h) {
    MultTensor dualmult(h.dim);
    for (const auto& [i, j, k, c] : h.comult.entries()) dualmult.add(j, k, i, c);
    dualmult.normalize();
    auto rad = algebra_radical(dualmult);
    if (rad.empty()) {
        std::vector<Vec> full;
        for (size_t i = 0; i < h.dim; ++i) full.push_back(h.basis_vec(i));
        return full;
    }
    Mat m(rad.size(), h.dim);
    for (size_t r = 0; r < rad.size(); ++r)
        for (size_t j = 0; j < h.dim; ++j) m(r, j) = rad[r][j];
    return kernel_basis(std::move(m));
}

/// Dimension of the subalgebra generated by the given elements together with 1.
inline size_t generated_subalgebra_dim(const FinDimHopf& h, const std::vector<Vec>& gens) {
    Span span(h.dim);
    span.add(h.unit);
    for (const auto& g : gens) span.add(g);
    bool grew = true;
    while (grew) {
        grew = false;
        auto basis = span.basis();
        for (const auto& u : basis)
            for (const auto& v : basis)
                if (span.add(el_mult(h, u, v))) grew = true;
    }
    return span.dim();
}

/// True when the span of `vecs` is closed under multiplication.
inline bool span_is_subalgebra(const FinDimHopf& h, const std::vector<Vec>& vecs) {
    Span span(h.dim);
    for (const auto& v : vecs) span.add(v);
    for (const auto& u : vecs)
        for (const auto& v : vecs)
            if (!span.contains(el_mult(h, u, v))) return false;
    return true;
}

} // namespace hopfalg

#endif

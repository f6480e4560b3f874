#ifndef HOPFALG_MODULES_HPP
#define HOPFALG_MODULES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hopfalg/catalog.hpp"
#include "hopfalg/quiver.hpp"

namespace hopfalg {

/// Finite-dimensional left D-module: one action matrix per generator
/// (order a, b, g, x), certified against the presentation.
struct ModuleRep {
    const DoubleData* algebra = nullptr;
    size_t dim = 0;
    std::vector<Mat> gen; // a, b, g, x
    std::string name;
};

inline ModuleRep module_from_generators(const DoubleData& dd, std::vector<Mat> mats,
                                        std::string name) {
    ModuleRep m;
    m.algebra = &dd;
    m.dim = mats.empty() ? 0 : mats[0].rows();
    for (const auto& mt : mats)
        if (mt.rows() != m.dim || mt.cols() != m.dim)
            throw Error("DimensionMismatch", "generator matrices must be square, equal size");
    m.gen = std::move(mats);
    m.name = std::move(name);
    for (size_t r = 0; r < dd.pres.relations.size(); ++r) {
        Mat res = eval_poly_mat(m.gen, m.dim, dd.pres.relations[r]);
        if (!res.is_zero())
            throw Error("RelationViolated",
                        m.name + ": relation " + dd.pres.relation_names[r] + " fails");
    }
    return m;
}

/// Action of an arbitrary element of D, through the PBW expansion.
inline Mat module_action(const ModuleRep& m, const Vec& element) {
    Vec coords = m.algebra->pbw_inv.apply(element); // coefficients on PBW monomials
    Mat act(m.dim, m.dim);
    for (size_t mono = 0; mono < coords.size(); ++mono) {
        if (coords[mono].is_zero()) continue;
        Mat w = eval_word_mat(m.gen, m.dim, m.algebra->pres.pbw_monomials[mono]);
        act = act + coords[mono] * w;
    }
    return act;
}

/// Action matrices of all basis elements of D (index = basis index of D).
inline std::vector<Mat> basis_actions(const ModuleRep& m) {
    std::vector<Mat> mono(m.algebra->D.dim);
    for (size_t i = 0; i < mono.size(); ++i)
        mono[i] = eval_word_mat(m.gen, m.dim, m.algebra->pres.pbw_monomials[i]);
    std::vector<Mat> out(m.algebra->D.dim);
    for (size_t n = 0; n < out.size(); ++n) {
        Mat act(m.dim, m.dim);
        for (size_t k = 0; k < mono.size(); ++k) {
            const Scalar& c = m.algebra->pbw_inv(k, n);
            if (!c.is_zero()) act = act + c * mono[k];
        }
        out[n] = std::move(act);
    }
    return out;
}

// ---------------------------------------------------------------------------
// the simple catalog: 6 characters and 30 two-dimensional simples
// ---------------------------------------------------------------------------

/// K_{chi^i}: a -> xi^i, b -> 0, g -> (-1)^i, x -> 0.
inline ModuleRep character_module(const DoubleData& dd, int i) {
    Mat a(1, 1), b(1, 1), g(1, 1), x(1, 1);
    a(0, 0) = xi_power(i);
    g(0, 0) = Scalar(i % 2 == 0 ? 1 : -1);
    return module_from_generators(dd, {a, b, g, x}, "K" + std::to_string(((i % 6) + 6) % 6));
}

inline std::vector<ModuleRep> character_modules(const DoubleData& dd) {
    std::vector<ModuleRep> out;
    for (int i = 0; i < 6; ++i) out.push_back(character_module(dd, i));
    return out;
}

/// Exhaustive solve of the one-dimensional module variety.  The relations
/// force beta = 0 (b^2 = 0), then gamma delta = 0 (gx = -xg); the branch
/// gamma = 0 dies because the bx-relation would force alpha = 0 against
/// a^6 = 1, so delta = 0 and gamma^2 = 1 (x^2 = 1 - g^2); a^6 = 1 puts
/// alpha among the six sixth roots of unity, which are exactly the xi^i
/// (t^6 - 1 splits over K).  Candidates are then filtered exactly.
inline std::vector<std::array<Scalar, 4>> solve_one_dimensional(const DoubleData& dd) {
    std::vector<std::array<Scalar, 4>> sols;
    for (int i = 0; i < 6; ++i)
        for (const Scalar& gamma : {Scalar(1), Scalar(-1)}) {
            std::vector<Mat> mats(4, Mat(1, 1));
            mats[0](0, 0) = xi_power(i);
            mats[2](0, 0) = gamma;
            bool ok = true;
            for (const auto& rel : dd.pres.relations)
                ok = ok && eval_poly_mat(mats, 1, rel).is_zero();
            if (ok) sols.push_back({xi_power(i), Scalar(0), gamma, Scalar(0)});
        }
    return sols;
}

/// Index set Lambda = {(i,j) : 3i != j mod 6}.
inline bool in_Lambda(int i, int j) { return ((3 * i) % 6 + 6) % 6 != ((j % 6) + 6) % 6; }

/// V_{i,j} on the basis {v1, v2} with Lam1 = xi^i, Lam2 = xi^j.
inline ModuleRep two_dim_simple(const DoubleData& dd, int i, int j) {
    if (!in_Lambda(i, j))
        throw Error("IndexNotInLambda",
                    "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ") has 3i = j");
    const Scalar xi = Scalar::xi();
    const Scalar L1 = xi_power(i), L2 = xi_power(j);
    const Scalar& theta = dd.consts.theta;
    Mat a(2, 2), b(2, 2), g(2, 2), x(2, 2);
    a(0, 0) = L1;
    a(1, 1) = xi * L1;
    b(0, 1) = Scalar(1);
    g(0, 0) = L2;
    g(1, 1) = -L2;
    x(0, 1) = theta.inverse() * xi.pow(2) * L1.inverse() * (L1.pow(3) + L2);
    x(1, 0) = theta * xi.pow(-2) * L1 * (L1.pow(3) - L2);
    return module_from_generators(dd, {a, b, g, x},
                                  "V" + std::to_string(((i % 6) + 6) % 6) +
                                      std::to_string(((j % 6) + 6) % 6));
}

inline std::vector<ModuleRep> two_dim_simples(const DoubleData& dd) {
    std::vector<ModuleRep> out;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (in_Lambda(i, j)) out.push_back(two_dim_simple(dd, i, j));
    return out;
}

/// All 36 simples, characters first (frozen order).
inline std::vector<ModuleRep> simple_modules(const DoubleData& dd) {
    std::vector<ModuleRep> out = character_modules(dd);
    for (auto& v : two_dim_simples(dd)) out.push_back(std::move(v));
    return out;
}

// ---------------------------------------------------------------------------
// hom spaces, simplicity, isomorphism
// ---------------------------------------------------------------------------

/// Basis of intertwiners T with rho_N(gen) T = T rho_M(gen) for every generator.
inline std::vector<Mat> hom_space(const ModuleRep& m, const ModuleRep& n) {
    if (m.algebra != n.algebra) throw Error("DimensionMismatch", "different algebras");
    size_t rows = 4 * n.dim * m.dim, cols = n.dim * m.dim;
    Mat sys(rows, cols);
    for (size_t gidx = 0; gidx < 4; ++gidx)
        for (size_t p = 0; p < n.dim; ++p)
            for (size_t q = 0; q < m.dim; ++q) {
                size_t row = (gidx * n.dim + p) * m.dim + q;
                // (rho_N(g) T)_{pq} - (T rho_M(g))_{pq}
                for (size_t t = 0; t < n.dim; ++t)
                    sys(row, t * m.dim + q) += n.gen[gidx](p, t);
                for (size_t t = 0; t < m.dim; ++t)
                    sys(row, p * m.dim + t) -= m.gen[gidx](t, q);
            }
    std::vector<Mat> basis;
    for (const auto& v : kernel_basis(std::move(sys))) {
        Mat t(n.dim, m.dim);
        for (size_t p = 0; p < n.dim; ++p)
            for (size_t q = 0; q < m.dim; ++q) t(p, q) = v[p * m.dim + q];
        basis.push_back(std::move(t));
    }
    return basis;
}

/// Simplicity for dim <= 2 via exact common-eigenvector search (all catalog
/// eigenvalues lie in K).
inline bool is_simple(const ModuleRep& m) {
    if (m.dim == 1) return true;
    if (m.dim != 2) throw Error("UnsupportedDimension", "is_simple handles dim <= 2");
    // a 2-dim module is non-simple iff the generators share an eigenvector
    const Mat* pivot = nullptr;
    for (const auto& g : m.gen) {
        bool scalar = g(0, 1).is_zero() && g(1, 0).is_zero() && g(0, 0) == g(1, 1);
        if (!scalar) { pivot = &g; break; }
    }
    if (!pivot) return false; // everything scalar: K + K
    // eigenvalues of the pivot in K
    Scalar tr = (*pivot)(0, 0) + (*pivot)(1, 1);
    Scalar dt = (*pivot)(0, 0) * (*pivot)(1, 1) - (*pivot)(0, 1) * (*pivot)(1, 0);
    std::vector<Scalar> eig;
    for (const auto& sq : sqrt_in_field(tr * tr - Scalar(4) * dt)) {
        Scalar lam = (tr + sq) / Scalar(2);
        bool seen = false;
        for (const auto& e : eig) seen = seen || e == lam;
        if (!seen) eig.push_back(lam);
    }
    for (const auto& lam : eig) {
        Mat shifted = *pivot;
        shifted(0, 0) -= lam;
        shifted(1, 1) -= lam;
        for (const auto& v : kernel_basis(shifted)) {
            bool common = true;
            for (const auto& g : m.gen) {
                Vec gv = g.apply(v);
                // gv must be proportional to v
                Scalar det2 = gv[0] * v[1] - gv[1] * v[0];
                common = common && det2.is_zero();
            }
            if (common) return false;
        }
    }
    return true; // no common eigenvector over K
}

enum class IsoAnswer { yes, no, inconclusive };

struct IsoResult {
    IsoAnswer answer;
    std::optional<Mat> witness;
};

/// Deterministic isomorphism decision: searches the hom space over the
/// coefficient grid {0, +-1, +-xi, +-xi^2} on up to two basis intertwiners.
inline IsoResult is_isomorphic(const ModuleRep& m, const ModuleRep& n) {
    if (m.dim != n.dim) return {IsoAnswer::no, std::nullopt};
    auto hom = hom_space(m, n);
    if (hom.empty()) return {IsoAnswer::no, std::nullopt};
    std::vector<Scalar> grid = {Scalar(0),  Scalar(1),        Scalar(-1),
                                Scalar::xi(), -Scalar::xi(),  xi_power(2),
                                -xi_power(2)};
    for (const auto& h : hom)
        if (!det(h).is_zero()) return {IsoAnswer::yes, h};
    if (hom.size() >= 2)
        for (const auto& c1 : grid)
            for (const auto& c2 : grid) {
                Mat cand = c1 * hom[0] + c2 * hom[1];
                if (!det(cand).is_zero()) return {IsoAnswer::yes, cand};
            }
    if (hom.size() == 1) return {IsoAnswer::no, std::nullopt}; // all multiples singular
    return {IsoAnswer::inconclusive, std::nullopt};
}

// ---------------------------------------------------------------------------
// tensor products and duals
// ---------------------------------------------------------------------------

/// M (x) N with the action through Delta_D on the embedded generators.
inline ModuleRep tensor_module(const ModuleRep& m, const ModuleRep& n) {
    const DoubleData& dd = *m.algebra;
    std::vector<Mat> bm = basis_actions(m), bn = basis_actions(n);
    std::vector<Mat> gens;
    for (size_t gidx = 0; gidx < 4; ++gidx) {
        SVec dg = dd.D.comult.apply(dd.emb.assignment[gidx]);
        Mat act(m.dim * n.dim, m.dim * n.dim);
        for (const auto& [uv, c] : dg.terms) {
            size_t u = uv / dd.D.dim, v = uv % dd.D.dim;
            if (bm[u].is_zero() || bn[v].is_zero()) continue;
            act = act + c * Mat::kronecker(bm[u], bn[v]);
        }
        gens.push_back(std::move(act));
    }
    return module_from_generators(dd, std::move(gens), m.name + "(x)" + n.name);
}

/// Left dual with (h . f)(v) = f(S(h) v).
inline ModuleRep dual_module(const ModuleRep& m) {
    const DoubleData& dd = *m.algebra;
    std::vector<Mat> gens;
    for (size_t gidx = 0; gidx < 4; ++gidx) {
        Vec sh = el_antipode(dd.D, dd.emb.assignment[gidx]);
        gens.push_back(module_action(m, sh).transpose());
    }
    return module_from_generators(dd, std::move(gens), m.name + "*");
}

// ---------------------------------------------------------------------------
// projective cover of the trivial module and its twists
// ---------------------------------------------------------------------------

/// P = P(K_eps), dim 4, on the basis {p1, p2, p3, p4}.  The printed [x] does
/// not satisfy x^2 = 1 - g^2; solving the relation system with the printed
/// [a], [g], [b] and x.p1 = theta p2 + 2 p3 forces [x](4,2) = 2 theta and
/// [x](4,3) = -xi^2 (two corrected entries, see reference_P_action for the
/// diff against the printed display).
inline ModuleRep projective_cover_P(const DoubleData& dd) {
    const Scalar xi = Scalar::xi();
    const Scalar& th = dd.consts.theta;
    Mat a(4, 4), b(4, 4), g(4, 4), x(4, 4);
    a(0, 0) = Scalar(1);
    a(1, 1) = xi;
    a(2, 2) = xi.pow(-1);
    a(3, 3) = Scalar(1);
    b(2, 0) = th;
    b(3, 1) = Scalar(1);
    g(0, 0) = Scalar(1);
    g(1, 1) = Scalar(-1);
    g(2, 2) = Scalar(-1);
    g(3, 3) = Scalar(1);
    x(1, 0) = th;
    x(2, 0) = Scalar(2);
    x(3, 1) = Scalar(2) * th;
    x(3, 2) = -xi.pow(2);
    return module_from_generators(dd, {a, b, g, x}, "P0");
}

/// The projective cover exactly as displayed in the reference; fails two
/// relations and is kept for the erratum diff.
inline std::vector<Mat> reference_P_action(const NamedConstants& k) {
    const Scalar xi = Scalar::xi();
    Mat a(4, 4), b(4, 4), g(4, 4), x(4, 4);
    a(0, 0) = Scalar(1);
    a(1, 1) = xi;
    a(2, 2) = xi.pow(-1);
    a(3, 3) = Scalar(1);
    b(2, 0) = k.theta;
    b(3, 1) = Scalar(1);
    g(0, 0) = Scalar(1);
    g(1, 1) = Scalar(-1);
    g(2, 2) = Scalar(-1);
    g(3, 3) = Scalar(1);
    x(1, 0) = k.theta;
    x(2, 0) = Scalar(2);
    x(3, 1) = Scalar(2) * (Scalar(1) + xi) * k.theta;
    x(3, 2) = xi.pow(2);
    return {a, b, g, x};
}

/// P_j = P (x) K_{chi^j}.
inline ModuleRep projective_cover_Pj(const DoubleData& dd, int j) {
    ModuleRep p = projective_cover_P(dd);
    if (((j % 6) + 6) % 6 == 0) return p;
    ModuleRep t = tensor_module(p, character_module(dd, j));
    t.name = "P" + std::to_string(((j % 6) + 6) % 6);
    return t;
}

// ---------------------------------------------------------------------------
// socle / top, indecomposability
// ---------------------------------------------------------------------------

struct SocleTop {
    std::vector<size_t> socle, top; // multiplicities over a simple list
};

inline SocleTop socle_top(const ModuleRep& m, const std::vector<ModuleRep>& simples) {
    SocleTop st;
    for (const auto& s : simples) {
        st.socle.push_back(hom_space(s, m).size());
        st.top.push_back(hom_space(m, s).size());
    }
    return st;
}

/// dim End(M)/rad = 1 test (all catalog endomorphism algebras split).
inline bool is_indecomposable(const ModuleRep& m) {
    auto endo = hom_space(m, m);
    size_t e = endo.size();
    if (e == 0) throw Error("DimensionMismatch", "zero module");
    if (e == 1) return true;
    // structure constants of End(M) on the intertwiner basis
    Mat flat(m.dim * m.dim, e);
    for (size_t k = 0; k < e; ++k)
        for (size_t p = 0; p < m.dim; ++p)
            for (size_t q = 0; q < m.dim; ++q) flat(p * m.dim + q, k) = endo[k](p, q);
    MultTensor mult(e);
    for (size_t i = 0; i < e; ++i)
        for (size_t j = 0; j < e; ++j) {
            Mat prod = endo[i] * endo[j];
            Vec rhs(m.dim * m.dim);
            for (size_t p = 0; p < m.dim; ++p)
                for (size_t q = 0; q < m.dim; ++q) rhs[p * m.dim + q] = prod(p, q);
            auto coords = solve(flat, rhs);
            if (!coords) throw Error("DimensionMismatch", "End(M) not closed");
            for (size_t k = 0; k < e; ++k) mult.add(i, j, k, (*coords)[k]);
        }
    mult.normalize();
    size_t rad = algebra_radical(mult).size();
    return e - rad == 1;
}

// ---------------------------------------------------------------------------
// Ext^1 through relation linearization on block matrices
// ---------------------------------------------------------------------------

/// Classes of extensions 0 -> T -> E -> S -> 0: block upper-triangular
/// actions [[rho_T, B],[0, rho_S]] with the B's solved from the relations,
/// modulo coboundaries rho_T(g) h - h rho_S(g).
struct Ext1Result {
    size_t dim;
    std::vector<ModuleRep> middle_terms; // one representative per class
};

inline Ext1Result ext1(const ModuleRep& s, const ModuleRep& t) {
    const DoubleData& dd = *s.algebra;
    const size_t dT = t.dim, dS = s.dim, nb = dT * dS, unknowns = 4 * nb;

    // linear system: off-diagonal block of every relation must vanish
    std::vector<Vec> rows;
    for (const auto& rel : dd.pres.relations) {
        // off-diag block of word evaluation is linear in the B's
        std::vector<Vec> block(nb, Vec(unknowns)); // block[p*dS+q][unknown]
        for (const auto& [w, coef] : rel.terms) {
            // prefix products in T, suffix products in S
            std::vector<Mat> pre(w.size() + 1), suf(w.size() + 1);
            pre[0] = Mat::identity(dT);
            for (size_t i = 0; i < w.size(); ++i) pre[i + 1] = pre[i] * t.gen[size_t(w[i])];
            suf[w.size()] = Mat::identity(dS);
            for (size_t i = w.size(); i-- > 0;) suf[i] = s.gen[size_t(w[i])] * suf[i + 1];
            for (size_t i = 0; i < w.size(); ++i) {
                size_t gidx = size_t(w[i]);
                for (size_t p = 0; p < dT; ++p)
                    for (size_t r = 0; r < dT; ++r) {
                        if (pre[i](p, r).is_zero()) continue;
                        for (size_t c = 0; c < dS; ++c)
                            for (size_t q = 0; q < dS; ++q) {
                                if (suf[i + 1](c, q).is_zero()) continue;
                                block[p * dS + q][(gidx * dT + r) * dS + c] +=
                                    coef * pre[i](p, r) * suf[i + 1](c, q);
                            }
                    }
            }
        }
        for (auto& row : block) rows.push_back(std::move(row));
    }
    Mat sys(rows.size(), unknowns);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < unknowns; ++c) sys(r, c) = rows[r][c];
    auto cocycles = kernel_basis(std::move(sys));

    // coboundaries: B_g = rho_T(g) h - h rho_S(g)
    Span span(unknowns);
    for (size_t hr = 0; hr < dT; ++hr)
        for (size_t hc = 0; hc < dS; ++hc) {
            Vec v(unknowns);
            for (size_t gidx = 0; gidx < 4; ++gidx) {
                for (size_t p = 0; p < dT; ++p)
                    v[(gidx * dT + p) * dS + hc] += t.gen[gidx](p, hr);
                for (size_t q = 0; q < dS; ++q)
                    v[(gidx * dT + hr) * dS + q] -= s.gen[gidx](hc, q);
            }
            span.add(std::move(v));
        }

    Ext1Result out{0, {}};
    for (const auto& z : cocycles) {
        if (!span.add(z)) continue;
        ++out.dim;
        // assemble a middle term for this representative
        std::vector<Mat> gens;
        for (size_t gidx = 0; gidx < 4; ++gidx) {
            Mat e(dT + dS, dT + dS);
            for (size_t p = 0; p < dT; ++p)
                for (size_t q = 0; q < dT; ++q) e(p, q) = t.gen[gidx](p, q);
            for (size_t p = 0; p < dS; ++p)
                for (size_t q = 0; q < dS; ++q) e(dT + p, dT + q) = s.gen[gidx](p, q);
            for (size_t p = 0; p < dT; ++p)
                for (size_t q = 0; q < dS; ++q) e(p, dT + q) = z[(gidx * dT + p) * dS + q];
            gens.push_back(std::move(e));
        }
        out.middle_terms.push_back(
            module_from_generators(dd, std::move(gens), "E(" + s.name + "," + t.name + ")"));
    }
    return out;
}

// ---------------------------------------------------------------------------
// the three families of 2-dimensional non-simple indecomposables
// ---------------------------------------------------------------------------

enum class TwoDimFamily { plus, minus, plus_minus };

/// M_l^+ (sub K_{chi^l}, top K_{chi^{l+1}}) and M_l^- (top K_{chi^{l-1}})
/// with the printed entries.  The printed +- family (top K_{chi^{l+3}},
/// [b] entry theta) violates ba = xi ab and is rejected by the certifier;
/// see pm_family_analysis for the nonexistence certificate.
inline ModuleRep two_dim_nonsimple(const DoubleData& dd, int l, TwoDimFamily fam) {
    const Scalar xi = Scalar::xi();
    const Scalar& th = dd.consts.theta;
    int lm = ((l % 6) + 6) % 6;
    int top = fam == TwoDimFamily::plus ? lm + 1 : (fam == TwoDimFamily::minus ? lm - 1 : lm + 3);
    Scalar la = xi_power(lm), ma = xi_power(top);
    Scalar lg = Scalar(lm % 2 == 0 ? 1 : -1), mg = Scalar(((top % 6) + 6) % 6 % 2 == 0 ? 1 : -1);
    Mat a(2, 2), b(2, 2), g(2, 2), x(2, 2);
    a(0, 0) = la;
    a(1, 1) = ma;
    g(0, 0) = lg;
    g(1, 1) = mg;
    std::string suffix;
    if (fam == TwoDimFamily::plus) {
        b(0, 1) = -th.pow(3);
        x(0, 1) = Scalar(2) * xi * xi_power(2 * lm);
        suffix = "+";
    } else if (fam == TwoDimFamily::minus) {
        x(0, 1) = Scalar(1);
        suffix = "-";
    } else {
        b(0, 1) = th;
        x(0, 1) = Scalar(2) * xi * xi_power(2 * lm);
        suffix = "pm";
    }
    return module_from_generators(dd, {a, b, g, x}, "M" + std::to_string(lm) + suffix);
}

/// The 12 existing two-dimensional non-simple indecomposables (+ and -
/// families; the printed +- family does not exist as a D-module).
inline std::vector<ModuleRep> all_two_dim_nonsimple(const DoubleData& dd) {
    std::vector<ModuleRep> out;
    for (int l = 0; l < 6; ++l)
        for (TwoDimFamily f : {TwoDimFamily::plus, TwoDimFamily::minus})
            out.push_back(two_dim_nonsimple(dd, l, f));
    return out;
}

/// Nonexistence certificate for the printed M_l^{+-} family: the residual of
/// ba - xi ab on the printed matrices (nonzero), and the exact dimension of
/// Ext^1(K_{chi^{l+3}}, K_{chi^l}) (zero, so no non-split extension of any
/// shape exists either).
struct PmFamilyAnalysis {
    Scalar ba_residual;   // (1,2) entry of ba - xi ab on the printed matrices
    size_t ext_dim;       // dim Ext^1(K_{chi^{l+3}}, K_{chi^l})
};

inline PmFamilyAnalysis pm_family_analysis(const DoubleData& dd, int l) {
    const Scalar xi = Scalar::xi();
    const Scalar& th = dd.consts.theta;
    int lm = ((l % 6) + 6) % 6;
    Mat a(2, 2), b(2, 2);
    a(0, 0) = xi_power(lm);
    a(1, 1) = xi_power(lm + 3);
    b(0, 1) = th;
    Mat res = b * a - xi * (a * b);
    PmFamilyAnalysis out;
    out.ba_residual = res(0, 1);
    out.ext_dim = ext1(character_module(dd, lm + 3), character_module(dd, lm)).dim;
    return out;
}

/// Everything known about the 2-dimensional non-simple indecomposables with
/// socle K_{chi^l}: the two existing families, the per-top extension
/// dimensions certifying exhaustiveness, and the nonexistence certificate
/// for the printed third family.
struct TwoDimClassification {
    std::vector<ModuleRep> modules;  // M_l^+ and M_l^-
    std::vector<size_t> ext_dims;    // dim Ext^1(K_{chi^m}, K_{chi^l}), m = 0..5
    PmFamilyAnalysis pm;             // why there is no M_l^{+-}
};

inline TwoDimClassification classify_two_dim_nonsimple(const DoubleData& dd, int l) {
    TwoDimClassification out;
    out.modules.push_back(two_dim_nonsimple(dd, l, TwoDimFamily::plus));
    out.modules.push_back(two_dim_nonsimple(dd, l, TwoDimFamily::minus));
    for (int m = 0; m < 6; ++m)
        out.ext_dims.push_back(
            ext1(character_module(dd, m), character_module(dd, l)).dim);
    out.pm = pm_family_analysis(dd, l);
    return out;
}

// ---------------------------------------------------------------------------
// Ext quiver and representation type
// ---------------------------------------------------------------------------

/// chi^l(a) + xi^{-2} chi^m(a) coefficient test used by the printed case
/// analysis: mu(a) = xi^5 lambda(a) forces alpha = 0.
inline Scalar two_dim_constraint_coefficient(int l, int m) {
    return xi_power(l) + xi_power(-2) * xi_power(m);
}

inline QuiverGraph ext_quiver(const DoubleData& dd, const std::vector<ModuleRep>& simples) {
    QuiverGraph q;
    for (const auto& s : simples) {
        if (s.algebra != &dd) throw Error("DimensionMismatch", "simples from another algebra");
        q.vertices.push_back(s.name);
    }
    for (size_t i = 0; i < simples.size(); ++i)
        for (size_t j = 0; j < simples.size(); ++j) {
            // arrows i -> j with multiplicity dim Ext^1(S_i, S_j)
            size_t d = ext1(simples[i], simples[j]).dim;
            if (d) q.arrows[{i, j}] = d;
        }
    return q;
}

} // namespace hopfalg

#endif

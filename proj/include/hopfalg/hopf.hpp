#ifndef HOPFALG_HOPF_HPP
#define HOPFALG_HOPF_HPP

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "hopfalg/parallel.hpp"
#include "hopfalg/tensors.hpp"

namespace hopfalg {

enum class HopfLevel { algebra = 0, coalgebra = 1, bialgebra = 2, hopf = 3 };

struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    std::string witness;       // on failure: basis indices and nonzero discrepancy
    bool informational = false; // recorded (e.g. erratum candidates) but not gating
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass && !c.informational) return false;
        return true;
    }
    void add(std::string axiom, bool pass, std::string witness = "") {
        checks.push_back({std::move(axiom), pass, std::move(witness), false});
    }
    void add_info(std::string axiom, bool pass, std::string witness = "") {
        checks.push_back({std::move(axiom), pass, std::move(witness), true});
    }
    void merge(const AxiomReport& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    }
    std::string first_failure() const {
        for (const auto& c : checks)
            if (!c.pass && !c.informational) return c.axiom + " [" + c.witness + "]";
        return "";
    }
};

/// Structure-constant record of a finite-dimensional algebra/coalgebra/
/// bialgebra/Hopf algebra.  All verification is exact.
struct FinDimHopf {
    size_t dim = 0;
    std::vector<std::string> basis;
    Vec unit;         // coordinates of 1
    Vec counit;       // counit covector
    MultTensor mult;
    ComultTensor comult;
    Mat antipode;     // dim x dim; column j = S(e_j)
    int certified = -1; // highest verified HopfLevel, -1 = none

    explicit FinDimHopf(size_t d = 0)
        : dim(d), basis(d), unit(d), counit(d), mult(d), comult(d), antipode(d, d) {}

    bool certified_at(HopfLevel l) const { return certified >= int(l); }
    void require_certified(HopfLevel l) const {
        if (!certified_at(l)) throw Error("NotCertified", "operation requires verified structure");
    }

    Vec basis_vec(size_t i) const {
        Vec v(dim);
        v[i] = Scalar(1);
        return v;
    }
    size_t basis_index(const std::string& label) const {
        for (size_t i = 0; i < dim; ++i)
            if (basis[i] == label) return i;
        throw Error("UnknownBasisLabel", label);
    }
};

// ---------------------------------------------------------------------------
// element operations
// ---------------------------------------------------------------------------

inline Vec el_mult(const FinDimHopf& h, const Vec& x, const Vec& y) {
    if (x.size() != h.dim || y.size() != h.dim)
        throw Error("DimensionMismatch", "element product");
    return h.mult.apply(x, y);
}

inline SVec el_comult(const FinDimHopf& h, const Vec& x) {
    if (x.size() != h.dim) throw Error("DimensionMismatch", "element coproduct");
    return h.comult.apply(x);
}

inline Vec el_antipode(const FinDimHopf& h, const Vec& x) { return h.antipode.apply(x); }

inline Scalar el_counit(const FinDimHopf& h, const Vec& x) {
    Scalar r;
    for (size_t i = 0; i < h.dim; ++i) r += h.counit[i] * x[i];
    return r;
}

inline bool is_grouplike(const FinDimHopf& h, const Vec& g) {
    if (!(el_counit(h, g) == Scalar(1))) return false;
    SVec lhs = el_comult(h, g);
    SVec rhs = SVec::from_dense(tensor_vec(g, g));
    rhs.normalize();
    return lhs.terms == rhs.terms;
}

// ---------------------------------------------------------------------------
// axiom verification
// ---------------------------------------------------------------------------

namespace detail {

/// Dense accumulator with a touched-index list; avoids re-zeroing.
struct Accum {
    std::vector<Scalar> val;
    std::vector<size_t> touched;
    explicit Accum(size_t n) : val(n) {}
    void add(size_t i, const Scalar& c) {
        if (val[i].is_zero() && !c.is_zero()) touched.push_back(i);
        val[i] += c;
    }
    void sub(size_t i, const Scalar& c) {
        if (val[i].is_zero() && !c.is_zero()) touched.push_back(i);
        val[i] -= c;
    }
    size_t first_nonzero() const {
        size_t best = SIZE_MAX;
        for (size_t i : touched)
            if (!val[i].is_zero() && i < best) best = i;
        return best;
    }
    void reset() {
        for (size_t i : touched) val[i] = Scalar();
        touched.clear();
    }
};

struct Failure {
    size_t index = SIZE_MAX;
    std::string witness;
};

inline void merge_failure(Failure& into, const Failure& from) {
    if (from.index < into.index) into = from;
}

} // namespace detail

/// Exact axiom check by full contraction over basis indices, up to `level`.
/// Failing entries carry a witnessing basis tuple and discrepancy.
inline AxiomReport verify_hopf(FinDimHopf& h, HopfLevel level) {
    AxiomReport report;
    const size_t n = h.dim;
    std::mutex mtx;

    // --- algebra: associativity ---
    {
        detail::Failure fail;
        parallel_blocks(n, [&](size_t lo, size_t hi, int) {
            detail::Accum acc(n);
            detail::Failure local;
            for (size_t i = lo; i < hi && local.index == SIZE_MAX; ++i)
                for (size_t j = 0; j < n && local.index == SIZE_MAX; ++j) {
                    const SVec& rij = h.mult.row(i, j);
                    for (size_t k = 0; k < n; ++k) {
                        acc.reset();
                        for (const auto& [l, c] : rij.terms)
                            for (const auto& [t, c2] : h.mult.row(l, k).terms)
                                acc.add(t, c * c2);
                        for (const auto& [l, c] : h.mult.row(j, k).terms)
                            for (const auto& [t, c2] : h.mult.row(i, l).terms)
                                acc.sub(t, c * c2);
                        size_t bad = acc.first_nonzero();
                        if (bad != SIZE_MAX) {
                            local.index = (i * n + j) * n + k;
                            local.witness = "(e" + std::to_string(i) + ",e" + std::to_string(j) +
                                            ",e" + std::to_string(k) + ") coeff of e" +
                                            std::to_string(bad) + ": " + acc.val[bad].str();
                            break;
                        }
                    }
                }
            std::lock_guard<std::mutex> g(mtx);
            detail::merge_failure(fail, local);
        });
        report.add("associativity", fail.index == SIZE_MAX, fail.witness);
    }

    // --- algebra: unit law ---
    {
        detail::Failure fail;
        detail::Accum acc(n);
        for (size_t j = 0; j < n && fail.index == SIZE_MAX; ++j) {
            for (int side = 0; side < 2 && fail.index == SIZE_MAX; ++side) {
                acc.reset();
                for (size_t i = 0; i < n; ++i) {
                    if (h.unit[i].is_zero()) continue;
                    const SVec& r = side == 0 ? h.mult.row(i, j) : h.mult.row(j, i);
                    for (const auto& [k, c] : r.terms) acc.add(k, h.unit[i] * c);
                }
                acc.sub(j, Scalar(1));
                size_t bad = acc.first_nonzero();
                if (bad != SIZE_MAX) {
                    fail.index = j;
                    fail.witness = std::string(side == 0 ? "1*e" : "e") + std::to_string(j) +
                                   (side == 0 ? "" : "*1") + " coeff of e" + std::to_string(bad) +
                                   ": " + acc.val[bad].str();
                }
            }
        }
        report.add("unit", fail.index == SIZE_MAX, fail.witness);
    }

    if (level >= HopfLevel::coalgebra) {
        // --- coassociativity ---
        detail::Failure fail;
        parallel_blocks(n, [&](size_t lo, size_t hi, int) {
            detail::Failure local;
            std::vector<std::pair<uint64_t, Scalar>> lhs, rhs;
            for (size_t i = lo; i < hi && local.index == SIZE_MAX; ++i) {
                lhs.clear();
                rhs.clear();
                for (const auto& t : h.comult.row(i)) {
                    for (const auto& u : h.comult.row(t.j))
                        lhs.emplace_back((uint64_t(u.j) * n + u.k) * n + t.k, t.c * u.c);
                    for (const auto& u : h.comult.row(t.k))
                        rhs.emplace_back((uint64_t(t.j) * n + u.j) * n + u.k, t.c * u.c);
                }
                auto norm = [](std::vector<std::pair<uint64_t, Scalar>>& v) {
                    std::sort(v.begin(), v.end(),
                              [](const auto& a, const auto& b) { return a.first < b.first; });
                    std::vector<std::pair<uint64_t, Scalar>> out;
                    for (auto& e : v) {
                        if (!out.empty() && out.back().first == e.first)
                            out.back().second += e.second;
                        else
                            out.push_back(std::move(e));
                    }
                    out.erase(std::remove_if(out.begin(), out.end(),
                                             [](const auto& e) { return e.second.is_zero(); }),
                              out.end());
                    v = std::move(out);
                };
                norm(lhs);
                norm(rhs);
                if (lhs != rhs) {
                    local.index = i;
                    local.witness = "Delta^2 mismatch at e" + std::to_string(i);
                }
            }
            std::lock_guard<std::mutex> g(mtx);
            detail::merge_failure(fail, local);
        });
        report.add("coassociativity", fail.index == SIZE_MAX, fail.witness);

        // --- counit law ---
        detail::Failure cfail;
        detail::Accum acc(n);
        for (size_t i = 0; i < n && cfail.index == SIZE_MAX; ++i) {
            for (int side = 0; side < 2 && cfail.index == SIZE_MAX; ++side) {
                acc.reset();
                for (const auto& t : h.comult.row(i))
                    acc.add(side == 0 ? t.k : t.j, t.c * h.counit[side == 0 ? t.j : t.k]);
                acc.sub(i, Scalar(1));
                size_t bad = acc.first_nonzero();
                if (bad != SIZE_MAX) {
                    cfail.index = i;
                    cfail.witness = "counit side " + std::to_string(side) + " at e" +
                                    std::to_string(i) + " coeff of e" + std::to_string(bad) +
                                    ": " + acc.val[bad].str();
                }
            }
        }
        report.add("counit", cfail.index == SIZE_MAX, cfail.witness);
    }

    if (level >= HopfLevel::bialgebra) {
        // --- Delta(xy) = Delta(x)Delta(y), Delta(1) = 1 (x) 1 ---
        detail::Failure fail;
        parallel_blocks(n, [&](size_t lo, size_t hi, int) {
            detail::Accum acc(n * n);
            detail::Failure local;
            for (size_t i = lo; i < hi && local.index == SIZE_MAX; ++i) {
                const auto& di = h.comult.row(i);
                for (size_t j = 0; j < n; ++j) {
                    acc.reset();
                    for (const auto& [k, c] : h.mult.row(i, j).terms)
                        for (const auto& t : h.comult.row(k)) acc.add(t.j * n + t.k, c * t.c);
                    for (const auto& a : di)
                        for (const auto& b : h.comult.row(j)) {
                            Scalar cc = a.c * b.c;
                            for (const auto& [u, cu] : h.mult.row(a.j, b.j).terms) {
                                Scalar cuu = cc * cu;
                                for (const auto& [v, cv] : h.mult.row(a.k, b.k).terms)
                                    acc.sub(u * n + v, cuu * cv);
                            }
                        }
                    size_t bad = acc.first_nonzero();
                    if (bad != SIZE_MAX) {
                        local.index = i * n + j;
                        local.witness = "Delta(e" + std::to_string(i) + "*e" + std::to_string(j) +
                                        ") at (e" + std::to_string(bad / n) + ",e" +
                                        std::to_string(bad % n) + "): " + acc.val[bad].str();
                        break;
                    }
                }
            }
            std::lock_guard<std::mutex> g(mtx);
            detail::merge_failure(fail, local);
        });
        bool unit_ok = [&] {
            SVec lhs = h.comult.apply(h.unit);
            SVec rhs = SVec::from_dense(tensor_vec(h.unit, h.unit));
            rhs.normalize();
            return lhs.terms == rhs.terms;
        }();
        bool counit_ok = [&] {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    Scalar lhs;
                    for (const auto& [k, c] : h.mult.row(i, j).terms) lhs += c * h.counit[k];
                    if (!(lhs == h.counit[i] * h.counit[j])) return false;
                }
            return el_counit(h, h.unit) == Scalar(1);
        }();
        report.add("bialgebra_compat", fail.index == SIZE_MAX, fail.witness);
        report.add("bialgebra_unit_counit", unit_ok && counit_ok,
                   unit_ok ? (counit_ok ? "" : "counit not multiplicative") : "Delta(1) != 1(x)1");
    }

    if (level >= HopfLevel::hopf) {
        // --- antipode convolution laws ---
        detail::Failure fail;
        detail::Accum acc(n);
        for (size_t i = 0; i < n && fail.index == SIZE_MAX; ++i) {
            for (int side = 0; side < 2 && fail.index == SIZE_MAX; ++side) {
                acc.reset();
                for (const auto& t : h.comult.row(i)) {
                    // side 0: S(e_j) e_k ; side 1: e_j S(e_k)
                    size_t sarg = side == 0 ? t.j : t.k;
                    size_t other = side == 0 ? t.k : t.j;
                    for (size_t l = 0; l < n; ++l) {
                        const Scalar& sl = h.antipode(l, sarg);
                        if (sl.is_zero()) continue;
                        const SVec& r = side == 0 ? h.mult.row(l, other) : h.mult.row(other, l);
                        for (const auto& [u, c] : r.terms) acc.add(u, t.c * sl * c);
                    }
                }
                for (size_t u = 0; u < n; ++u)
                    if (!h.unit[u].is_zero()) acc.sub(u, h.counit[i] * h.unit[u]);
                size_t bad = acc.first_nonzero();
                if (bad != SIZE_MAX) {
                    fail.index = i;
                    fail.witness = std::string("convolution ") + (side == 0 ? "S*id" : "id*S") +
                                   " at e" + std::to_string(i) + " coeff of e" +
                                   std::to_string(bad) + ": " + acc.val[bad].str();
                }
            }
        }
        report.add("antipode", fail.index == SIZE_MAX, fail.witness);
    }

    if (report.all_pass()) h.certified = std::max(h.certified, int(level));
    return report;
}

// ---------------------------------------------------------------------------
// dual / variants / Drinfeld double
// ---------------------------------------------------------------------------

inline FinDimHopf dual_hopf(const FinDimHopf& h) {
    h.require_certified(HopfLevel::hopf);
    FinDimHopf d(h.dim);
    for (size_t i = 0; i < h.dim; ++i) d.basis[i] = h.basis[i] + "*";
    d.unit = h.counit;
    d.counit = h.unit;
    for (const auto& [i, j, k, c] : h.comult.entries()) d.mult.add(j, k, i, c);
    for (const auto& [i, j, k, c] : h.mult.entries()) d.comult.add(k, i, j, c);
    d.mult.normalize();
    d.comult.normalize();
    d.antipode = h.antipode.transpose();
    d.certified = h.certified;
    return d;
}

enum class HopfVariant { op, cop, bop };

inline FinDimHopf variant(const FinDimHopf& h, HopfVariant which) {
    h.require_certified(HopfLevel::hopf);
    FinDimHopf v(h.dim);
    v.basis = h.basis;
    v.unit = h.unit;
    v.counit = h.counit;
    v.mult = (which == HopfVariant::cop) ? h.mult : h.mult.opposite();
    v.comult = (which == HopfVariant::op) ? h.comult : h.comult.flipped();
    if (which == HopfVariant::bop) {
        v.antipode = h.antipode;
    } else {
        auto inv = inverse(h.antipode);
        if (!inv) throw Error("SingularAntipode", "antipode not invertible");
        v.antipode = *inv;
    }
    v.certified = h.certified;
    return v;
}

/// Drinfeld double D(H) = H^{*cop} (x) H: tensor-product coalgebra, algebra
/// twisted through the evaluation pairing against Delta^2 on both legs.
/// Basis order: index = dim(H) * (dual index) + (H index).
inline FinDimHopf drinfeld_double(const FinDimHopf& h) {
    h.require_certified(HopfLevel::hopf);
    auto sinv_opt = inverse(h.antipode);
    if (!sinv_opt) throw Error("SingularAntipode", "antipode not invertible");
    const Mat sinv = *sinv_opt;
    const size_t n = h.dim;
    const size_t N = n * n;

    FinDimHopf d(N);
    for (size_t p = 0; p < n; ++p)
        for (size_t a = 0; a < n; ++a) d.basis[n * p + a] = h.basis[p] + "*⊗" + h.basis[a];

    // unit = counit_H (x) 1_H, counit = unit_H (x) counit_H
    for (size_t p = 0; p < n; ++p)
        for (size_t a = 0; a < n; ++a) {
            d.unit[n * p + a] = h.counit[p] * h.unit[a];
            d.counit[n * p + a] = h.unit[p] * h.counit[a];
        }

    // coalgebra: Delta_{H*cop}(e^p) = sum m[u][v][p] e^v (x) e^u, tensored
    // with Delta_H on the second leg
    std::vector<std::vector<std::tuple<size_t, size_t, Scalar>>> dualco(n);
    for (const auto& [u, v, p, c] : h.mult.entries()) dualco[p].emplace_back(v, u, c);
    for (size_t p = 0; p < n; ++p)
        for (size_t a = 0; a < n; ++a)
            for (const auto& [pv, pu, pc] : dualco[p])
                for (const auto& t : h.comult.row(a))
                    d.comult.add(n * p + a, n * pv + t.j, n * pu + t.k, pc * t.c);
    d.comult.normalize();

    // Delta^2 on H: triples (r,s,t) per basis element
    std::vector<std::vector<std::tuple<size_t, size_t, size_t, Scalar>>> d2(n);
    for (size_t a = 0; a < n; ++a)
        for (const auto& t : h.comult.row(a))
            for (const auto& u : h.comult.row(t.j))
                d2[a].emplace_back(u.j, u.k, t.k, t.c * u.c);

    // Delta^2 on H*: triples (u,v,w) with coefficient = coeff of e_q in
    // e_u e_v e_w, grouped by the leg that pairs against a_{(1)}
    std::vector<std::vector<std::vector<std::tuple<size_t, size_t, Scalar>>>> d2dual_by_w(n);
    for (size_t q = 0; q < n; ++q) d2dual_by_w[q].resize(n);
    for (size_t u = 0; u < n; ++u)
        for (size_t v = 0; v < n; ++v)
            for (const auto& [l, c1] : h.mult.row(u, v).terms)
                for (size_t w = 0; w < n; ++w)
                    for (const auto& [q, c2] : h.mult.row(l, w).terms)
                        d2dual_by_w[q][w].emplace_back(u, v, c1 * c2);

    // dual-side products: e^p e^v = sum_z d[z][p][v] e^z
    MultTensor dualmult(n);
    for (const auto& [z, p, v, c] : h.comult.entries()) dualmult.add(p, v, z, c);
    dualmult.normalize();

    // (p (x) a)(q (x) b) = <q_(3), a_(1)> <q_(1), S^{-1}(a_(3))> p q_(2) (x) a_(2) b
    parallel_blocks(N, [&](size_t lo, size_t hi, int) {
        for (size_t row = lo; row < hi; ++row) {
            size_t p = row / n, a = row % n;
            for (size_t q = 0; q < n; ++q) {
                SVec left; // coefficient of (z, y) accumulated per b below
                for (const auto& [r, s, t, c2] : d2[a]) {
                    for (const auto& [u, v, c1] : d2dual_by_w[q][r]) {
                        const Scalar& pair2 = sinv(u, t);
                        if (pair2.is_zero()) continue;
                        Scalar coeff = c1 * c2 * pair2;
                        for (const auto& [z, cz] : dualmult.row(p, v).terms)
                            left.add(z * n + s, coeff * cz);
                    }
                }
                left.normalize();
                for (size_t b = 0; b < n; ++b)
                    for (const auto& [zs, c] : left.terms) {
                        size_t z = zs / n, s = zs % n;
                        for (const auto& [y, cy] : h.mult.row(s, b).terms)
                            d.mult.add(row, n * q + b, n * z + y, c * cy);
                    }
            }
        }
    });
    d.mult.normalize();

    // S_D(p (x) a) = (eps (x) S(a)) *_D (S_{H*cop}(p) (x) 1)
    for (size_t p = 0; p < n; ++p) {
        Vec right(N);
        for (size_t u = 0; u < n; ++u) {
            const Scalar& c = sinv(p, u);
            if (c.is_zero()) continue;
            for (size_t a = 0; a < n; ++a)
                if (!h.unit[a].is_zero()) right[n * u + a] += c * h.unit[a];
        }
        for (size_t a = 0; a < n; ++a) {
            Vec leftv(N);
            for (size_t pp = 0; pp < n; ++pp) {
                if (h.counit[pp].is_zero()) continue;
                for (size_t y = 0; y < n; ++y) {
                    const Scalar& sy = h.antipode(y, a);
                    if (!sy.is_zero()) leftv[n * pp + y] += h.counit[pp] * sy;
                }
            }
            Vec img = d.mult.apply(leftv, right);
            for (size_t t = 0; t < N; ++t) d.antipode(t, n * p + a) = img[t];
        }
    }
    return d;
}

// ---------------------------------------------------------------------------
// skew-primitives
// ---------------------------------------------------------------------------

/// Basis of {v : Delta(v) = v (x) g + h (x) v} for group-likes g, h.
inline std::vector<Vec> skew_primitives(const FinDimHopf& h, const Vec& g, const Vec& hh) {
    if (!is_grouplike(h, g) || !is_grouplike(h, hh))
        throw Error("NotGrouplike", "skew_primitives requires group-like arguments");
    const size_t n = h.dim;
    Mat sys(n * n, n);
    for (size_t i = 0; i < n; ++i)
        for (const auto& t : h.comult.row(i)) sys(t.j * n + t.k, i) += t.c;
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            sys(i * n + k, i) -= g[k];         // v (x) g
            sys(k * n + i, i) -= hh[k];        // h (x) v
        }
    return kernel_basis(std::move(sys));
}

/// Same space with the trivial line K(g - h) quotiented away.
inline size_t skew_primitives_nontrivial_dim(const FinDimHopf& h, const Vec& g, const Vec& hh) {
    auto all = skew_primitives(h, g, hh);
    Span sp(h.dim);
    Vec triv(h.dim);
    bool nonzero = false;
    for (size_t i = 0; i < h.dim; ++i) {
        triv[i] = g[i] - hh[i];
        nonzero = nonzero || !triv[i].is_zero();
    }
    if (nonzero) sp.add(triv);
    size_t extra = 0;
    for (auto& v : all)
        if (sp.add(v)) ++extra;
    return extra;
}

} // namespace hopfalg

#endif

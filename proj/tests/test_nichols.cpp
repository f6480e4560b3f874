#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "hopfalg/nichols.hpp"

using namespace hopfalg;

namespace {

const DoubleData& dd() {
    static std::unique_ptr<DoubleData> d = build_D(ThetaSign::plus, /*certify=*/false);
    return *d;
}

BraidedSpace braiding_V(int i, int j) { return braiding_of(to_yd(two_dim_simple(dd(), i, j))); }

} // namespace

TEST_CASE("Matsumoto lift basics") {
    BraidedSpace b = braiding_V(3, 1);
    // identity permutation -> identity matrix
    CHECK(braid_lift(b.braiding, 2, 3, {1, 2, 3}) == Mat::identity(8));
    // n = 2 transposition -> the braiding itself
    CHECK(braid_lift(b.braiding, 2, 2, {2, 1}) == b.braiding);
    // two reduced words of the longest element of S_3 agree (braid relation)
    Mat left = braid_lift(b.braiding, 2, 3, {3, 2, 1}, false);
    Mat right = braid_lift(b.braiding, 2, 3, {3, 2, 1}, true);
    CHECK(left == right);
}

TEST_CASE("factorized symmetrizer equals the n!-sum oracle for n <= 4") {
    for (auto [i, j] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {1, 1}, {0, 1}}) {
        BraidedSpace b = braiding_V(i, j);
        for (size_t n = 2; n <= 4; ++n) {
            Mat brute = quantum_symmetrizer_bruteforce(b.braiding, 2, n);
            Mat fact = quantum_symmetrizer(b.braiding, 2, n);
            INFO("V", i, j, " degree ", n);
            CHECK(brute == fact);
        }
    }
    // scalar braidings
    for (int k : {0, 1}) {
        BraidedSpace b = braiding_of(to_yd(character_module(dd(), k)));
        for (size_t n = 2; n <= 4; ++n)
            CHECK(quantum_symmetrizer_bruteforce(b.braiding, 1, n) ==
                  quantum_symmetrizer(b.braiding, 1, n));
    }
}

TEST_CASE("scalar braidings: divided powers vs exterior algebra") {
    // trivial braiding (+1): S_n = n! != 0, rank 1 at every degree
    BraidedSpace b0 = braiding_of(to_yd(character_module(dd(), 0)));
    NicholsReport r0 = nichols_ranks(b0.braiding, 1, 5);
    CHECK(r0.verdict == NicholsVerdict::undecided);
    for (size_t n = 0; n <= 5; ++n) CHECK(r0.ranks[n] == 1);
    // braiding -1: S_2 = 0, exterior algebra of dimension 2
    BraidedSpace b1 = braiding_of(to_yd(character_module(dd(), 1)));
    NicholsReport r1 = nichols_ranks(b1.braiding, 1, 4);
    CHECK(r1.verdict == NicholsVerdict::finite);
    CHECK(r1.total_dim == 2);
    CHECK(r1.ranks[1] == 1);
    CHECK(r1.ranks[2] == 0);
    CHECK(r1.palindromic);
}

TEST_CASE("rank sequences of the four finite two-dimensional cases") {
    for (auto [i, j] : std::vector<std::pair<int, int>>{{3, 1}, {3, 5}, {2, 2}, {2, 4}}) {
        BraidedSpace b = braiding_V(i, j);
        NicholsReport rep = nichols_ranks(b.braiding, 2, 6, b.name);
        INFO(b.name);
        CHECK(rep.verdict == NicholsVerdict::finite);
        CHECK(rep.total_dim == 6);
        REQUIRE(rep.ranks.size() >= 5);
        CHECK(rep.ranks[0] == 1);
        CHECK(rep.ranks[1] == 2);
        CHECK(rep.ranks[2] == 2);
        CHECK(rep.ranks[3] == 1);
        CHECK(rep.ranks[4] == 0);
        CHECK(rep.palindromic);
    }
}

TEST_CASE("degree-2 kernels match the printed relation sets") {
    const Scalar xi = Scalar::xi();
    // V_{3,1}: span{v1 (x) v1, v1 (x) v2 - xi^2 v2 (x) v1}
    {
        auto ker = degree_kernel(braiding_V(3, 1).braiding, 2, 2);
        REQUIRE(ker.size() == 2);
        Span sp(4);
        for (const auto& k : ker) sp.add(k);
        Vec r1(4), r2(4);
        r1[0] = Scalar(1);
        r2[1] = Scalar(1);
        r2[2] = -xi.pow(2);
        CHECK(sp.contains(r1));
        CHECK(sp.contains(r2));
    }
    // V_{2,2}: span{v1 (x) v1 - xi^2 v2 (x) v2, v1 (x) v2 - v2 (x) v1}
    {
        auto ker = degree_kernel(braiding_V(2, 2).braiding, 2, 2);
        REQUIRE(ker.size() == 2);
        Span sp(4);
        for (const auto& k : ker) sp.add(k);
        Vec r1(4), r2(4);
        r1[0] = Scalar(1);
        r1[3] = -xi.pow(2);
        r2[1] = Scalar(1);
        r2[2] = Scalar(-1);
        CHECK(sp.contains(r1));
        CHECK(sp.contains(r2));
    }
    // degree-1 kernel is always trivial
    CHECK(degree_kernel(braiding_V(3, 1).braiding, 2, 1).empty());
}

TEST_CASE("relation membership") {
    BraidedSpace b31 = braiding_V(3, 1);
    Vec v222(8);
    v222[7] = Scalar(1); // v2 v2 v2
    CHECK(relation_membership(b31.braiding, 2, 3, v222));
    Vec v21(4);
    v21[2] = Scalar(1); // v2 v1 is a basis monomial, not a relation
    CHECK(!relation_membership(b31.braiding, 2, 2, v21));
    BraidedSpace b24 = braiding_V(2, 4);
    Vec v111(8);
    v111[0] = Scalar(1); // v1^3 = 0 in B(V_{2,4})
    CHECK(relation_membership(b24.braiding, 2, 3, v111));
}

TEST_CASE("braided coproduct components") {
    BraidedSpace b31 = braiding_V(3, 1);
    const Scalar xi = Scalar::xi();
    // (1,1) component of v1 (x) v2: xi^2 v1 (x) v2 + xi^2 v2 (x) v1
    Vec x(4);
    x[1] = Scalar(1);
    Vec comp = braided_coproduct_component(b31.braiding, 2, 1, 1).apply(x);
    Vec expect(4);
    expect[1] = xi.pow(2);
    expect[2] = xi.pow(2);
    CHECK(comp == expect);
    // (n, 0) component is the identity
    Vec y(8);
    y[3] = Scalar(1);
    CHECK(braided_coproduct_component(b31.braiding, 2, 3, 0).apply(y) == y);
}

TEST_CASE("cubic relations are primitive in the quotient") {
    // v2^3 in B(V_{3,1}) and B(V_{3,5}); v1^3 in B(V_{2,2}) and B(V_{2,4})
    for (auto [i, j, mono] : std::vector<std::tuple<int, int, size_t>>{
             {3, 1, 7}, {3, 5, 7}, {2, 2, 0}, {2, 4, 0}}) {
        BraidedSpace b = braiding_V(i, j);
        Vec r(8);
        r[mono] = Scalar(1);
        INFO(b.name);
        Span sp(8);
        for (const auto& k : degree_kernel(b.braiding, 2, 3)) sp.add(k);
        CHECK(sp.contains(r));
        CHECK(is_primitive_in_quotient(b.braiding, 2, 3, r));
    }
    // every degree-2 kernel element is braided-primitive outright
    BraidedSpace b = braiding_V(3, 1);
    for (const auto& k : degree_kernel(b.braiding, 2, 2))
        CHECK(is_primitive_in_quotient(b.braiding, 2, 2, k));
}

TEST_CASE("presented bases cross-validate the symmetrizer ranks") {
    const Scalar xi = Scalar::xi();
    const int V1 = 0, V2 = 1;
    auto qcomm = [&](const Scalar& q) {
        return NCPoly::word({V1, V2}) - q * NCPoly::word({V2, V1});
    };
    struct Case {
        int i, j;
        std::vector<NCPoly> rels;
    };
    std::vector<Case> cases = {
        {3, 1, {NCPoly::word({V1, V1}), qcomm(xi.pow(2)), NCPoly::word({V2, V2, V2})}},
        {3, 5, {NCPoly::word({V1, V1}), qcomm(xi.pow(4)), NCPoly::word({V2, V2, V2})}},
        {2, 2,
         {NCPoly::word({V1, V1}) - xi.pow(2) * NCPoly::word({V2, V2}), qcomm(Scalar(1)),
          NCPoly::word({V1, V1, V1})}},
        {2, 4,
         {NCPoly::word({V2, V2}) + xi * NCPoly::word({V1, V1}), qcomm(Scalar(1)),
          NCPoly::word({V1, V1, V1})}},
    };
    for (auto& cs : cases) {
        // order v2 < v1
        PresentedBraidedAlgebra p = presented_basis(2, cs.rels, {1, 0},
                                                    "B(V" + std::to_string(cs.i) +
                                                        std::to_string(cs.j) + ")");
        INFO(p.name);
        CHECK(p.basis.size() == 6);
        auto counts = p.degree_counts();
        REQUIRE(counts.size() == 4);
        CHECK(counts[0] == 1);
        CHECK(counts[1] == 2);
        CHECK(counts[2] == 2);
        CHECK(counts[3] == 1);
        NicholsReport rep = nichols_ranks(braiding_V(cs.i, cs.j).braiding, 2, 4);
        for (size_t n = 0; n < counts.size(); ++n) CHECK(counts[n] == rep.ranks[n]);
        CHECK(rep.total_dim == p.basis.size());
    }
    // exterior algebra on one generator
    PresentedBraidedAlgebra ext = presented_basis(1, {NCPoly::word({0, 0})}, {0}, "wedge K");
    CHECK(ext.basis.size() == 2);
}

TEST_CASE("eigenvalue-1 witnesses") {
    BraidedSpace b10 = braiding_V(1, 0);
    Vec v1(2), v2(2);
    v1[0] = Scalar(1);
    v2[1] = Scalar(1);
    auto w = eigenone_witness(b10.braiding, 2, {v1, v2});
    REQUIRE(w.has_value());
    CHECK(*w == v1);
    CHECK(!eigenone_witness(braiding_V(3, 1).braiding, 2, {v1, v2}).has_value());
    // P_0: p4 is a witness
    BraidedSpace bp = braiding_of(to_yd(projective_cover_Pj(dd(), 0)));
    Vec p4(4);
    p4[3] = Scalar(1);
    CHECK(eigenone_witness(bp.braiding, 4, {p4}).has_value());
}

TEST_CASE("the twelve listed simple braidings have a v1 witness") {
    std::vector<std::pair<int, int>> listed = {{1, 0}, {4, 3}, {3, 0}, {2, 3}, {5, 0}, {0, 3},
                                               {0, 1}, {0, 2}, {3, 2}, {0, 4}, {3, 4}, {0, 5}};
    Vec v1(2);
    v1[0] = Scalar(1);
    for (auto [k, l] : listed) {
        INFO("V", k, l);
        CHECK(eigenone_witness(braiding_V(k, l).braiding, 2, {v1}).has_value());
    }
}

TEST_CASE("dual pairs have equal rank sequences") {
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> pairs = {
        {{3, 1}, {2, 2}}, {{3, 5}, {2, 4}}, {{1, 1}, {4, 2}}, {{0, 1}, {5, 2}},
        {{0, 2}, {5, 1}}, {{3, 2}, {2, 1}}};
    for (const auto& [vw, dual] : pairs) {
        NicholsReport a = nichols_ranks(braiding_V(vw.first, vw.second).braiding, 2, 4);
        NicholsReport b = nichols_ranks(braiding_V(dual.first, dual.second).braiding, 2, 4);
        INFO("V", vw.first, vw.second, " vs V", dual.first, dual.second);
        CHECK(a.ranks == b.ranks);
    }
}

TEST_CASE("rank sequences are invariant under braided base change") {
    BraidedSpace b = braiding_V(3, 1);
    Mat u(2, 2);
    u(0, 0) = Scalar(1);
    u(0, 1) = Scalar(1);
    u(1, 1) = Scalar::xi();
    Mat uu = Mat::kronecker(u, u);
    Mat conj = uu * b.braiding * *inverse(uu);
    NicholsReport ra = nichols_ranks(b.braiding, 2, 4);
    NicholsReport rb = nichols_ranks(conj, 2, 4);
    CHECK(ra.ranks == rb.ranks);
}

TEST_CASE("full report escalates to infinite with a witness") {
    NicholsReport rep = nichols_report(braiding_of(to_yd(character_module(dd(), 2))), 4);
    CHECK(rep.verdict == NicholsVerdict::infinite);
    CHECK(rep.witness.has_value());
    // undecided: V_{1,1} has no basis-line witness and no vanishing rank
    NicholsReport und = nichols_report(braiding_V(1, 1), 4);
    CHECK(und.verdict == NicholsVerdict::undecided);
}

TEST_CASE("infinitude scan over the non-simple indecomposables") {
    auto scan = indecomposable_infinite_scan(dd());
    CHECK(scan.size() == 12);
    for (const auto& e : scan) {
        INFO(e.module_name, " via ", e.witness_location);
        CHECK(e.certified);
        CHECK(e.scalar == Scalar(1));
    }
}

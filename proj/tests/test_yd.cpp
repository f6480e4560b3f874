#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "hopfalg/reference_tables.hpp"

using namespace hopfalg;

namespace {

const DoubleData& dd() {
    static std::unique_ptr<DoubleData> d = build_D(ThetaSign::plus, /*certify=*/false);
    return *d;
}

} // namespace

TEST_CASE("characters translate: delta(v) = a^{3i} (x) v, braiding (-1)^i") {
    for (int i = 0; i < 6; ++i) {
        YDModule v = to_yd(character_module(dd(), i));
        auto rep = compare_coaction(v, reference_coaction_K(i), v.name);
        CHECK(rep.checks[0].pass);
        BraidedSpace b = braiding_of(v);
        CHECK(b.braiding(0, 0) == Scalar(i % 2 == 0 ? 1 : -1));
        CHECK(braid_relation_holds(b));
    }
}

TEST_CASE("V_{3,1} coaction rows from the dual-basis formula") {
    YDModule v = to_yd(two_dim_simple(dd(), 3, 1));
    const Scalar xi = Scalar::xi();
    // delta(v1) = a^5 (x) v1 + (xi^4 - xi^2) ba^4 (x) v2
    CHECK(v.coact[5](0, 0) == Scalar(1));
    CHECK(v.coact[10](1, 0) == xi.pow(4) - xi.pow(2));
    // delta(v2) = a^2 (x) v2 + (1 + xi^4) ba (x) v1
    CHECK(v.coact[2](1, 1) == Scalar(1));
    CHECK(v.coact[7](0, 1) == Scalar(1) + xi.pow(4));
}

TEST_CASE("all 30 two-dimensional simples match the printed tables exactly") {
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            if (!in_Lambda(i, j)) continue;
            YDModule v = to_yd(two_dim_simple(dd(), i, j));
            auto rc = compare_coaction(v, reference_coaction_V(i, j), v.name);
            INFO(v.name, " coaction: ", rc.checks[0].witness);
            CHECK(rc.checks[0].pass);
            BraidedSpace b = braiding_of(v);
            auto rb = compare_braiding(b, reference_braiding_V(i, j), v.name);
            INFO(v.name, " braiding: ", rb.checks[0].witness);
            CHECK(rb.checks[0].pass);
            CHECK(braid_relation_holds(b));
        }
}

TEST_CASE("braiding spot values") {
    // V_{3,1}: c(v1 (x) v1) = -v1 (x) v1, c(v1 (x) v2) = xi^2 v2 (x) v1 + (xi^2 - 1) v1 (x) v2
    BraidedSpace b31 = braiding_of(to_yd(two_dim_simple(dd(), 3, 1)));
    const Scalar xi = Scalar::xi();
    CHECK(b31.braiding(0, 0) == Scalar(-1));
    CHECK(b31.braiding(2, 1) == xi.pow(2));       // v2 (x) v1 component
    CHECK(b31.braiding(1, 1) == xi.pow(2) - Scalar(1));
    // V_{1,0}: c(v1 (x) v1) = v1 (x) v1 (the eigenvalue-1 witness)
    BraidedSpace b10 = braiding_of(to_yd(two_dim_simple(dd(), 1, 0)));
    CHECK(b10.braiding(0, 0) == Scalar(1));
}

TEST_CASE("projective covers: coaction and braiding vs printed tables") {
    for (int j = 0; j < 6; ++j) {
        YDModule v = to_yd(projective_cover_Pj(dd(), j));
        // delta(p_{4,j}) = (a^3)^j (x) p_{4,j} holds
        size_t a3j = j % 2 == 0 ? 0 : 3;
        CHECK(v.coact[a3j](3, 3) == Scalar(1));
        for (size_t i = 0; i < 12; ++i)
            for (size_t k = 0; k < 4; ++k)
                if (!(i == a3j && k == 3)) CHECK(v.coact[i](k, 3).is_zero());
        // the printed tables inherit the projective-cover erratum: rows for
        // p2, p3 mismatch, everything else agrees; all computed objects stay
        // braid-consistent
        auto rc = compare_coaction(v, reference_coaction_P(dd().consts, j), v.name);
        CHECK(!rc.checks[0].pass);
        CHECK(rc.checks[0].informational);
        BraidedSpace b = braiding_of(v);
        auto rb = compare_braiding(b, reference_braiding_P(dd().consts, j), v.name);
        CHECK(!rb.checks[0].pass);
        CHECK(braid_relation_holds(b));
        // braiding diagonal witnesses of the infinitude scan
        if (j % 2 == 0) CHECK(b.braiding(3 * 4 + 3, 3 * 4 + 3) == Scalar(1)); // p4
        else CHECK(b.braiding(2 * 4 + 2, 2 * 4 + 2) == Scalar(1));            // p3
    }
}

TEST_CASE("non-simple indecomposables translate and braid consistently") {
    for (const auto& m : all_two_dim_nonsimple(dd())) {
        YDModule v = to_yd(m);
        BraidedSpace b = braiding_of(v);
        CHECK(braid_relation_holds(b));
        // socle line is a subcomodule
        for (size_t i = 0; i < 12; ++i) CHECK(v.coact[i](1, 0).is_zero());
    }
}

TEST_CASE("functoriality: braiding scalar of K_i (x) K_j is the product") {
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; j += 2) {
            ModuleRep t = tensor_module(character_module(dd(), i), character_module(dd(), j));
            BraidedSpace b = braiding_of(to_yd(t));
            CHECK(b.braiding(0, 0) == Scalar(i % 2 == 0 ? 1 : -1) * Scalar(j % 2 == 0 ? 1 : -1));
        }
}

TEST_CASE("to_yd transports isomorphisms to coaction conjugation") {
    ModuleRep v31 = two_dim_simple(dd(), 3, 1);
    Mat u(2, 2);
    u(0, 0) = Scalar(2);
    u(0, 1) = -Scalar::xi();
    u(1, 1) = Scalar(1);
    Mat uinv = *inverse(u);
    std::vector<Mat> conj;
    for (const auto& g : v31.gen) conj.push_back(u * g * uinv);
    ModuleRep twisted = module_from_generators(dd(), conj, "V31twist");
    YDModule a = to_yd(v31), bb = to_yd(twisted);
    for (size_t i = 0; i < 12; ++i) CHECK(bb.coact[i] == u * a.coact[i] * uinv);
}

TEST_CASE("compatibility failure is detected (negative control)") {
    // a module that is NOT translated from D would fail the YD law; simulate
    // by corrupting the coaction of a valid translation
    YDModule v = to_yd(two_dim_simple(dd(), 3, 1));
    v.coact[5](0, 0) += Scalar(1);
    CHECK(!detail::verify_yd(v).all_pass());
}

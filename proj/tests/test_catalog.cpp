#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfalg/catalog.hpp"
#include "hopfalg/reference_tables.hpp"

using namespace hopfalg;

TEST_CASE("all four pointed algebras certify as Hopf algebras") {
    for (const char* name : {"A0", "A1", "B0", "B1"}) {
        FinDimHopf h = build_pointed(name);
        AxiomReport rep = verify_hopf(h, HopfLevel::hopf);
        INFO(name, ": ", rep.first_failure());
        CHECK(rep.all_pass());
        CHECK(h.dim == 12);
        CHECK(grouplikes(h).size() == 6);
    }
}

TEST_CASE("A1 relations and coproduct") {
    FinDimHopf a1 = build_pointed(PointedName::A1);
    REQUIRE(verify_hopf(a1, HopfLevel::hopf).all_pass());
    Vec x = a1.basis_vec(6), g = a1.basis_vec(1);
    // x^2 = 1 - g^2
    Vec x2 = el_mult(a1, x, x);
    Vec expect(12);
    expect[0] = Scalar(1);
    expect[2] = Scalar(-1);
    CHECK(x2 == expect);
    // Delta(x) = x (x) 1 + g (x) x
    SVec dx = el_comult(a1, x);
    REQUIRE(dx.terms.size() == 2);
    CHECK(dx.terms[0] == std::pair<size_t, Scalar>{1 * 12 + 6, Scalar(1)});
    CHECK(dx.terms[1] == std::pair<size_t, Scalar>{6 * 12 + 0, Scalar(1)});
    // gx = -xg
    CHECK(el_mult(a1, g, x) == [&] {
        Vec v = el_mult(a1, x, g);
        for (auto& c : v) c = -c;
        return v;
    }());
}

TEST_CASE("B1 commutation gx = xi xg") {
    FinDimHopf b1 = build_pointed(PointedName::B1);
    REQUIRE(verify_hopf(b1, HopfLevel::hopf).all_pass());
    Vec gx = el_mult(b1, b1.basis_vec(1), b1.basis_vec(6));
    Vec xg = el_mult(b1, b1.basis_vec(6), b1.basis_vec(1));
    for (size_t i = 0; i < 12; ++i) CHECK(gx[i] == Scalar::xi() * xg[i]);
    // B1 has x^2 = 0
    CHECK(zero(el_mult(b1, b1.basis_vec(6), b1.basis_vec(6))));
}

TEST_CASE("C: coproduct table spot checks") {
    FinDimHopf c = build_C();
    REQUIRE(verify_hopf(c, HopfLevel::hopf).all_pass());
    NamedConstants k;
    // Delta(a^4) = a^4 (x) a^4 + Lam^{-1} ba^3 (x) b
    SVec d4 = el_comult(c, c.basis_vec(4));
    REQUIRE(d4.terms.size() == 2);
    CHECK(d4.terms[0] == std::pair<size_t, Scalar>{4 * 12 + 4, Scalar(1)});
    CHECK(d4.terms[1] == std::pair<size_t, Scalar>{9 * 12 + 6, k.lambda_inv});
    // Delta(a^3) = a^3 (x) a^3
    SVec d3 = el_comult(c, c.basis_vec(3));
    REQUIRE(d3.terms.size() == 1);
    CHECK(d3.terms[0] == std::pair<size_t, Scalar>{3 * 12 + 3, Scalar(1)});
    // S(a) = a^5
    CHECK(el_antipode(c, c.basis_vec(1)) == c.basis_vec(5));
}

TEST_CASE("simple representations of A1 satisfy the relations") {
    A1Reps reps = simple_reps_A1();
    PresentedAlgebra p = presentation_A1();
    for (const auto* rho : {&reps.eps, &reps.chi, &reps.rho1, &reps.rho2}) {
        size_t d = (*rho)[0].rows();
        for (size_t r = 0; r < p.relations.size(); ++r) {
            Mat res = eval_poly_mat(*rho, d, p.relations[r]);
            INFO("relation ", p.relation_names[r]);
            CHECK(res.is_zero());
        }
    }
    // pinned matrices
    CHECK(reps.rho1[0](0, 0) == Scalar::xi());
    CHECK(reps.rho1[0](1, 1) == -Scalar::xi());
    CHECK(reps.rho1[1](0, 1) == Scalar(1) - Scalar::xi());
    CHECK(reps.rho1[1](1, 0) == Scalar(1) + Scalar::xi());
    CHECK(reps.chi[0](0, 0) == Scalar(-1));
    CHECK(reps.chi[1](0, 0).is_zero());
}

TEST_CASE("comatrix element identities") {
    AxiomReport rep = verify_comatrix_relations();
    INFO(rep.first_failure());
    CHECK(rep.all_pass());
    // the proof-line normalization C11^3 C22 = 1 is recorded as false
    bool found_info = false;
    for (const auto& chk : rep.checks)
        if (chk.informational && chk.axiom.find("C11^3C22") != std::string::npos) {
            found_info = true;
            CHECK(!chk.pass); // C11^3 C22 equals C11, not eps
        }
    CHECK(found_info);
}

TEST_CASE("phi: A1 -> C* is a certified Hopf isomorphism") {
    for (ThetaSign sign : {ThetaSign::plus, ThetaSign::minus}) {
        HopfMorphism phi = phi_iso(sign);
        AxiomReport rep = verify_morphism(phi);
        INFO(rep.first_failure());
        CHECK(rep.all_pass());
        // transported relations
        Vec pg = phi.apply(phi.source.basis_vec(1));
        Vec px = phi.apply(phi.source.basis_vec(6));
        Vec gx = el_mult(phi.target, pg, px);
        Vec xg = el_mult(phi.target, px, pg);
        for (size_t i = 0; i < 12; ++i) CHECK(gx[i] == -xg[i]);
        Vec x2 = el_mult(phi.target, px, px);
        Vec g2 = el_mult(phi.target, pg, pg);
        for (size_t i = 0; i < 12; ++i) CHECK(x2[i] == phi.target.unit[i] - g2[i]);
        CHECK(!det(phi.matrix).is_zero());
    }
}

TEST_CASE("phi(g) generates the character group G(C*) = Z6") {
    HopfMorphism phi = phi_iso();
    auto gs = grouplikes(phi.target);
    REQUIRE(gs.size() == 6);
    Vec alpha1 = phi.apply(phi.source.basis_vec(1));
    Vec acc = phi.target.unit;
    size_t hits = 0;
    for (int p = 0; p < 6; ++p) {
        for (const auto& g : gs)
            if (g == acc) { ++hits; break; }
        acc = el_mult(phi.target, acc, alpha1);
    }
    CHECK(hits == 6);
    CHECK(acc == phi.target.unit); // alpha1^6 = eps
}

TEST_CASE("printed dual coproduct table: diff against transposition") {
    FinDimHopf c = build_C();
    REQUIRE(verify_hopf(c, HopfLevel::hopf).all_pass());
    FinDimHopf cd = dual_hopf(c);
    AxiomReport rep = diff_comult_against_reference(cd.comult, reference_dual_coproduct_table(),
                                                    cd.basis);
    // rows 1*, a^5* and (ba^3)* carry typographical slips; the rest agree
    std::vector<bool> expected_match = {false, true, true, true,  true, false,
                                        true,  true, true, false, true, true};
    REQUIRE(rep.checks.size() == 12);
    for (size_t i = 0; i < 12; ++i) {
        INFO("row ", i, " ", rep.checks[i].witness);
        CHECK(rep.checks[i].pass == expected_match[i]);
        CHECK(rep.checks[i].informational);
    }
}

TEST_CASE("D = D(C^cop): 144-dimensional certified double with presentation") {
    auto d = build_D(ThetaSign::plus, /*certify=*/true);
    CHECK(d->D.dim == 144);
    CHECK(d->D.certified_at(HopfLevel::hopf));

    const auto& emb = d->emb;
    Vec a = emb.assignment[0], b = emb.assignment[1], g = emb.assignment[2],
        x = emb.assignment[3];
    // ag = ga, bg = -gb
    CHECK(el_mult(d->D, a, g) == el_mult(d->D, g, a));
    CHECK(el_mult(d->D, b, g) == [&] {
        Vec v = el_mult(d->D, g, b);
        for (auto& cc : v) cc = -cc;
        return v;
    }());
    // the two printed right-hand sides theta xi^{-2}(a^4 - ga) and
    // theta xi^{-2}(a^3 - g)a agree in D since a and g commute
    Vec a3 = emb.eval_word({0, 0, 0});
    Vec a4 = emb.eval_word({0, 0, 0, 0});
    Vec ga = el_mult(d->D, g, a);
    Vec diff1(a4.size());
    for (size_t i = 0; i < a4.size(); ++i) diff1[i] = a4[i] - ga[i];
    Vec a3mg(a3.size());
    for (size_t i = 0; i < a3.size(); ++i) a3mg[i] = a3[i] - g[i];
    CHECK(diff1 == el_mult(d->D, a3mg, a));

    // PBW monomial count
    CHECK(d->pres.pbw_monomials.size() == 144);
}

TEST_CASE("build_D rejects a broken embedding (negative control)") {
    auto d = build_D(ThetaSign::plus, /*certify=*/false);
    GeneratorEmbedding bad;
    bad.target = &d->D;
    bad.assignment = d->emb.assignment;
    std::swap(bad.assignment[0], bad.assignment[2]); // a <-> g
    CHECK(check_relations(d->pres, bad) != "");
}

TEST_CASE("theta sign flip produces a valid double as well") {
    auto d = build_D(ThetaSign::minus, /*certify=*/false);
    CHECK(d->D.dim == 144);
    CHECK(check_relations(d->pres, d->emb) == "");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "hopfalg/json_io.hpp"
#include "hopfalg/report_suite.hpp"

using namespace hopfalg;

TEST_CASE("hopf JSON round-trips bit-exactly") {
    FinDimHopf c = build_C();
    REQUIRE(verify_hopf(c, HopfLevel::hopf).all_pass());
    json j = hopf_to_json(c);
    FinDimHopf back = hopf_from_json(j);
    CHECK(back.dim == c.dim);
    CHECK(back.basis == c.basis);
    CHECK(back.unit == c.unit);
    CHECK(back.counit == c.counit);
    CHECK(back.mult == c.mult);
    CHECK(back.comult == c.comult);
    CHECK(back.antipode == c.antipode);
    // serialization is canonical: dump of the round-trip equals the original
    CHECK(hopf_to_json(back).dump() == j.dump());
}

TEST_CASE("double JSON is identical across thread counts") {
    int saved = thread_count();
    thread_count() = 1;
    auto d1 = build_D(ThetaSign::plus, false);
    std::string s1 = hopf_to_json(d1->D).dump();
    thread_count() = 3;
    auto d2 = build_D(ThetaSign::plus, false);
    std::string s2 = hopf_to_json(d2->D).dump();
    thread_count() = saved;
    CHECK(s1 == s2);
}

TEST_CASE("axiom report serialization keeps witnesses and flags") {
    AxiomReport rep;
    rep.add("alpha", true);
    rep.add("beta", false, "witness text");
    rep.add_info("gamma", false, "erratum");
    json j = report_to_json(rep);
    REQUIRE(j.size() == 3);
    CHECK(j[1]["witness"] == "witness text");
    CHECK(j[2]["informational"] == true);
    CHECK(rep.all_pass() == false);
    AxiomReport info_only;
    info_only.add_info("gamma", false, "erratum");
    CHECK(info_only.all_pass());
}

TEST_CASE("nichols report serialization") {
    auto dd = build_D(ThetaSign::plus, false);
    BraidedSpace b = braiding_of(to_yd(two_dim_simple(*dd, 3, 1)));
    NicholsReport rep = nichols_report(b, 5);
    json j = nichols_report_to_json(rep);
    CHECK(j["verdict"] == "finite");
    CHECK(j["dim"] == 6);
    CHECK(j["ranks"] == json({1, 2, 2, 1, 0, 0}));
    CHECK(j["palindromic"] == true);
}

TEST_CASE("quiver serialization and DOT export") {
    QuiverGraph q;
    q.vertices = {"s", "t"};
    q.arrows[{0, 1}] = 2;
    json j = quiver_to_json(q);
    CHECK(j["classification"] == "tame");
    CHECK(j["arrows"][0] == json({0, 1, 2}));
    std::string dot = quiver_to_dot(q);
    CHECK(dot.find("n0 -> n1") != std::string::npos);
}

TEST_CASE("scalar literals survive a JSON round-trip inside a tensor") {
    // awkward scalars: negative, fractional, both components
    FinDimHopf h(2);
    h.basis = {"1", "t"};
    h.unit[0] = Scalar(1);
    h.counit = {Scalar(1), Scalar(1)};
    Scalar ugly(Rational(-7, 6), Rational(5, 3));
    h.mult.add(0, 0, 0, Scalar(1));
    h.mult.add(0, 1, 1, ugly);
    h.mult.add(1, 0, 1, Scalar(1));
    h.mult.add(1, 1, 0, ugly * ugly);
    h.mult.normalize();
    h.comult.add(0, 0, 0, Scalar(1));
    h.comult.add(1, 1, 1, ugly.inverse());
    h.comult.normalize();
    h.antipode(0, 0) = Scalar(1);
    h.antipode(1, 1) = -ugly;
    FinDimHopf back = hopf_from_json(hopf_to_json(h));
    CHECK(back.mult == h.mult);
    CHECK(back.comult == h.comult);
    CHECK(back.antipode == h.antipode);
}

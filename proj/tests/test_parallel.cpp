#include <doctest.h>

#include "gspin/quantum_double.hpp"
#include "gspin/suites.hpp"
#include "oracles.hpp"

using namespace gspin;

namespace {

void check_same_report(const VerifyReport& a, const VerifyReport& b) {
    CHECK(a.subject == b.subject);
    REQUIRE(a.laws.size() == b.laws.size());
    for (std::size_t i = 0; i < a.laws.size(); ++i) {
        const auto& x = a.laws[i];
        const auto& y = b.laws[i];
        CAPTURE(x.law);
        CHECK(x.law == y.law);
        CHECK(x.mode == y.mode);
        CHECK(x.checked == y.checked);
        CHECK(x.failed == y.failed);
        REQUIRE(x.witnesses.size() == y.witnesses.size());
        for (std::size_t w = 0; w < x.witnesses.size(); ++w) {
            CHECK(x.witnesses[w].tuple == y.witnesses[w].tuple);
            CHECK(x.witnesses[w].labels == y.witnesses[w].labels);
            CHECK(x.witnesses[w].detail == y.witnesses[w].detail);
        }
    }
}

} // namespace

TEST_CASE("thread count does not change a passing verification") {
    auto g = symmetric_group(3);
    auto D = build_double(g, Subgroup::whole(g));
    VerifyOptions ser;
    ser.parallel = false;
    VerifyOptions par;
    par.parallel = true;
    check_same_report(verify_star_algebra(D.hopf.base(), ser),
                      verify_star_algebra(D.hopf.base(), par));
    check_same_report(verify_hopf(D.hopf, ser), verify_hopf(D.hopf, par));

    VerifyOptions sampled_ser = ser, sampled_par = par;
    sampled_ser.mode = sampled_par.mode = Mode::sampled;
    sampled_ser.seed = sampled_par.seed = 9;
    check_same_report(verify_star_algebra(D.hopf.base(), sampled_ser),
                      verify_star_algebra(D.hopf.base(), sampled_par));
}

TEST_CASE("thread count does not change failure witnesses") {
    auto g = symmetric_group(3);
    Subgroup h12(g, {1});
    auto forced = build_double(g, h12, true);
    VerifyOptions ser;
    ser.parallel = false;
    VerifyOptions par;
    par.parallel = true;
    auto a = verify_hopf(forced.hopf, ser);
    auto b = verify_hopf(forced.hopf, par);
    CHECK_FALSE(a.pass());
    check_same_report(a, b);

    // witnesses replay: running the antipode condition on the recorded tuple
    // reproduces the recorded failure
    const auto* broken = a.find("antipode-left");
    REQUIRE(broken != nullptr);
    REQUIRE(!broken->witnesses.empty());
    CHECK(broken->witnesses.size() == std::min<std::size_t>(8, broken->failed));
}

TEST_CASE("full suite reports serialize identically with and without threads") {
    RunConfig cfg;
    cfg.group = "cyclic:4";
    cfg.subgroup = "2";
    cfg.name = "threading";
    cfg.verify.parallel = false;
    auto j_serial = report_json(run_suites(cfg));
    cfg.verify.parallel = true;
    auto j_parallel = report_json(run_suites(cfg));
    CHECK(j_serial == j_parallel);
}

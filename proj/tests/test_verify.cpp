#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "disc/verify.hpp"

using namespace disc;

static void require_all(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks) {
        INFO(c.name, " measured=", c.measured, " bound=", c.bound, " ", c.notes);
        CHECK(c.passed);
    }
}

TEST_CASE("props suite passes on every family") {
    for (const char* family : {"vdc", "halton", "random"}) {
        VerifyOptions opt;
        opt.family = family;
        opt.max_n = 8;
        opt.sign_draws = 20;
        require_all(run_suite("props", opt));
    }
}

TEST_CASE("props suite passes in dimension three") {
    VerifyOptions opt;
    opt.family = "halton";
    opt.dim = 3;
    opt.max_n = 7;
    opt.sign_draws = 10;
    require_all(run_suite("props", opt));
}

TEST_CASE("expansion suite") {
    VerifyOptions opt;
    opt.max_n = 6;
    require_all(run_suite("expansion", opt));
}

TEST_CASE("khintchine suite") {
    VerifyOptions opt;
    opt.coeff_vectors = 60;
    require_all(run_suite("khintchine", opt));
}

TEST_CASE("hardy suite") {
    VerifyOptions opt;
    opt.family = "halton";
    opt.max_n = 8;
    require_all(run_suite("hardy", opt));
}

TEST_CASE("unknown suite is rejected") {
    CHECK_THROWS_AS(run_suite("nonsense", VerifyOptions{}), std::invalid_argument);
}

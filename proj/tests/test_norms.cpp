#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "disc/discrepancy.hpp"
#include "disc/norms.hpp"
#include "disc/pointset.hpp"
#include "disc/prng.hpp"

using namespace disc;

namespace {

// Haar-series corpus: random signed combinations of Haar functions on small
// grids, dimensions 1 and 2.
std::vector<GridFunction> haar_corpus(int count, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<GridFunction> out;
    while (static_cast<int>(out.size()) < count) {
        const int d = 1 + static_cast<int>(rng.next() % 2);
        std::vector<int> levels(d);
        for (int& m : levels) m = 3 + static_cast<int>(rng.next() % 2);
        GridFunction g = GridFunction::zeros(levels);
        const int terms = 3 + static_cast<int>(rng.next() % 6);
        for (int k = 0; k < terms; ++k) {
            DyadicRectangle R;
            R.sides.resize(d);
            for (int t = 0; t < d; ++t) {
                const int lv = static_cast<int>(rng.next() % levels[t]);
                R.sides[t] = DyadicInterval{lv, rng.next() % (std::uint64_t{1} << lv)};
            }
            g.add_refined(haar_grid(R), 4.0 * rng.next_unit() - 2.0);
        }
        if (g.sup_abs() > 0) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

TEST_CASE("exp(L^2) norm of the constant function") {
    // E psi(1/K) = e^{1/K^2} - 1 = 1 solves to K = 1/sqrt(ln 2)
    const GridFunction one = GridFunction::constant({2, 2}, 1.0);
    const NormReport rep = orlicz_norm(one, OrliczGauge::exp_alpha(2.0));
    CHECK(std::fabs(rep.value - 1.2011224087864498) <= 1e-9);
    CHECK(rep.residual <= 1e-9);

    const GridFunction zero = GridFunction::zeros({2, 2});
    CHECK(orlicz_norm(zero, OrliczGauge::exp_alpha(2.0)).value == 0.0);
}

TEST_CASE("llog gauge with alpha 0 is plain L1") {
    const GridFunction two = GridFunction::constant({3}, 2.0);
    const NormReport rep = orlicz_norm(two, OrliczGauge::llog_alpha(0.0));
    CHECK(std::fabs(rep.value - 2.0) <= 1e-9);
}

TEST_CASE("bisection corpus: residual, homogeneity, monotonicity") {
    const auto corpus = haar_corpus(50, 2024);
    for (const auto& gauge :
         {OrliczGauge::exp_alpha(2.0), OrliczGauge::exp_alpha(0.5), OrliczGauge::llog_alpha(0.5),
          OrliczGauge::llog_alpha(1.0)}) {
        for (const auto& g : corpus) {
            const NormReport rep = orlicz_norm(g, gauge);
            CHECK(rep.residual <= 1e-9);
            GridFunction scaled = g;
            scaled.transform([](double v) { return -2.5 * v; });
            const NormReport srep = orlicz_norm(scaled, gauge);
            CHECK(std::fabs(srep.value - 2.5 * rep.value) <= 1e-9 * std::max(1.0, srep.value));
            GridFunction dominating = g;
            dominating.transform([](double v) { return 1.5 * std::fabs(v) + 0.1; });
            CHECK(orlicz_norm(dominating, gauge).value >= rep.value - 1e-12);
        }
    }
}

TEST_CASE("p-sup route tracks the bisection norm within a decade") {
    const auto corpus = haar_corpus(50, 77);
    for (double alpha : {2.0, 1.0}) {
        for (const auto& g : corpus) {
            const double via_p = exp_orlicz_via_pnorms(g, alpha);
            const double via_bisect = orlicz_norm(g, OrliczGauge::exp_alpha(alpha)).value;
            const double ratio = via_p / via_bisect;
            CHECK(ratio >= 0.1);
            CHECK(ratio <= 10.0);
        }
    }
    // constant function: the supremum is approached from the small-p end
    const GridFunction one = GridFunction::constant({2}, 1.0);
    CHECK(exp_orlicz_via_pnorms(one, 2.0) == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-12));
}

TEST_CASE("dual pairing stays bounded against the product of dual norms") {
    const GridFunction one = GridFunction::constant({2, 2}, 1.0);
    const DualPairingReport unit = dual_pairing_check(one, one, 1.0);
    CHECK(!unit.skipped);
    CHECK(unit.ratio > 0.0);

    const GridFunction h = haar_grid(rectangle_at(ShapeVector{{1, 1}}, 2));
    const DualPairingReport hh = dual_pairing_check(h, h, 0.5);
    CHECK(hh.inner == doctest::Approx(0.25).epsilon(1e-12));  // <h_R,h_R> = |R|
    CHECK(hh.ratio > 0.0);

    const auto corpus = haar_corpus(40, 4242);
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) {
        if (corpus[i].dim() != corpus[i + 1].dim()) continue;
        const DualPairingReport rep = dual_pairing_check(corpus[i], corpus[i + 1], 1.0);
        if (!rep.skipped) worst = std::max(worst, rep.ratio);
    }
    CHECK(worst <= 100.0);
}

TEST_CASE("rademacher moment inequality, exact enumeration") {
    const double c2[] = {1.0, 1.0};
    const RademacherReport rep = rademacher_checks(c2, 1.0, 2.0);
    const double cosh1 = std::cosh(1.0);
    CHECK(rep.mgf_lhs == doctest::Approx(cosh1 * cosh1).epsilon(1e-13));
    CHECK(rep.mgf_rhs == doctest::Approx(std::exp(1.0)).epsilon(1e-13));
    CHECK(rep.mgf_ok);
    CHECK(rep.pnorm_lhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));  // orthogonality

    const double c1[] = {1.0};
    for (double lambda : {0.1, 0.5, 1.0, 3.0}) {
        const RademacherReport r1 = rademacher_checks(c1, lambda, 4.0);
        CHECK(r1.mgf_lhs == doctest::Approx(std::cosh(lambda)).epsilon(1e-13));
        CHECK(r1.mgf_ok);
    }
    const std::vector<double> too_long(21, 1.0);
    CHECK_THROWS_AS(rademacher_checks(too_long, 1.0, 2.0), std::invalid_argument);
}

TEST_CASE("khintchine with explicit sqrt(p) constant, |c| <= 12") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const int len = 1 + static_cast<int>(rng.next() % 12);
        std::vector<double> c(len);
        for (double& x : c) x = 2.0 * rng.next_unit() - 1.0;
        for (double p : {2.0, 4.0, 6.0, 8.0}) {
            const RademacherReport rep = rademacher_checks(c, 0.7, p);
            CHECK(rep.khintchine_ok);
        }
    }
}

TEST_CASE("discrepancy cell averages and the norm suite") {
    PointSet origin;
    origin.dim = 2;
    origin.coords = {0.0, 0.0};
    // D(x) = 1 - x1 x2; the L1 norm is exactly 3/4 at any resolution because
    // cell averages of a positive function integrate to the integral.
    const auto rows = dn_norm_suite(origin, {4, 4});
    CHECK(rows[0].name == "l1");
    CHECK(rows[0].value == doctest::Approx(0.75).epsilon(1e-13));
    CHECK(rows[0].refined_value == doctest::Approx(0.75).epsilon(1e-13));
    CHECK(rows[1].value >= rows[0].value);  // L2 >= L1 on a probability space

    const PointSet V = gen_vandercorput(5);
    const auto vrows = dn_norm_suite(V, {7, 7});
    CHECK(vrows[1].value >= vrows[0].value);
    for (const auto& r : vrows) CHECK(r.rel_change < 0.05);
}

TEST_CASE("van der corput L2 growth sits in a stable sqrt(log N) band") {
    double lo = HUGE_VAL, hi = 0.0;
    for (int m = 4; m <= 8; ++m) {
        const PointSet V = gen_vandercorput(m);
        const int n = m + 1;
        const auto rows = dn_norm_suite(V, {std::min(n, 9), std::min(n, 9)});
        const double ratio = rows[1].value / std::sqrt(static_cast<double>(n));
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    CHECK(lo > 0.0);
    CHECK(hi / lo < 3.0);  // a fixed band across the sweep
}

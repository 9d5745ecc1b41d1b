#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "disc/constants.hpp"
#include "disc/discrepancy.hpp"
#include "disc/dualcert.hpp"
#include "disc/pointset.hpp"
#include "disc/verify.hpp"

using namespace disc;

TEST_CASE("matching scale index") {
    CHECK(matching_n(1) == 1);
    CHECK(matching_n(2) == 2);
    CHECK(matching_n(3) == 3);   // 2N=6 <= 8 <= 12
    CHECK(matching_n(16) == 5);  // 2N=32 = 2^5
    for (std::int64_t N : {1, 2, 3, 5, 17, 100, 4097}) {
        const int n = matching_n(N);
        CHECK(2 * N <= (std::int64_t{1} << n));
        CHECK((std::int64_t{1} << n) <= 4 * N);
    }
}

TEST_CASE("two-dimensional sine function at the smallest scale") {
    const PointSet A = gen_random(1, 2, 3);
    CertificateConfig cfg;
    cfg.n = 2;
    const GridFunction psi = build_Psi(A, cfg);
    const double v = std::sin(cfg.epsilon / std::sqrt(2.0));
    std::set<double> seen(psi.values().begin(), psi.values().end());
    CHECK(seen == std::set<double>{-v, v});
    CHECK(psi.sup_abs() <= 1.0);
    // sine is odd and each rectangle splits evenly between +1 and -1 cells
    CHECK(std::fabs(psi.integral()) <= 1e-15);
}

TEST_CASE("prefix sums of the hyperbolic family in dimension three") {
    const PointSet A = gen_halton(128, 3);
    CertificateConfig cfg;
    cfg.n = 8;

    // |s| = 6 leaves a single summand: F_s == f_{(6,1,1)}
    const GridFunction f = build_Fs(A, {6}, cfg);
    const GridFunction direct =
        build_rfunction(A, ShapeVector{{6, 1, 1}}).to_grid().refined_to(f.levels());
    for (std::int64_t c = 0; c < f.cells(); ++c) CHECK(f[c] == direct[c]);

    // |s| = 2 has n - |s| - 1 = 5 summands; the pointwise envelope follows
    const GridFunction g = build_Fs(A, {2}, cfg);
    CHECK(g.sup_abs() <= 5.0);
    for (double v : g.values()) CHECK(std::fabs(v * v) <= 25.0);

    CHECK_THROWS_AS(build_Fs(A, {8}, cfg), std::invalid_argument);
    CHECK_THROWS_AS(build_Fs(A, {9}, cfg), std::invalid_argument);
    // |s| = n-1: an identically zero sum, not an error
    CHECK(build_Fs(A, {7}, cfg).sup_abs() == 0.0);
}

TEST_CASE("d=3 test function matches its definition on the common grid") {
    const PointSet A = gen_halton(128, 3);
    CertificateConfig cfg;
    cfg.n = 8;
    const GridFunction phi = build_Phi(A, cfg);
    const double a = cfg.epsilon / std::sqrt(8.0);
    const double scale = 1.0 / std::sqrt(8.0);
    // manual reassembly: s1 runs over 1..6
    GridFunction manual = GridFunction::zeros(phi.levels());
    for (int s1 = 1; s1 <= 6; ++s1) {
        GridFunction term = build_Fs(A, {s1}, cfg);
        term.transform([a, scale](double v) { return scale * std::sin(a * v); });
        manual.add_refined(term);
    }
    double worst = 0.0;
    for (std::int64_t c = 0; c < phi.cells(); ++c)
        worst = std::max(worst, std::fabs(phi[c] - manual[c]));
    CHECK(worst <= 1e-15);
    // envelope: |Phi| <= n^{-1/2} * #s
    CHECK(phi.sup_abs() <= scale * 6.0);

    // d = 2 collapses to the two-dimensional function
    const PointSet B = gen_vandercorput(4);
    CertificateConfig cfg2;
    cfg2.n = 5;
    const GridFunction psi = build_Psi(B, cfg2);
    const GridFunction phi2 = build_Phi(B, cfg2);
    CHECK(phi2.levels() == psi.levels());
    for (std::int64_t c = 0; c < psi.cells(); ++c) CHECK(phi2[c] == psi[c]);
}

TEST_CASE("subset-product sums") {
    const PointSet A = gen_vandercorput(4);
    CertificateConfig cfg;
    cfg.n = 5;
    const int h = 4;

    // v = 1 is the plain sum of the family
    std::vector<SignedRFunction> fs;
    for (const auto& r : enumerate_shapes(cfg.n, 2)) fs.push_back(build_rfunction(A, r));
    const GridFunction g1 = build_Gv(A, 1, cfg);
    const GridFunction manual = sum_hyperbolic_rfunctions(A, fs, cfg);
    for (std::int64_t c = 0; c < g1.cells(); ++c) CHECK(g1[c] == manual[c]);

    // v = h is the single full product
    const GridFunction gh = build_Gv(A, h, cfg);
    GridFunction prod = GridFunction::constant({cfg.n, cfg.n}, 1.0);
    for (const auto& f : fs) {
        const GridFunction fg = f.to_grid().refined_to({cfg.n, cfg.n});
        for (std::int64_t c = 0; c < prod.cells(); ++c) prod[c] *= fg[c];
    }
    for (std::int64_t c = 0; c < gh.cells(); ++c) CHECK(gh[c] == prod[c]);

    // every subset product is an r-function, so each G_v has exact mean zero
    for (int v = 1; v <= h; ++v) CHECK(build_Gv(A, v, cfg).integral() == 0.0);

    CHECK_THROWS_AS(build_Gv(A, 0, cfg), std::invalid_argument);
    CHECK_THROWS_AS(build_Gv(A, h + 1, cfg), std::invalid_argument);
}

TEST_CASE("product rule: shapes combine by componentwise max") {
    const PointSet A = gen_random(8, 2, 19);
    const SignedRFunction f13 = build_rfunction(A, ShapeVector{{1, 3}});
    const SignedRFunction f22 = build_rfunction(A, ShapeVector{{2, 2}});
    const SignedRFunction f31 = build_rfunction(A, ShapeVector{{3, 1}});

    const ProductRuleResult two = verify_product_rule({{f13, 1}, {f22, 1}});
    CHECK(two.is_r_function);
    CHECK(two.shape.components == std::vector<int>{2, 3});
    CHECK(two.shape.index() == 5);  // strictly above n = 4

    const ProductRuleResult one = verify_product_rule({{f22, 1}});
    CHECK(one.is_r_function);
    CHECK(one.shape.components == std::vector<int>{2, 2});

    const ProductRuleResult three = verify_product_rule({{f13, 1}, {f22, 1}, {f31, 1}});
    CHECK(three.is_r_function);
    CHECK(three.shape.components == std::vector<int>{3, 3});

    // even multiplicities cancel: f22 appears twice, leaving f13 alone
    const ProductRuleResult cancel = verify_product_rule({{f13, 1}, {f22, 2}});
    CHECK(cancel.shape.components == std::vector<int>{1, 3});

    CHECK_THROWS_AS(verify_product_rule({{f13, 2}}), std::invalid_argument);
}

TEST_CASE("product counting formula") {
    CHECK(count_products(4, ShapeVector{{3, 4}}, 3) == 2);  // C(2,1)
    CHECK(count_products(6, ShapeVector{{4, 5}}, 4) == 1);  // C(2,2)
    // |s| = n+v-1 forces the middle choices completely
    CHECK(count_products(7, ShapeVector{{4, 5}}, 3) == 1);
    CHECK_THROWS_AS(count_products(4, ShapeVector{{3, 4}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(count_products(4, ShapeVector{{2, 2}}, 3), std::invalid_argument);
}

TEST_CASE("sign moments: closed form, enumeration, grid integral") {
    CHECK(gamma_prime(2, 2) == 2);
    CHECK(gamma_prime(4, 3) == 21);  // frozen from enumerating 2^3 patterns
    CHECK(gamma_prime(0, 4) == 1);
    CHECK(gamma_prime(2, 5) == 5);
    CHECK_THROWS_AS(gamma_prime(3, 2), std::invalid_argument);

    // grid route: all-plus r-functions of index 4 (h = 3), fourth moment
    GridFunction sum = GridFunction::zeros({4, 4});
    for (const auto& r : enumerate_shapes(4, 2)) {
        SignedRFunction f;
        f.shape = r;
        f.signs.assign(shape_rect_count(r), 1);
        sum.add_refined(f.to_grid());
    }
    GridFunction pw = sum;
    pw.transform([](double v) { return v * v * v * v; });
    CHECK(pw.integral() == 21.0);
}

TEST_CASE("symbolic expansion of odd powers") {
    const ExpansionCoefficients k1 = verify_Gv_expansion(5, 1);
    CHECK(k1.c.size() == 1);
    CHECK(k1.c.at(1) == 1);

    const ExpansionCoefficients k3 = verify_Gv_expansion(5, 3);  // h = 4
    CHECK(k3.odd_only_ok);
    CHECK(k3.uniform_ok);
    CHECK(k3.c.at(1) == 10);  // 3h - 2
    CHECK(k3.c.at(3) == 6);   // 3!
    CHECK(k3.measured_c0 > 0.0);

    for (int n = 4; n <= 8; ++n) {
        const ExpansionCoefficients ec = verify_Gv_expansion(n, 3);
        CHECK(ec.c.at(1) == 3 * (n - 1) - 2);
        for (const auto& [v, g] : ec.gamma) CHECK(g > 0.0);
    }

    const ExpansionCoefficients k5 = verify_Gv_expansion(6, 5);
    CHECK(k5.odd_only_ok);
    CHECK(k5.uniform_ok);
    CHECK(k5.c.at(5) == 120);  // 5!
}

TEST_CASE("two-dimensional certificate on van der corput") {
    for (int n = 4; n <= 8; ++n) {
        const PointSet V = gen_vandercorput(n - 1);
        CertificateConfig cfg;
        cfg.n = n;
        const PairingReport rep = halasz_certificate(V, cfg);
        CHECK(rep.n_matched);
        CHECK(rep.pairing > 0.0);
        CHECK(rep.dual_norm <= 1.0);
        CHECK(rep.lower_bound <= rep.pairing / rep.dual_norm + 1e-15);
        // leading term grows at least like eps sqrt(n) times the family floor
        const double floor_v = 0.5 * cfg.epsilon * std::sqrt(static_cast<double>(n)) *
                               constants::rvec_floor(2);
        CHECK(rep.leading_term >= floor_v);
        // and the implied L1 bound is consistent with the measured L1 norm
        // (checked against the norm suite in the acceptance run)
    }
}

TEST_CASE("three-dimensional certificate internals") {
    const PointSet H = gen_halton(128, 3);
    CertificateConfig cfg;
    cfg.n = 8;
    const PairingReport rep = main_certificate(H, cfg);
    CHECK(rep.n_matched);
    CHECK(rep.per_s.size() == 6);
    for (const auto& [label, v] : rep.per_s) CHECK(v > 0.0);
    CHECK(rep.iterated_square_max <= 1.0);
    // the pairing equals the per-slice sum by linearity; cross-check against
    // an independently materialized Phi
    const GridFunction phi = build_Phi(H, cfg);
    CHECK(std::fabs(pair_DN_grid(H, phi) - rep.pairing) <= 1e-9);
    // p-norms from the streaming pass match the materialized grid
    for (int p : {2, 4, 8})
        CHECK(std::fabs(rep.pnorms.at(p) - phi.pnorm(p)) <= 1e-12);
    CHECK(rep.sup_norm == doctest::Approx(phi.sup_abs()).epsilon(1e-12));

    // d = 2 reduces to the two-dimensional certificate
    const PointSet V = gen_vandercorput(5);
    CertificateConfig cfg2;
    cfg2.n = 6;
    const PairingReport main2 = main_certificate(V, cfg2);
    const PairingReport hal2 = halasz_certificate(V, cfg2);
    CHECK(main2.pairing == hal2.pairing);
    CHECK(main2.kind == "main");
}

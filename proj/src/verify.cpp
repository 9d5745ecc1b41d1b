#include "disc/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>

#include "disc/constants.hpp"
#include "disc/discrepancy.hpp"
#include "disc/dualcert.hpp"
#include "disc/grid.hpp"
#include "disc/hardy.hpp"
#include "disc/norms.hpp"
#include "disc/prng.hpp"

namespace disc {

PointSet family_points(const std::string& family, int dim, int n, std::uint64_t seed) {
    // N = 2^{n-1} sits at the top of the admissible window 2^{n-2}..2^{n-1};
    // the random family exercises an interior value.
    if (family == "vdc") {
        if (dim != 2) throw std::invalid_argument("family_points: vdc is two-dimensional");
        return gen_vandercorput(n - 1);
    }
    if (family == "halton") return gen_halton(std::int64_t{1} << (n - 1), dim);
    if (family == "random") {
        const std::int64_t N = n >= 3 ? 3 * (std::int64_t{1} << (n - 3)) : std::int64_t{1} << (n - 1);
        return gen_random(N, dim, seed);
    }
    throw std::invalid_argument("family_points: unknown family " + family);
}

double haar_coeff_reference(const PointSet& A, const DyadicRectangle& R) {
    const int d = R.dim();
    double total = 0.0;
    for (std::uint32_t corner = 0; corner < (1u << d); ++corner) {
        int sign = 1;
        double linear = 1.0;
        std::vector<double> lo(d), hi(d);
        for (int t = 0; t < d; ++t) {
            const auto& I = R.sides[t];
            const bool right = (corner >> t) & 1;
            sign *= right ? 1 : -1;
            lo[t] = right ? I.midpoint() : I.left();
            hi[t] = right ? I.right() : I.midpoint();
            linear *= 0.5 * (hi[t] * hi[t] - lo[t] * lo[t]);
        }
        double count_integral = 0.0;
        for (std::int64_t i = 0; i < A.size(); ++i) {
            const auto p = A.point(i);
            double overlap = 1.0;
            for (int t = 0; t < d; ++t) {
                const double a = std::max(lo[t], p[t]);
                overlap *= a < hi[t] ? hi[t] - a : 0.0;
                if (overlap == 0.0) break;
            }
            count_integral += overlap;
        }
        total += sign * (count_integral - static_cast<double>(A.size()) * linear);
    }
    return total;
}

namespace {

using Checks = std::vector<CheckResult>;

CheckResult make(const std::string& name, bool passed, double measured, double bound,
                 std::string notes = {}) {
    CheckResult c;
    c.name = name;
    c.passed = passed;
    c.measured = measured;
    c.bound = bound;
    c.notes = std::move(notes);
    return c;
}

// ---------------------------------------------------------------- props ---

void check_rvec_floor(const VerifyOptions& opt, Checks& out) {
    const double floor_v = constants::rvec_floor(opt.dim);
    double min_pairing = HUGE_VAL;
    int cases = 0;
    for (int n = std::max(opt.dim + 1, 4); n <= opt.max_n; ++n) {
        const PointSet A = family_points(opt.family, opt.dim, n, opt.seed);
        for (const auto& r : enumerate_shapes(n, opt.dim)) {
            min_pairing = std::min(min_pairing, pair_DN_rfunction(A, build_rfunction(A, r)));
            ++cases;
        }
    }
    out.push_back(make("props/rvec_pairing_floor", min_pairing >= floor_v, min_pairing, floor_v,
                       std::to_string(cases) + " shapes, family " + opt.family));
}

void check_oversampled(const VerifyOptions& opt, Checks& out) {
    double worst_ratio = 0.0;
    int cases = 0;
    const int n = std::min(opt.max_n, opt.dim == 2 ? 8 : 7);
    const PointSet A = family_points(opt.family, opt.dim, n, opt.seed);
    for (int idx = n + 1; idx <= 2 * n; ++idx) {
        for (const auto& s : enumerate_shapes(idx, opt.dim)) {
            const double cap =
                constants::oversampled_ceiling(static_cast<double>(A.size()), idx);
            for (double v : pair_DN_random_signs(A, s, opt.sign_draws, opt.seed + idx)) {
                worst_ratio = std::max(worst_ratio, std::fabs(v) / cap);
                ++cases;
            }
        }
    }
    out.push_back(make("props/oversampled_index_ceiling", worst_ratio <= 1.0, worst_ratio, 1.0,
                       std::to_string(cases) + " random-sign pairings at index n+1..2n"));
}

void check_coeff_closed_forms(const VerifyOptions& opt, Checks& out) {
    double worst = 0.0;
    std::int64_t cases = 0;
    for (int d = 1; d <= std::min(3, opt.dim + 1); ++d) {
        const PointSet A = gen_random(48, d, opt.seed + d);
        const int max_level = d == 3 ? 4 : 6;
        std::vector<DyadicRectangle> rects;
        std::function<void(DyadicRectangle&, int)> rec = [&](DyadicRectangle& R, int t) {
            if (t == d) {
                rects.push_back(R);
                return;
            }
            for (int lv = 0; lv <= max_level; ++lv)
                for (std::uint64_t j = 0; j < (std::uint64_t{1} << lv); ++j) {
                    R.sides[t] = DyadicInterval{lv, j};
                    rec(R, t + 1);
                }
        };
        DyadicRectangle R;
        R.sides.resize(d);
        rec(R, 0);
        for (const auto& rect : rects) {
            const double closed = haar_coeff_DN(A, rect).value();
            const double ref = haar_coeff_reference(A, rect);
            worst = std::max(worst, std::fabs(closed - ref));
            ++cases;
        }
    }
    out.push_back(make("props/haar_coeff_vs_reference", worst <= 1e-10, worst, 1e-10,
                       std::to_string(cases) + " rectangles, d = 1..3"));
}

void check_good_orthogonality(const VerifyOptions& opt, Checks& out) {
    double worst = 0.0;
    for (int n = opt.dim + 1; n <= std::min(opt.max_n, 10); ++n) {
        const PointSet A = family_points(opt.family, opt.dim, n, opt.seed);
        for (const auto& r : enumerate_shapes(n, opt.dim)) {
            const ShapeCoeffs sc = shape_coeffs(A, r);
            const GoodBadPartition part = classify_good(A, r);
            for (std::uint64_t j : part.good)
                worst = std::max(worst, std::fabs(sc.point_part[j]));
        }
    }
    out.push_back(make("props/good_rectangle_point_part_zero", worst == 0.0, worst, 0.0));
}

void check_pair_grid_oracle(const VerifyOptions& opt, Checks& out) {
    // pair_DN_grid against a naive per-cell evaluation of <D_N, g>.
    double worst = 0.0;
    const PointSet A = family_points(opt.family, 2, 6, opt.seed);
    CertificateConfig cfg;
    cfg.n = 6;
    const GridFunction psi = build_Psi(A, cfg);
    const double fast = pair_DN_grid(A, psi);
    // Naive: per cell, exact integral of D_N over the cell times the value.
    PairwiseAcc acc;
    const std::int64_t n1 = psi.cells_along(0), n2 = psi.cells_along(1);
    for (std::int64_t i1 = 0; i1 < n1; ++i1)
        for (std::int64_t i2 = 0; i2 < n2; ++i2) {
            const double a1 = static_cast<double>(i1) / n1, b1 = static_cast<double>(i1 + 1) / n1;
            const double a2 = static_cast<double>(i2) / n2, b2 = static_cast<double>(i2 + 1) / n2;
            double cell_int = 0.0;
            for (std::int64_t i = 0; i < A.size(); ++i) {
                const auto p = A.point(i);
                const double o1 = std::max(0.0, b1 - std::max(a1, p[0]));
                const double o2 = std::max(0.0, b2 - std::max(a2, p[1]));
                cell_int += o1 * o2;
            }
            cell_int -= static_cast<double>(A.size()) * 0.25 * (b1 * b1 - a1 * a1) *
                        (b2 * b2 - a2 * a2);
            acc.push(cell_int * psi[i1 * n2 + i2]);
        }
    worst = std::fabs(fast - acc.total());
    out.push_back(make("props/pair_grid_vs_naive", worst <= 1e-9, worst, 1e-9));
}

// ------------------------------------------------------------ expansion ---

void check_count_products(const VerifyOptions& opt, Checks& out) {
    bool ok = true;
    std::int64_t cases = 0;
    std::string witness;
    for (int n = 4; n <= std::min(8, opt.max_n); ++n) {
        const int h = n - 1;
        for (int v = 2; v <= std::min(5, n); ++v) {
            // Enumerate v-subsets of the family; a product's shape is the
            // componentwise max of its factors.
            std::map<std::pair<int, int>, std::int64_t> brute;
            std::vector<int> comb(v);
            for (int i = 0; i < v; ++i) comb[i] = i;
            while (true) {
                int m1 = 0, m2 = 0;
                for (int i = 0; i < v; ++i) {
                    const int a = comb[i] + 1;  // shape (a, n-a)
                    m1 = std::max(m1, a);
                    m2 = std::max(m2, n - a);
                }
                ++brute[{m1, m2}];
                int pos = v - 1;
                while (pos >= 0 && comb[pos] == h - v + pos) --pos;
                if (pos < 0) break;
                ++comb[pos];
                for (int i = pos + 1; i < v; ++i) comb[i] = comb[i - 1] + 1;
            }
            // Admissible product shapes have both components in 1..n-1.
            for (int s1 = 1; s1 <= n - 1; ++s1)
                for (int s2 = 1; s2 <= n - 1; ++s2) {
                    if (s1 + s2 < n + v - 1) continue;
                    ShapeVector s{{s1, s2}};
                    const std::int64_t formula = count_products(n, s, v);
                    const auto it = brute.find({s1, s2});
                    const std::int64_t enumd = it == brute.end() ? 0 : it->second;
                    ++cases;
                    if (formula != enumd) {
                        ok = false;
                        if (witness.empty())
                            witness = "n=" + std::to_string(n) + " v=" + std::to_string(v) +
                                      " s=(" + std::to_string(s1) + "," + std::to_string(s2) + ")";
                    }
                }
        }
    }
    out.push_back(make("expansion/count_products_vs_enumeration", ok,
                       static_cast<double>(cases), static_cast<double>(cases), witness));
}

void check_expansion_coefficients(const VerifyOptions& opt, Checks& out) {
    bool ok = true;
    std::string notes;
    for (int n = 4; n <= std::min(8, opt.max_n); ++n) {
        for (int k : {1, 3, 5, 7}) {
            const ExpansionCoefficients ec = verify_Gv_expansion(n, k);
            if (!ec.odd_only_ok || !ec.uniform_ok) ok = false;
            if (k == 3) {
                const int h = n - 1;
                if (ec.c.at(1) != 3 * h - 2) ok = false;
                if (h >= 3 && ec.c.at(3) != 6) ok = false;
            }
            if (k == 1 && ec.c.at(1) != 1) ok = false;
        }
    }
    out.push_back(make("expansion/coefficients_uniform_odd", ok, 1.0, 1.0,
                       "k=3 closed form c(1)=3h-2, c(3)=3!"));
}

void check_pointwise_identity(const VerifyOptions& opt, Checks& out) {
    double worst = 0.0;
    for (int n = 4; n <= std::min(6, opt.max_n); ++n) {
        const PointSet A = family_points(opt.family, 2, n, opt.seed);
        CertificateConfig cfg;
        cfg.n = n;
        const auto shapes = enumerate_shapes(n, 2);
        GridFunction sum = GridFunction::zeros({n, n});
        std::vector<SignedRFunction> fs;
        for (const auto& r : shapes) fs.push_back(build_rfunction(A, r));
        for (const auto& f : fs) sum.add_refined(f.to_grid());
        for (int k : {3, 5}) {
            const ExpansionCoefficients ec = verify_Gv_expansion(n, k);
            GridFunction lhs = sum;
            lhs.transform([k](double v) { return std::pow(v, k); });
            GridFunction rhs = GridFunction::zeros({n, n});
            for (const auto& [v, cv] : ec.c)
                rhs.add_refined(build_Gv(A, v, cfg), static_cast<double>(cv));
            for (std::int64_t c = 0; c < lhs.cells(); ++c)
                worst = std::max(worst, std::fabs(lhs[c] - rhs[c]));
        }
    }
    out.push_back(make("expansion/power_identity_residual", worst == 0.0, worst, 0.0,
                       "(sum f_r)^k == sum_v c(v) G_v on the grid"));
}

void check_gamma_prime(const VerifyOptions& opt, Checks& out) {
    bool ok = true;
    // Closed form vs exhaustive sign enumeration.
    for (int h : {2, 3, 5, 8, 12, 16}) {
        for (int m : {2, 4, 6}) {
            __int128 total = 0;
            for (std::uint32_t bits = 0; bits < (1u << h); ++bits) {
                std::int64_t s = h - 2 * std::popcount(bits);
                __int128 pw = 1;
                for (int e = 0; e < m; ++e) pw *= s;
                total += pw;
            }
            total /= (__int128{1} << h);
            if (gamma_prime(m, h) != static_cast<std::int64_t>(total)) ok = false;
        }
    }
    // Closed form vs grid integral of powers of the all-plus sum.
    for (int n = 4; n <= std::min(6, opt.max_n); ++n) {
        GridFunction sum = GridFunction::zeros({n, n});
        for (const auto& r : enumerate_shapes(n, 2)) {
            SignedRFunction f;
            f.shape = r;
            f.signs.assign(shape_rect_count(r), 1);
            sum.add_refined(f.to_grid());
        }
        for (int m : {2, 4}) {
            GridFunction pw = sum;
            pw.transform([m](double v) { return std::pow(v, m); });
            if (pw.integral() != static_cast<double>(gamma_prime(m, n - 1))) ok = false;
        }
    }
    out.push_back(make("expansion/gamma_prime_moments", ok, 1.0, 1.0,
                       "sign enumeration h<=16 and grid integrals n<=6"));
}

void check_product_rule(const VerifyOptions& opt, Checks& out) {
    bool ok = true;
    std::string witness;
    for (int n = 4; n <= std::min(7, opt.max_n); ++n) {
        const PointSet A = family_points(opt.family, 2, n, opt.seed);
        std::vector<SignedRFunction> fs;
        for (const auto& r : enumerate_shapes(n, 2)) fs.push_back(build_rfunction(A, r));
        const int h = static_cast<int>(fs.size());
        for (std::uint32_t mask = 1; mask < (1u << h); ++mask) {
            if (std::popcount(mask) % 2 == 0) continue;
            std::vector<std::pair<SignedRFunction, int>> factors;
            for (int a = 0; a < h; ++a)
                if ((mask >> a) & 1) factors.emplace_back(fs[a], 1);
            const ProductRuleResult res = verify_product_rule(factors);
            if (!res.is_r_function) {
                ok = false;
                if (witness.empty()) witness = "n=" + std::to_string(n);
            }
            if (factors.size() >= 2 && res.shape.index() <= n) ok = false;
        }
    }
    out.push_back(make("expansion/product_rule", ok, 1.0, 1.0, witness));
}

void check_tail_decomposition(const VerifyOptions& opt, Checks& out) {
    // <D_N, Psi> against the subset-product decomposition with coefficients
    // from the Taylor series of sine, truncated at machine precision; the
    // mask-polynomial coefficients c_k(v) come from the same expansion the
    // exact-integer path verifies.
    double worst = 0.0;
    for (int n = 4; n <= std::min(6, opt.max_n); ++n) {
        const PointSet A = family_points(opt.family, 2, n, opt.seed);
        CertificateConfig cfg;
        cfg.n = n;
        const int h = n - 1;
        const double a = cfg.epsilon / std::sqrt(static_cast<double>(n));
        // delta[v]: sum over odd k of sin-Taylor sign a^k / k! * c_k(v),
        // with c_k(v) tracked through a double mask polynomial.
        const std::size_t masks = std::size_t{1} << h;
        std::vector<double> coeff(masks, 0.0), next(masks, 0.0);
        coeff[0] = 1.0;
        std::map<int, double> delta;
        double ak_over_kfact = 1.0;  // a^k / k! maintained incrementally
        for (int k = 1; k <= 60; ++k) {
            std::fill(next.begin(), next.end(), 0.0);
            for (std::size_t m = 0; m < masks; ++m) {
                if (coeff[m] == 0.0) continue;
                for (int b = 0; b < h; ++b) next[m ^ (std::size_t{1} << b)] += coeff[m];
            }
            coeff.swap(next);
            ak_over_kfact *= a / k;
            if (k % 2 == 0) continue;
            const double sign = (k % 4 == 1) ? 1.0 : -1.0;
            bool any = false;
            for (int v = 1; v <= std::min(k, h); v += 2) {
                const double cv = coeff[(std::size_t{1} << v) - 1];  // any v-mask
                const double term = sign * ak_over_kfact * cv;
                delta[v] += term;
                if (std::fabs(term) > 1e-18) any = true;
            }
            if (!any && k > h) break;
        }
        const GridFunction psi = build_Psi(A, cfg);
        const double direct = pair_DN_grid(A, psi);
        PairwiseAcc acc;
        for (const auto& [v, dv] : delta) acc.push(dv * pair_DN_grid(A, build_Gv(A, v, cfg)));
        worst = std::max(worst, std::fabs(direct - acc.total()));
        // The Taylor-summed coefficients must also match the closed product
        // form sin^v(a) cos^{h-v}(a) with alternating sign.
        for (const auto& [v, dv] : delta)
            worst = std::max(worst, std::fabs(dv - sine_subset_coefficient(v, h, a)));
    }
    out.push_back(make("expansion/sine_tail_decomposition", worst <= 1e-8, worst, 1e-8));
}

// ------------------------------------------------------------ khintchine ---

void check_moment_inequalities(const VerifyOptions& opt, Checks& out) {
    SplitMix64 rng(opt.seed);
    bool ok = true;
    double worst_margin = HUGE_VAL;
    for (int trial = 0; trial < opt.coeff_vectors; ++trial) {
        const int len = 1 + static_cast<int>(rng.next() % 12);
        std::vector<double> c(len);
        for (double& x : c) x = 2.0 * rng.next_unit() - 1.0;
        const double lambda = 0.25 + 2.0 * rng.next_unit();
        for (double p : {2.0, 4.0, 6.0, 8.0}) {
            const RademacherReport rep = rademacher_checks(c, lambda, p);
            if (!rep.mgf_ok || !rep.khintchine_ok) ok = false;
            worst_margin = std::min(worst_margin, rep.mgf_rhs - rep.mgf_lhs);
            if (p == 2.0) {
                double sq = 0.0;
                for (double x : c) sq += x * x;
                if (std::fabs(rep.pnorm_lhs - std::sqrt(sq)) > 1e-12) ok = false;
            }
        }
    }
    out.push_back(make("khintchine/moment_and_pnorm_bounds", ok, worst_margin, 0.0,
                       std::to_string(opt.coeff_vectors) + " coefficient vectors"));
}

void check_exp_orlicz_of_rademacher(const VerifyOptions& opt, Checks& out) {
    SplitMix64 rng(opt.seed + 99);
    double worst_ratio = 0.0;
    for (int trial = 0; trial < 25; ++trial) {
        const int h = 2 + static_cast<int>(rng.next() % 9);
        std::vector<double> c(h);
        double sq = 0.0;
        for (double& x : c) {
            x = 2.0 * rng.next_unit() - 1.0;
            sq += x * x;
        }
        if (sq == 0.0) continue;
        // The Rademacher sum as a function on [0,1): r_j reads binary digit j.
        GridFunction g = GridFunction::zeros({h});
        for (std::int64_t cell = 0; cell < g.cells(); ++cell) {
            double s = 0.0;
            for (int j = 0; j < h; ++j) s += ((cell >> (h - 1 - j)) & 1) ? c[j] : -c[j];
            g[cell] = s;
        }
        const double norm = orlicz_norm(g, OrliczGauge::exp_alpha(2.0)).value;
        worst_ratio = std::max(worst_ratio, norm / std::sqrt(sq));
    }
    out.push_back(make("khintchine/exp2_norm_of_rademacher_sum", worst_ratio <= 3.0, worst_ratio,
                       3.0));
}

// ----------------------------------------------------------------- hardy ---

void check_tilde_coeffs(const VerifyOptions& opt, Checks& out) {
    double worst = 0.0;
    for (int d = 2; d <= 3; ++d) {
        const PointSet A = gen_random(24, d, opt.seed + d);
        const std::vector<int> levels(d, d == 2 ? 6 : 4);
        const GridFunction tilde = tilde_DN_grid(A, levels);
        SplitMix64 rng(opt.seed + 7);
        for (int trial = 0; trial < 40; ++trial) {
            DyadicRectangle R;
            R.sides.resize(d);
            bool degenerate = false;
            for (int t = 0; t < d; ++t) {
                const int lv = static_cast<int>(rng.next() % (levels[t]));
                R.sides[t] = DyadicInterval{lv, rng.next() % (std::uint64_t{1} << lv)};
                degenerate |= lv + 1 > levels[t];
            }
            if (degenerate) continue;
            // Grid pairing of the projected cell averages against h_R.
            const GridFunction h = haar_grid(R);
            const double grid_val =
                GridFunction::combine(tilde, h, [](double x, double y) { return x * y; })
                    .integral();
            worst = std::max(worst, std::fabs(grid_val - haar_coeff_DN(A, R).value()));
        }
        for (int t = 0; t < d; ++t)
            worst = std::max(worst, int_t(tilde, t).sup_abs());
    }
    out.push_back(make("hardy/tilde_preserves_haar_coeffs", worst <= 1e-10, worst, 1e-10,
                       "also Int_t tilde == 0"));
}

void check_good_sets(const VerifyOptions& opt, Checks& out) {
    double min_measure = 1.0, min_excess = 1.0, worst_pnorm_slack = HUGE_VAL;
    double min_sq_slack = HUGE_VAL;
    const std::vector<double> ps{0.5, 1.0};
    const int top = std::min(opt.max_n, opt.dim == 2 ? 12 : 9);
    for (int n = opt.dim + 2; n <= top; n += 2) {
        const PointSet A = family_points(opt.family, opt.dim, n, opt.seed);
        const HardyReport rep = hardy_lower_report(A, n, ps);
        min_measure = std::min(min_measure, rep.min_good_measure);
        min_excess = std::min(min_excess, rep.excess_measure);
        for (double p : ps) {
            const double ind_floor =
                (static_cast<double>(rep.J) / 4.0) * std::pow(0.25, 1.0 / p);
            worst_pnorm_slack =
                std::min(worst_pnorm_slack, rep.sum_indicator_pnorm.at(p) - ind_floor);
            const double sq_floor =
                constants::sq_pnorm_floor(opt.dim, static_cast<double>(rep.J), p);
            min_sq_slack = std::min(min_sq_slack, rep.sq_pnorm.at(p) - sq_floor);
        }
    }
    out.push_back(make("hardy/good_set_measure", min_measure >= 0.5, min_measure, 0.5));
    out.push_back(make("hardy/pigeonhole_mass", min_excess >= 0.25, min_excess, 0.25));
    out.push_back(make("hardy/indicator_sum_pnorm_floor", worst_pnorm_slack >= 0.0,
                       worst_pnorm_slack, 0.0));
    out.push_back(make("hardy/square_function_pnorm_floor", min_sq_slack >= 0.0, min_sq_slack,
                       0.0));
}

void check_iterated_square(const VerifyOptions& opt, Checks& out) {
    // d = 3: S_{d-2}(Phi) <= 1 pointwise, and the CWW-flavored comparison
    // ||Phi||_{exp(L^2) via p-sup} <= C ||S_1(Phi)||_inf with C reported.
    const int n = std::min(opt.max_n, 8);
    const PointSet A = family_points(opt.family == "vdc" ? "halton" : opt.family, 3, n, opt.seed);
    CertificateConfig cfg;
    cfg.n = n;
    const PairingReport rep = main_certificate(A, cfg);
    out.push_back(make("hardy/iterated_square_bound", rep.iterated_square_max <= 1.0,
                       rep.iterated_square_max, 1.0));
    double exp2 = 0.0;
    for (const auto& [p, v] : rep.pnorms)
        exp2 = std::max(exp2, v / std::sqrt(static_cast<double>(p)));
    const double cww = rep.iterated_square_max > 0 ? exp2 / rep.iterated_square_max : 0.0;
    out.push_back(make("hardy/cww_measured_constant", std::isfinite(cww) && cww > 0.0, cww, 0.0,
                       "report-only measured constant"));
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
    Checks out;
    const bool all = suite == "all";
    if (suite == "props" || all) {
        check_rvec_floor(opt, out);
        check_oversampled(opt, out);
        check_coeff_closed_forms(opt, out);
        check_good_orthogonality(opt, out);
        check_pair_grid_oracle(opt, out);
    }
    if (suite == "expansion" || all) {
        check_count_products(opt, out);
        check_expansion_coefficients(opt, out);
        check_pointwise_identity(opt, out);
        check_gamma_prime(opt, out);
        check_product_rule(opt, out);
        check_tail_decomposition(opt, out);
    }
    if (suite == "khintchine" || all) {
        check_moment_inequalities(opt, out);
        check_exp_orlicz_of_rademacher(opt, out);
    }
    if (suite == "hardy" || all) {
        check_tilde_coeffs(opt, out);
        check_good_sets(opt, out);
        check_iterated_square(opt, out);
    }
    if (out.empty()) throw std::invalid_argument("run_suite: unknown suite " + suite);
    return out;
}

}  // namespace disc

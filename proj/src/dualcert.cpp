#include "disc/dualcert.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "disc/norms.hpp"

namespace disc {

int matching_n(std::int64_t n_points) {
    if (n_points < 1) throw std::invalid_argument("matching_n: need N >= 1");
    int n = 1;
    while ((std::int64_t{1} << n) < 2 * n_points) ++n;
    return n;
}

namespace {

bool n_matches(std::int64_t n_points, int n) {
    const std::int64_t pw = std::int64_t{1} << n;
    return 2 * n_points <= pw && pw <= 4 * n_points;
}

std::vector<SignedRFunction> hyperbolic_rfunctions(const PointSet& A, int n) {
    std::vector<SignedRFunction> fs;
    for (const auto& r : enumerate_shapes(n, A.dim)) fs.push_back(build_rfunction(A, r));
    return fs;
}

}  // namespace

GridFunction sum_hyperbolic_rfunctions(const PointSet& A,
                                       const std::vector<SignedRFunction>& fs,
                                       const CertificateConfig& cfg) {
    if (A.dim != 2) throw std::invalid_argument("sum_hyperbolic_rfunctions: d = 2 only");
    if (fs.empty()) throw std::invalid_argument("sum_hyperbolic_rfunctions: empty family");
    const int n = fs.front().shape.index();
    GridFunction acc = GridFunction::zeros({n, n}, cfg.grid_level_cap);
    for (const auto& f : fs) acc.add_refined(f.to_grid(cfg.grid_level_cap));
    return acc;
}

GridFunction build_Psi(const PointSet& A, const CertificateConfig& cfg) {
    if (A.dim != 2) throw std::invalid_argument("build_Psi: d = 2 only");
    if (cfg.n < 2) throw std::invalid_argument("build_Psi: need n >= 2");
    const auto fs = hyperbolic_rfunctions(A, cfg.n);
    GridFunction psi = sum_hyperbolic_rfunctions(A, fs, cfg);
    const double a = cfg.epsilon / std::sqrt(static_cast<double>(cfg.n));
    psi.transform([a](double v) { return std::sin(a * v); });
    return psi;
}

GridFunction build_Fs(const PointSet& A, const std::vector<int>& s, const CertificateConfig& cfg) {
    const int d = A.dim;
    if (d < 3) throw std::invalid_argument("build_Fs: d >= 3 only");
    if (static_cast<int>(s.size()) != d - 2)
        throw std::invalid_argument("build_Fs: prefix must have d-2 components");
    int s_total = 0;
    for (int v : s) {
        if (v < 1) throw std::invalid_argument("build_Fs: prefix components must be >= 1");
        s_total += v;
    }
    if (s_total >= cfg.n)
        throw std::invalid_argument("build_Fs: empty sum, need |s| < n");

    const int tail = cfg.n - s_total;  // budget for the last two coordinates
    std::vector<int> levels(d);
    for (int t = 0; t < d - 2; ++t) levels[t] = s[t] + 1;
    // the largest tail component is tail-1, living one level finer
    levels[d - 2] = levels[d - 1] = std::max(1, tail);
    GridFunction acc = GridFunction::zeros(levels, cfg.grid_level_cap);
    for (int r2 = 1; r2 <= tail - 1; ++r2) {
        ShapeVector r;
        r.components.assign(s.begin(), s.end());
        r.components.push_back(r2);
        r.components.push_back(tail - r2);
        acc.add_refined(build_rfunction(A, r).to_grid(cfg.grid_level_cap));
    }
    return acc;
}

GridFunction build_Phi(const PointSet& A, const CertificateConfig& cfg) {
    if (A.dim == 2) return build_Psi(A, cfg);
    const int d = A.dim;
    const double a = cfg.epsilon / std::sqrt(static_cast<double>(cfg.n));
    const double scale = std::pow(static_cast<double>(cfg.n), -0.5 * (d - 2));
    const int cap = cfg.s_cap(cfg.n);

    GridFunction acc;
    bool first = true;
    for (const auto& s : enumerate_prefixes(d - 2, std::min(cap, cfg.n - 1))) {
        GridFunction term = build_Fs(A, s, cfg);
        term.transform([a, scale](double v) { return scale * std::sin(a * v); });
        if (first) {
            acc = std::move(term);
            first = false;
        } else {
            const std::vector<int> lv = GridFunction::common_levels(acc, term);
            if (lv != acc.levels()) acc = acc.refined_to(lv, cfg.grid_level_cap);
            acc.add_refined(term);
        }
    }
    if (first) throw std::invalid_argument("build_Phi: no admissible prefix s");
    return acc;
}

GridFunction build_Gv(const PointSet& A, int v, const CertificateConfig& cfg) {
    if (A.dim != 2) throw std::invalid_argument("build_Gv: d = 2 only");
    const int h = cfg.n - 1;
    if (v < 1 || v > h) throw std::invalid_argument("build_Gv: need 1 <= v <= |family|");
    if (binomial(h, v) > 1'000'000)
        throw std::invalid_argument("build_Gv: too many subsets, refuse > 1e6");

    const auto fs = hyperbolic_rfunctions(A, cfg.n);
    std::vector<GridFunction> grids;
    grids.reserve(fs.size());
    for (const auto& f : fs)
        grids.push_back(f.to_grid(cfg.grid_level_cap).refined_to({cfg.n, cfg.n}, cfg.grid_level_cap));

    GridFunction acc = GridFunction::zeros({cfg.n, cfg.n}, cfg.grid_level_cap);
    std::vector<double> prod(static_cast<std::size_t>(acc.cells()));
    // Lexicographic v-combinations of {0,...,h-1}.
    std::vector<int> comb(v);
    for (int i = 0; i < v; ++i) comb[i] = i;
    while (true) {
        std::fill(prod.begin(), prod.end(), 1.0);
        for (int i = 0; i < v; ++i) {
            const auto& g = grids[comb[i]];
            for (std::int64_t c = 0; c < acc.cells(); ++c) prod[c] *= g[c];
        }
        for (std::int64_t c = 0; c < acc.cells(); ++c) acc[c] += prod[c];
        int pos = v - 1;
        while (pos >= 0 && comb[pos] == h - v + pos) --pos;
        if (pos < 0) break;
        ++comb[pos];
        for (int i = pos + 1; i < v; ++i) comb[i] = comb[i - 1] + 1;
    }
    return acc;
}

ProductRuleResult verify_product_rule(
    const std::vector<std::pair<SignedRFunction, int>>& factors) {
    if (factors.empty()) throw std::invalid_argument("verify_product_rule: no factors");
    const int n = factors.front().first.shape.index();
    std::vector<const SignedRFunction*> odd;
    for (const auto& [f, mult] : factors) {
        if (f.shape.dim() != 2)
            throw std::invalid_argument("verify_product_rule: d = 2 only");
        if (f.shape.index() != n)
            throw std::invalid_argument("verify_product_rule: factors must share one index");
        if (mult % 2) odd.push_back(&f);
    }
    if (odd.empty())
        throw std::invalid_argument(
            "verify_product_rule: need at least one odd-multiplicity factor");

    ProductRuleResult res;
    res.shape.components = {0, 0};
    for (const auto* f : odd)
        for (int t = 0; t < 2; ++t)
            res.shape.components[t] = std::max(res.shape.components[t], f->shape.components[t]);

    const std::vector<int> levels{res.shape.components[0] + 1, res.shape.components[1] + 1};
    GridFunction prod = GridFunction::constant(levels, 1.0);
    for (const auto* f : odd) {
        const GridFunction g = f->to_grid().refined_to(levels);
        for (std::int64_t c = 0; c < prod.cells(); ++c) prod[c] *= g[c];
    }

    // An r-function of shape s is +-1 everywhere and follows the quadrant
    // pattern (+, -, -, +) * eps_R on every shape-s rectangle.
    const std::int64_t n1 = prod.cells_along(0), n2 = prod.cells_along(1);
    for (std::int64_t i1 = 0; i1 < n1; i1 += 2)
        for (std::int64_t i2 = 0; i2 < n2; i2 += 2) {
            const double v00 = prod[i1 * n2 + i2];
            const double v01 = prod[i1 * n2 + i2 + 1];
            const double v10 = prod[(i1 + 1) * n2 + i2];
            const double v11 = prod[(i1 + 1) * n2 + i2 + 1];
            const bool ok = std::fabs(v00) == 1.0 && v00 == v11 && v01 == v10 && v01 == -v00;
            if (!ok) {
                res.is_r_function = false;
                res.witness_cell = i1 * n2 + i2;
                return res;
            }
        }
    res.is_r_function = true;
    return res;
}

std::int64_t count_products(int n, const ShapeVector& s, int v) {
    if (s.dim() != 2) throw std::invalid_argument("count_products: d = 2 only");
    if (v < 2 || v > n) throw std::invalid_argument("count_products: need 2 <= v <= n");
    if (s.index() < n + v - 1)
        throw std::invalid_argument("count_products: need |s| >= n+v-1");
    return binomial(s.index() - n - 1, v - 2);
}

std::int64_t gamma_prime(int m, int h) {
    if (m < 0 || m % 2) throw std::invalid_argument("gamma_prime: m must be even and >= 0");
    if (h < 1) throw std::invalid_argument("gamma_prime: need h >= 1");
    __int128 total = 0;
    for (int j = 0; j <= h; ++j) {
        __int128 pw = 1;
        const std::int64_t base = h - 2 * j;
        for (int e = 0; e < m; ++e) pw *= base;
        total += static_cast<__int128>(binomial(h, j)) * pw;
    }
    const __int128 denom = __int128{1} << h;
    if (total % denom != 0) throw std::logic_error("gamma_prime: moment not integral");
    total /= denom;
    if (total > INT64_MAX) throw std::overflow_error("gamma_prime: result exceeds int64");
    return static_cast<std::int64_t>(total);
}

double sine_subset_coefficient(int v, int h, double a) {
    if (v < 1 || v > h || v % 2 == 0)
        throw std::invalid_argument("sine_subset_coefficient: v must be odd, 1 <= v <= h");
    const double sgn = (v % 4 == 1) ? 1.0 : -1.0;
    return sgn * std::pow(std::sin(a), v) * std::pow(std::cos(a), h - v);
}

ExpansionCoefficients verify_Gv_expansion(int n, int k) {
    if (n < 2 || n > 8) throw std::invalid_argument("verify_Gv_expansion: need 2 <= n <= 8");
    if (k < 1 || k > 7 || k % 2 == 0)
        throw std::invalid_argument("verify_Gv_expansion: k must be odd, 1 <= k <= 7");
    const int h = n - 1;
    const std::size_t masks = std::size_t{1} << h;

    // Monomials reduce, via f^2 == 1, to the bitmask of odd-multiplicity
    // factors; multiply the mask polynomial by (sum_a x_a) k times.
    std::vector<std::int64_t> coeff(masks, 0), next(masks, 0);
    coeff[0] = 1;
    for (int step = 0; step < k; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (std::size_t m = 0; m < masks; ++m) {
            if (!coeff[m]) continue;
            for (int a = 0; a < h; ++a) next[m ^ (std::size_t{1} << a)] += coeff[m];
        }
        coeff.swap(next);
    }

    ExpansionCoefficients out;
    out.k = k;
    out.n = n;
    out.odd_only_ok = true;
    out.uniform_ok = true;
    for (std::size_t m = 0; m < masks; ++m) {
        const int v = std::popcount(m);
        if (v % 2 == 0) {
            if (coeff[m] != 0) out.odd_only_ok = false;
            continue;
        }
        auto it = out.c.find(v);
        if (it == out.c.end())
            out.c[v] = coeff[m];
        else if (it->second != coeff[m])
            out.uniform_ok = false;
    }
    // subsets larger than k cannot appear; drop their zero classes
    std::erase_if(out.c, [](const auto& kv) { return kv.second == 0; });
    for (const auto& [v, cv] : out.c) {
        const double g = static_cast<double>(cv) *
                         std::pow(static_cast<double>(n), -0.5 * (k - v));
        out.gamma[v] = g;
        if (k > v) {
            double fact_ratio = 1.0;  // k!/(k-v)!
            for (int i = k - v + 1; i <= k; ++i) fact_ratio *= i;
            const double c0 = std::pow(g / fact_ratio, 2.0 / (k - v)) / (k - v);
            out.measured_c0 = std::max(out.measured_c0, c0);
        }
    }
    return out;
}

PairingReport halasz_certificate(const PointSet& A, const CertificateConfig& cfg) {
    if (A.dim != 2) throw std::invalid_argument("halasz_certificate: d = 2 only");
    if (cfg.n < 2) throw std::invalid_argument("halasz_certificate: need n >= 2");
    PairingReport rep;
    rep.kind = "halasz";
    rep.dim = 2;
    rep.n = cfg.n;
    rep.n_points = A.size();
    rep.epsilon = cfg.epsilon;
    rep.n_matched = n_matches(A.size(), cfg.n);

    const auto fs = hyperbolic_rfunctions(A, cfg.n);
    const int h = static_cast<int>(fs.size());
    const double a = cfg.epsilon / std::sqrt(static_cast<double>(cfg.n));

    GridFunction psi = sum_hyperbolic_rfunctions(A, fs, cfg);
    psi.transform([a](double v) { return std::sin(a * v); });

    rep.pairing = pair_DN_grid(A, psi);
    rep.dual_norm = psi.sup_abs();
    rep.sup_norm = rep.dual_norm;
    rep.lower_bound = rep.dual_norm > 0 ? rep.pairing / rep.dual_norm : 0.0;

    PairwiseAcc g1;
    for (const auto& f : fs) g1.push(pair_DN_rfunction(A, f));
    rep.pairing_G1 = g1.total();
    rep.leading_delta1 =
        std::sqrt(static_cast<double>(cfg.n)) * sine_subset_coefficient(1, h, a);
    rep.leading_term =
        rep.leading_delta1 / std::sqrt(static_cast<double>(cfg.n)) * rep.pairing_G1;
    return rep;
}

namespace {

/// Fixed deterministic blocking for streamed reductions: per-row plain sums
/// pushed into a pairwise tree, independent of any chunking choices.
struct RowAcc {
    PairwiseAcc acc;
    void push_row(double row_total) { acc.push(row_total); }
    double total() const { return acc.total(); }
};

}  // namespace

PairingReport main_certificate(const PointSet& A, const CertificateConfig& cfg) {
    if (A.dim == 2) {
        PairingReport rep = halasz_certificate(A, cfg);
        rep.kind = "main";
        return rep;
    }
    if (A.dim != 3)
        throw std::invalid_argument("main_certificate: implemented for d in {2,3}");
    if (cfg.n < 4) throw std::invalid_argument("main_certificate: need n >= 4");

    PairingReport rep;
    rep.kind = "main";
    rep.dim = 3;
    rep.n = cfg.n;
    rep.n_points = A.size();
    rep.epsilon = cfg.epsilon;
    rep.n_matched = n_matches(A.size(), cfg.n);

    const double a = cfg.epsilon / std::sqrt(static_cast<double>(cfg.n));
    const double scale = 1.0 / std::sqrt(static_cast<double>(cfg.n));  // n^{-(d-2)/2}
    const int s_hi = std::min(cfg.s_cap(cfg.n), cfg.n - 2);

    // One sine slice per admissible prefix, each on its native grid.
    std::vector<GridFunction> slices;
    PairwiseAcc pair_acc;
    for (int s1 = 1; s1 <= s_hi; ++s1) {
        GridFunction fs = build_Fs(A, {s1}, cfg);
        fs.transform([a](double v) { return std::sin(a * v); });
        const double p = pair_DN_grid(A, fs);
        rep.per_s.emplace_back("s=" + std::to_string(s1), p);
        pair_acc.push(p);
        slices.push_back(std::move(fs));
    }
    rep.pairing = scale * pair_acc.total();  // exact by linearity of the pairing

    // Stream over the common lattice: sup |Phi|, the iterated square bound,
    // and the p-norm ladder, without materializing the common grid.
    std::vector<int> L(3, 0);
    for (const auto& g : slices)
        for (int t = 0; t < 3; ++t) L[t] = std::max(L[t], g.levels()[t]);
    const std::int64_t n1 = std::int64_t{1} << L[0], n2 = std::int64_t{1} << L[1],
                       n3 = std::int64_t{1} << L[2];
    const int ns = static_cast<int>(slices.size());
    std::vector<int> sh1(ns), sh2(ns), sh3(ns);
    std::vector<std::int64_t> g2(ns), g3(ns);
    std::vector<const double*> vals(ns);
    for (int i = 0; i < ns; ++i) {
        const auto& lv = slices[i].levels();
        sh1[i] = L[0] - lv[0];
        sh2[i] = L[1] - lv[1];
        sh3[i] = L[2] - lv[2];
        g2[i] = std::int64_t{1} << lv[1];
        g3[i] = std::int64_t{1} << lv[2];
        vals[i] = slices[i].values().data();
    }
    static constexpr std::array<int, 9> kPs = kPnormLadder;
    std::array<RowAcc, kPs.size()> pacc;
    double sup_phi = 0.0, max_sq = 0.0;
    std::vector<std::int64_t> base(ns);
    for (std::int64_t i1 = 0; i1 < n1; ++i1) {
        for (std::int64_t i2 = 0; i2 < n2; ++i2) {
            for (int i = 0; i < ns; ++i)
                base[i] = ((i1 >> sh1[i]) * g2[i] + (i2 >> sh2[i])) * g3[i];
            std::array<double, kPs.size()> row{};
            for (std::int64_t i3 = 0; i3 < n3; ++i3) {
                double sum = 0.0, sq = 0.0;
                for (int i = 0; i < ns; ++i) {
                    const double v = vals[i][base[i] + (i3 >> sh3[i])];
                    sum += v;
                    sq += v * v;
                }
                max_sq = std::max(max_sq, sq);
                const double u = std::fabs(scale * sum);
                sup_phi = std::max(sup_phi, u);
                const double u2 = u * u, u4 = u2 * u2, u8 = u4 * u4, u16 = u8 * u8;
                row[0] += u2;
                row[1] += u2 * u;
                row[2] += u4;
                row[3] += u4 * u2;
                row[4] += u8;
                row[5] += u8 * u4;
                row[6] += u16;
                row[7] += u16 * u8;
                row[8] += u16 * u16;
            }
            for (std::size_t i = 0; i < kPs.size(); ++i) pacc[i].push_row(row[i]);
        }
    }
    const double cell_vol = 1.0 / static_cast<double>(n1 * n2 * n3);
    for (std::size_t i = 0; i < kPs.size(); ++i)
        rep.pnorms[kPs[i]] = std::pow(pacc[i].total() * cell_vol, 1.0 / kPs[i]);
    rep.sup_norm = sup_phi;
    rep.iterated_square_max = scale * std::sqrt(max_sq);

    // Dual norm: p-sup surrogate for exp(L^{2/(d-1)}) = exp(L^1) at d = 3.
    const double alpha = 2.0 / (rep.dim - 1);
    double dual = 0.0;
    for (std::size_t i = 0; i < kPs.size(); ++i)
        dual = std::max(dual, std::pow(static_cast<double>(kPs[i]), -1.0 / alpha) *
                                  rep.pnorms[kPs[i]]);
    rep.dual_norm = dual;
    rep.lower_bound = dual > 0 ? rep.pairing / dual : 0.0;
    return rep;
}

}  // namespace disc

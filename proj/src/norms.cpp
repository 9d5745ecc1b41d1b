#include "disc/norms.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace disc {

OrliczGauge OrliczGauge::exp_alpha(double alpha) {
    if (!(alpha > 0)) throw std::invalid_argument("exp_alpha: alpha must be positive");
    double t0 = 0.0;
    if (alpha < 1.0) t0 = std::pow((1.0 - alpha) / alpha, 1.0 / alpha);
    return {Kind::ExpAlpha, alpha, t0};
}

OrliczGauge OrliczGauge::llog_alpha(double alpha) {
    if (alpha < 0) throw std::invalid_argument("llog_alpha: alpha must be >= 0");
    return {Kind::LLogAlpha, alpha, 0.0};
}

double OrliczGauge::operator()(double x) const {
    x = std::fabs(x);
    if (kind == Kind::ExpAlpha) {
        if (x <= t0) {
            // Linear through the origin, matching e^{t0^alpha}-1 at t0.
            if (t0 == 0.0) return std::expm1(std::pow(x, alpha));
            return x * std::expm1(std::pow(t0, alpha)) / t0;
        }
        return std::expm1(std::pow(x, alpha));
    }
    if (alpha == 0.0) return x;
    return x * std::pow(std::log(3.0 + x), alpha);
}

std::string OrliczGauge::name() const {
    char buf[48];
    std::snprintf(buf, sizeof buf, kind == Kind::ExpAlpha ? "exp(L^%g)" : "L(logL)^%g", alpha);
    return buf;
}

namespace {

double gauge_mean(const GridFunction& g, const OrliczGauge& psi, double k) {
    PairwiseAcc acc;
    for (double v : g.values()) acc.push(psi(v / k));
    return acc.total() * g.cell_volume();
}

}  // namespace

NormReport orlicz_norm(const GridFunction& g, const OrliczGauge& gauge) {
    NormReport rep;
    rep.gauge = gauge.name();
    rep.method = "bisection";
    const double sup = g.sup_abs();
    if (sup == 0.0) {
        rep.method = "exact";
        return rep;
    }
    double lo = sup, hi = sup;
    int it = 0;
    while (gauge_mean(g, gauge, hi) > 1.0) {
        hi *= 2.0;
        ++it;
    }
    while (gauge_mean(g, gauge, lo) <= 1.0) {
        lo *= 0.5;
        ++it;
        if (lo < 1e-300) break;  // g is tiny; hi is already a fine answer
    }
    double mid = hi, e = 0.0;
    for (; it < 500; ++it) {
        mid = 0.5 * (lo + hi);
        e = gauge_mean(g, gauge, mid);
        if (std::fabs(e - 1.0) <= 1e-11) break;
        if (e > 1.0)
            lo = mid;
        else
            hi = mid;
        if ((hi - lo) <= 1e-14 * hi) {
            mid = hi;  // inf side of the bracket
            e = gauge_mean(g, gauge, mid);
            break;
        }
    }
    rep.value = mid;
    rep.residual = std::fabs(e - 1.0);
    rep.iterations = it;
    return rep;
}

double exp_orlicz_via_pnorms(const GridFunction& g, double alpha) {
    double best = 0.0;
    for (int p : kPnormLadder)
        best = std::max(best, std::pow(static_cast<double>(p), -1.0 / alpha) *
                                  g.pnorm(static_cast<double>(p)));
    return best;
}

DualPairingReport dual_pairing_check(const GridFunction& f, const GridFunction& g, double alpha) {
    DualPairingReport rep;
    rep.norm_f = orlicz_norm(f, OrliczGauge::llog_alpha(alpha)).value;
    rep.norm_g = orlicz_norm(g, OrliczGauge::exp_alpha(1.0 / alpha)).value;
    if (rep.norm_f == 0.0 || rep.norm_g == 0.0) {
        rep.skipped = true;
        return rep;
    }
    rep.inner = GridFunction::combine(f, g, [](double a, double b) { return a * b; }).integral();
    rep.ratio = std::fabs(rep.inner) / (rep.norm_f * rep.norm_g);
    return rep;
}

RademacherReport rademacher_checks(std::span<const double> c, double lambda, double p) {
    if (c.size() > 20) throw std::invalid_argument("rademacher_checks: at most 20 coefficients");
    if (!(p > 0)) throw std::invalid_argument("rademacher_checks: p must be positive");
    const std::uint32_t patterns = 1u << c.size();
    PairwiseAcc mgf, pmom;
    for (std::uint32_t bits = 0; bits < patterns; ++bits) {
        double s = 0.0;
        for (std::size_t j = 0; j < c.size(); ++j) s += ((bits >> j) & 1) ? c[j] : -c[j];
        mgf.push(std::exp(lambda * s));
        pmom.push(std::pow(std::fabs(s), p));
    }
    const double inv = 1.0 / static_cast<double>(patterns);
    double sq = 0.0;
    for (double cj : c) sq += cj * cj;

    RademacherReport rep;
    rep.mgf_lhs = mgf.total() * inv;
    rep.mgf_rhs = std::exp(0.5 * lambda * lambda * sq);
    rep.mgf_ok = rep.mgf_lhs <= rep.mgf_rhs * (1.0 + 1e-12);
    rep.pnorm_lhs = std::pow(pmom.total() * inv, 1.0 / p);
    rep.pnorm_rhs = std::sqrt(p) * std::sqrt(sq);
    rep.khintchine_ok = p < 2.0 || rep.pnorm_lhs <= rep.pnorm_rhs * (1.0 + 1e-12);
    return rep;
}

GridFunction dn_cell_average_grid(const PointSet& A, const std::vector<int>& levels,
                                  int level_cap) {
    if (static_cast<int>(levels.size()) != A.dim)
        throw std::invalid_argument("dn_cell_average_grid: dimension mismatch");
    const int d = A.dim;
    GridFunction g = GridFunction::zeros(levels, level_cap);
    std::vector<std::int64_t> n(d), stride(d);
    std::int64_t s = 1;
    for (int t = 0; t < d; ++t) n[t] = g.cells_along(t);
    for (int t = d - 1; t >= 0; --t) {
        stride[t] = s;
        s *= n[t];
    }

    // Counting part. The cell average of x |-> #(A in [0,x)) is, per point,
    // the product over t of the covered fraction of [p_t,1) in the cell; a
    // product of per-axis staircases, so scatter each point onto its 2^d
    // upper corner cells and take inclusive prefix sums along every axis.
    std::vector<std::int64_t> b(d);
    std::vector<double> frac(d);
    for (std::int64_t i = 0; i < A.size(); ++i) {
        const auto p = A.point(i);
        for (int t = 0; t < d; ++t) {
            auto c = static_cast<std::int64_t>(p[t] * static_cast<double>(n[t]));
            if (c >= n[t]) c = n[t] - 1;
            b[t] = c;
            frac[t] = static_cast<double>(c + 1) - p[t] * static_cast<double>(n[t]);
        }
        for (std::uint32_t corner = 0; corner < (1u << d); ++corner) {
            double w = 1.0;
            std::int64_t idx = 0;
            bool in_range = true;
            for (int t = 0; t < d; ++t) {
                const bool hi = (corner >> t) & 1;
                w *= hi ? 1.0 - frac[t] : frac[t];
                const std::int64_t jt = b[t] + (hi ? 1 : 0);
                if (jt >= n[t]) {
                    in_range = false;
                    break;
                }
                idx += jt * stride[t];
            }
            if (in_range && w != 0.0) g[idx] += w;
        }
    }
    for (int axis = 0; axis < d; ++axis) {
        const std::int64_t outer = g.cells() / n[axis];
        for (std::int64_t o = 0; o < outer; ++o) {
            std::int64_t rem = o, base = 0;
            for (int t = d - 1; t >= 0; --t) {
                if (t == axis) continue;
                base += (rem % n[t]) * stride[t];
                rem /= n[t];
            }
            for (std::int64_t j = 1; j < n[axis]; ++j)
                g[base + j * stride[axis]] += g[base + (j - 1) * stride[axis]];
        }
    }

    // Linear part: exact cell average of N prod x_t is N times the product of
    // cell midpoints.
    {
        std::vector<std::int64_t> idx(d, 0);
        std::vector<double> inv(d);
        for (int t = 0; t < d; ++t) inv[t] = 1.0 / static_cast<double>(n[t]);
        const auto N = static_cast<double>(A.size());
        for (std::int64_t i = 0; i < g.cells(); ++i) {
            double mids = 1.0;
            for (int t = 0; t < d; ++t) mids *= (static_cast<double>(idx[t]) + 0.5) * inv[t];
            g[i] -= N * mids;
            for (int t = d - 1; t >= 0; --t) {
                if (++idx[t] < n[t]) break;
                idx[t] = 0;
            }
        }
    }
    return g;
}

std::vector<DnNormRow> dn_norm_suite(const PointSet& A, const std::vector<int>& levels,
                                     int level_cap) {
    const GridFunction coarse = dn_cell_average_grid(A, levels, level_cap);
    std::vector<int> finer(levels);
    for (int& m : finer) ++m;
    const GridFunction fine = dn_cell_average_grid(A, finer, level_cap);

    const double llog_alpha = 0.5 * (A.dim - 2);
    const OrliczGauge gauge = OrliczGauge::llog_alpha(llog_alpha);

    auto row = [](std::string name, double v, double vf) {
        DnNormRow r;
        r.name = std::move(name);
        r.value = v;
        r.refined_value = vf;
        r.rel_change = vf == 0.0 ? 0.0 : std::fabs(v - vf) / std::fabs(vf);
        return r;
    };

    std::vector<DnNormRow> rows;
    rows.push_back(row("l1", coarse.pnorm(1.0), fine.pnorm(1.0)));
    rows.push_back(row("l2", coarse.pnorm(2.0), fine.pnorm(2.0)));
    rows.push_back(row("l1logl", orlicz_norm(coarse, gauge).value, orlicz_norm(fine, gauge).value));
    return rows;
}

}  // namespace disc

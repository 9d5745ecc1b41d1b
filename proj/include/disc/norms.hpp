#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "disc/grid.hpp"
#include "disc/pointset.hpp"

namespace disc {

/// Young functions for the two Orlicz families used throughout.
///
/// exp_alpha: psi(x) = e^{|x|^alpha} - 1. For alpha < 1 this is concave near
/// the origin, so below the convexity threshold t0 = ((1-alpha)/alpha)^{1/alpha}
/// the gauge continues linearly through the origin. Any splice that agrees at
/// infinity gives an equivalent norm; this one is fixed so results are
/// bit-reproducible.
///
/// llog_alpha: phi(x) = |x| * (log(3+|x|))^alpha, convex on [0,inf) for all
/// alpha > 0; alpha = 0 degenerates to |x| (plain L^1).
struct OrliczGauge {
    enum class Kind { ExpAlpha, LLogAlpha };
    Kind kind;
    double alpha;
    double t0;  // splice point; 0 when unused

    static OrliczGauge exp_alpha(double alpha);
    static OrliczGauge llog_alpha(double alpha);

    double operator()(double x) const;
    std::string name() const;
};

struct NormReport {
    double value = 0.0;
    std::string gauge;
    std::string method;    // "bisection" | "p-sup" | "exact"
    double residual = 0.0; // |E psi(f/K) - 1| at the returned K
    int iterations = 0;
};

/// Luxemburg norm inf{K > 0 : E psi(f/K) <= 1} by bisection on K; the
/// expectation is the cell-weighted mean over the unit cube.
NormReport orlicz_norm(const GridFunction& g, const OrliczGauge& gauge);

/// Fixed p-ladder standing in for sup_{p>1} p^{-1/alpha} ||f||_p.
inline constexpr std::array<int, 9> kPnormLadder{2, 3, 4, 6, 8, 12, 16, 24, 32};

double exp_orlicz_via_pnorms(const GridFunction& g, double alpha);

struct DualPairingReport {
    double inner = 0.0;
    double norm_f = 0.0;  // L(log L)^alpha
    double norm_g = 0.0;  // exp(L^{1/alpha})
    double ratio = 0.0;   // |<f,g>| / (norm_f * norm_g)
    bool skipped = false; // a factor had zero norm
};

DualPairingReport dual_pairing_check(const GridFunction& f, const GridFunction& g, double alpha);

struct RademacherReport {
    double mgf_lhs = 0.0;  // E exp(lambda sum c_j r_j), exact enumeration
    double mgf_rhs = 0.0;  // exp(lambda^2 sum c_j^2 / 2)
    bool mgf_ok = false;
    double pnorm_lhs = 0.0;  // ||sum c_j r_j||_p, exact enumeration
    double pnorm_rhs = 0.0;  // sqrt(p) * ||c||_2  (measured constant 1)
    bool khintchine_ok = false;
};

/// Exact enumeration over all 2^{|c|} sign patterns; |c| <= 20.
RademacherReport rademacher_checks(std::span<const double> c, double lambda, double p);

/// Exact cell averages of D_N at the given resolution: the counting part via
/// a corner scatter + prefix sums, the linear part via midpoint products
/// (both closed-form, no sampling).
GridFunction dn_cell_average_grid(const PointSet& A, const std::vector<int>& levels,
                                  int level_cap = kDefaultGridLevelCap);

struct DnNormRow {
    std::string name;
    double value = 0.0;
    double refined_value = 0.0;  // at one level finer per coordinate
    double rel_change = 0.0;
};

/// ||D_N||_1, ||D_N||_2 and the L(log L)^{(d-2)/2} norm at resolution m,
/// each with a refinement-convergence estimate at m+1.
std::vector<DnNormRow> dn_norm_suite(const PointSet& A, const std::vector<int>& levels,
                                     int level_cap = kDefaultGridLevelCap);

}  // namespace disc

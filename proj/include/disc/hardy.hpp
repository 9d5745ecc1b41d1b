#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "disc/discrepancy.hpp"
#include "disc/dyadic.hpp"
#include "disc/grid.hpp"
#include "disc/pointset.hpp"

namespace disc {

/// Average out coordinate t (0-based): the result is constant in x_t and is
/// represented at level 0 there. Idempotent.
GridFunction int_t(const GridFunction& g, int t);

/// <tilde D_N, h_R> where tilde D_N = prod_t (Id - Int_t) D_N. Each factor
/// Id - Int_t fixes every Haar function (they are mean zero side by side),
/// so this equals <D_N, h_R> for every dyadic R; computed in closed form.
double tilde_DN_coeff(const PointSet& A, const DyadicRectangle& R);

/// Cell averages of tilde D_N at the given resolution: the exact D_N cell
/// averages with every coordinate-average component projected out.
GridFunction tilde_DN_grid(const PointSet& A, const std::vector<int>& levels,
                           int level_cap = kDefaultGridLevelCap);

/// Square function restricted to the rectangles of the given shapes:
/// S = [sum_R <f,h_R>^2 / |R|^2 * 1_R]^{1/2}. The A-based overload uses the
/// closed-form coefficients of D_N (= those of tilde D_N).
GridFunction square_function(const PointSet& A, const std::vector<ShapeVector>& shapes,
                             int level_cap = kDefaultGridLevelCap);
GridFunction square_function(const GridFunction& g, const std::vector<ShapeVector>& shapes,
                             int level_cap = kDefaultGridLevelCap);

/// Iterated square function of the d >= 3 test function: group the sine
/// slices by the first k prefix coordinates, sum within groups, and take the
/// root of the sum of squared group sums, scaled by n^{-(d-2)/2}.
GridFunction iterated_square(const std::vector<std::pair<std::vector<int>, GridFunction>>& slices,
                             int k, int n, int d, int level_cap = kDefaultGridLevelCap);

/// Dyadic maximal function without absolute value:
/// M f(x) = sup over dyadic R containing x of |R|^{-1} int_R f, the sup
/// running over side levels 0..m_t (averages over rectangles finer than the
/// grid repeat cell values, so the truncation is exact for grid functions).
GridFunction maximal_function(const GridFunction& g);

struct GoodSet {
    ShapeVector shape;
    GridFunction region;  // indicator of the union of point-free rectangles
    double measure = 0.0;
};

/// One good set per shape of the index-n hyperbolic family.
std::vector<GoodSet> good_sets(const PointSet& A, int n);

struct HardyReport {
    int n = 0;
    int dim = 0;
    std::int64_t n_points = 0;
    std::int64_t J = 0;              // size of the hyperbolic family
    double min_good_measure = 0.0;   // min_r |G_r|
    double excess_measure = 0.0;     // measure{sum_r 1_{G_r} > J/4}
    std::map<double, double> sum_indicator_pnorm;  // p -> ||sum 1_{G_r}||_p
    std::map<double, double> sq_pnorm;             // p -> ||S(tilde D_N)||_p
    std::map<double, double> sq_ratio;             // p -> sq_pnorm / n^{(d-1)/2}
};

/// The square-function lower-bound pipeline: good sets, the pigeonhole mass
/// bound, and ||S(tilde D_N)||_p over the index-n shapes.
HardyReport hardy_lower_report(const PointSet& A, int n, const std::vector<double>& ps,
                               int level_cap = kDefaultGridLevelCap);

}  // namespace disc

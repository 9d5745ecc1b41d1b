#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "disc/dyadic.hpp"
#include "disc/grid.hpp"
#include "disc/pointset.hpp"

namespace disc {

/// D_N(x) = #(A intersect [0,x)) - N * vol[0,x). Components of x may equal 1;
/// the anchored box stays half-open there.
double eval_DN(const PointSet& A, std::span<const double> x);

/// Haar coefficient of the linear part -N*vol[0,x): exactly -N * 4^{-d} |R|^2.
double haar_coeff_linear(const DyadicRectangle& R, std::int64_t n_points);

/// Haar coefficient of x |-> 1{p in [0,x)} against h_R. Per coordinate, for
/// side [a,b) with midpoint m: (p-a) on [a,m), (b-p) on [m,b), 0 outside.
/// Nonzero for at most one rectangle per shape.
double haar_coeff_point(std::span<const double> p, const DyadicRectangle& R);

struct HaarCoefficient {
    DyadicRectangle rectangle;
    double point_part = 0.0;
    double linear_part = 0.0;
    double value() const { return point_part + linear_part; }
};

HaarCoefficient haar_coeff_DN(const PointSet& A, const DyadicRectangle& R);

/// All Haar coefficients of D_N for one shape, indexed like rectangle_at.
/// Built in O(N + 2^{|r|}): each point touches exactly one rectangle.
struct ShapeCoeffs {
    ShapeVector shape;
    std::vector<double> point_part;   // per rectangle
    std::vector<std::uint8_t> occupied;  // rectangle contains a point of A
    double linear_part = 0.0;            // shared by all rectangles of the shape

    double value(std::uint64_t i) const { return point_part[i] + linear_part; }
};

ShapeCoeffs shape_coeffs(const PointSet& A, const ShapeVector& r);

struct GoodBadPartition {
    ShapeVector shape;
    std::vector<std::uint64_t> good;  // rectangle indices free of points of A
    std::vector<std::uint64_t> bad;
};

GoodBadPartition classify_good(const PointSet& A, const ShapeVector& r);

/// f = sum over R of eps_R h_R with eps_R in {-1,+1}, indexed like
/// rectangle_at. Squares to 1 a.e. by construction.
struct SignedRFunction {
    ShapeVector shape;
    std::vector<std::int8_t> signs;

    GridFunction to_grid(int level_cap = kDefaultGridLevelCap) const;
};

/// Signs are sgn<D_N, h_R> with sgn(0) := +1 for determinism.
SignedRFunction build_rfunction(const PointSet& A, const ShapeVector& r);

/// <D_N, f> by closed forms; for f from build_rfunction this equals
/// sum_R |<D_N, h_R>|.
double pair_DN_rfunction(const PointSet& A, const SignedRFunction& f);

/// Pairings <D_N, f_s> for `draws` independent uniform sign assignments on
/// the shape-s family. Signs come from the documented counter-mode
/// splitmix64 stream (bit i of draw t), so the whole-family sign sum is
/// computed 64 rectangles at a time.
std::vector<double> pair_DN_random_signs(const PointSet& A, const ShapeVector& s, int draws,
                                         std::uint64_t seed);

/// Exact <D_N, g> for piecewise-constant g: suffix sums of cell integrals
/// give the point part as a multilinear corner lookup per point; the linear
/// part integrates x-moments cell by cell in closed form. All reductions are
/// deterministic pairwise trees.
double pair_DN_grid(const PointSet& A, const GridFunction& g);

}  // namespace disc

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace disc {

/// Half-open dyadic interval [j*2^-k, (j+1)*2^-k). Boundary points always
/// belong to the right sibling, so evaluation is total and unambiguous.
struct DyadicInterval {
    int level = 0;             // k >= 0
    std::uint64_t offset = 0;  // 0 <= j < 2^k

    double length() const { return 1.0 / static_cast<double>(std::uint64_t{1} << level); }
    double left() const { return static_cast<double>(offset) * length(); }
    double right() const { return static_cast<double>(offset + 1) * length(); }
    double midpoint() const { return (static_cast<double>(offset) + 0.5) * length(); }
    bool contains(double x) const { return x >= left() && x < right(); }

    DyadicInterval left_half() const { return {level + 1, 2 * offset}; }
    DyadicInterval right_half() const { return {level + 1, 2 * offset + 1}; }

    bool operator==(const DyadicInterval&) const = default;
};

/// h_I = -1 on the left half of I, +1 on the right half, 0 off I.
int haar_eval(const DyadicInterval& I, double x);

/// Product of dyadic intervals, one per coordinate.
struct DyadicRectangle {
    std::vector<DyadicInterval> sides;

    int dim() const { return static_cast<int>(sides.size()); }
    int level_sum() const;
    double volume() const;  // 2^{-sum of levels}

    bool operator==(const DyadicRectangle&) const = default;
};

/// Tensor Haar function: product of the per-side Haar values.
/// Throws std::invalid_argument on dimension mismatch.
int haar_eval(const DyadicRectangle& R, std::span<const double> x);

/// Shape of a rectangle family: d levels, all >= 1, with index n = sum.
/// Level-0 sides never appear in shapes (they do appear in DyadicRectangle,
/// e.g. for the maximal function); this matches the convention that the
/// hyperbolic family lives in {1,...,n}^d.
struct ShapeVector {
    std::vector<int> components;

    int dim() const { return static_cast<int>(components.size()); }
    int index() const;  // |r| = sum of components

    bool operator==(const ShapeVector&) const = default;
};

/// All compositions of n into d parts >= 1, lexicographic.
/// Count is C(n-1, d-1); empty when n < d.
std::vector<ShapeVector> enumerate_shapes(int n, int d);

/// All vectors in {1,2,...}^dims with component sum <= max_total,
/// lexicographic. Used to range over the prefix indices of the d >= 3
/// certificate.
std::vector<std::vector<int>> enumerate_prefixes(int dims, int max_total);

/// Number of rectangles of the given shape: 2^{|r|}.
std::uint64_t shape_rect_count(const ShapeVector& r);

/// Rectangle number `index` of the shape family, in row-major offset order
/// with coordinate 0 slowest (the same order GridFunction uses for cells).
DyadicRectangle rectangle_at(const ShapeVector& r, std::uint64_t index);

/// Index of the unique shape-r rectangle containing p (componentwise in [0,1)).
std::uint64_t rect_index_of_point(const ShapeVector& r, std::span<const double> p);

/// Exact binomial coefficient; throws std::overflow_error if it exceeds int64.
std::int64_t binomial(int n, int k);

}  // namespace disc

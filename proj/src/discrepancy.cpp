#include "disc/discrepancy.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "disc/prng.hpp"

namespace disc {

double eval_DN(const PointSet& A, std::span<const double> x) {
    if (static_cast<int>(x.size()) != A.dim)
        throw std::invalid_argument("eval_DN: dimension mismatch");
    std::int64_t count = 0;
    for (std::int64_t i = 0; i < A.size(); ++i) {
        const auto p = A.point(i);
        bool inside = true;
        for (int t = 0; t < A.dim; ++t)
            if (!(p[t] < x[t])) {
                inside = false;
                break;
            }
        count += inside;
    }
    double vol = 1.0;
    for (double xt : x) vol *= xt;
    return static_cast<double>(count) - static_cast<double>(A.size()) * vol;
}

double haar_coeff_linear(const DyadicRectangle& R, std::int64_t n_points) {
    const double r2 = R.volume() * R.volume();
    return -static_cast<double>(n_points) * std::pow(0.25, R.dim()) * r2;
}

double haar_coeff_point(std::span<const double> p, const DyadicRectangle& R) {
    if (static_cast<int>(p.size()) != R.dim())
        throw std::invalid_argument("haar_coeff_point: dimension mismatch");
    double v = 1.0;
    for (int t = 0; t < R.dim(); ++t) {
        const auto& I = R.sides[t];
        const double a = I.left(), b = I.right(), m = I.midpoint(), x = p[t];
        if (x >= a && x < m)
            v *= x - a;
        else if (x >= m && x < b)
            v *= b - x;
        else
            return 0.0;
    }
    return v;
}

HaarCoefficient haar_coeff_DN(const PointSet& A, const DyadicRectangle& R) {
    HaarCoefficient c;
    c.rectangle = R;
    c.linear_part = haar_coeff_linear(R, A.size());
    PairwiseAcc acc;
    for (std::int64_t i = 0; i < A.size(); ++i) acc.push(haar_coeff_point(A.point(i), R));
    c.point_part = acc.total();
    return c;
}

ShapeCoeffs shape_coeffs(const PointSet& A, const ShapeVector& r) {
    if (r.dim() != A.dim) throw std::invalid_argument("shape_coeffs: dimension mismatch");
    ShapeCoeffs sc;
    sc.shape = r;
    const std::uint64_t count = shape_rect_count(r);
    sc.point_part.assign(count, 0.0);
    sc.occupied.assign(count, 0);
    for (std::int64_t i = 0; i < A.size(); ++i) {
        const auto p = A.point(i);
        const std::uint64_t idx = rect_index_of_point(r, p);
        sc.occupied[idx] = 1;
        sc.point_part[idx] += haar_coeff_point(p, rectangle_at(r, idx));
    }
    DyadicRectangle any = rectangle_at(r, 0);
    sc.linear_part = haar_coeff_linear(any, A.size());
    return sc;
}

GoodBadPartition classify_good(const PointSet& A, const ShapeVector& r) {
    GoodBadPartition part;
    part.shape = r;
    const std::uint64_t count = shape_rect_count(r);
    std::vector<std::uint8_t> occupied(count, 0);
    for (std::int64_t i = 0; i < A.size(); ++i) occupied[rect_index_of_point(r, A.point(i))] = 1;
    for (std::uint64_t j = 0; j < count; ++j)
        (occupied[j] ? part.bad : part.good).push_back(j);
    return part;
}

GridFunction SignedRFunction::to_grid(int level_cap) const {
    std::vector<int> levels(shape.components.size());
    for (int t = 0; t < shape.dim(); ++t) levels[t] = shape.components[t] + 1;
    GridFunction g = GridFunction::zeros(levels, level_cap);
    const int d = shape.dim();
    std::vector<std::int64_t> idx(d, 0);
    for (std::int64_t i = 0; i < g.cells(); ++i) {
        std::uint64_t rect = 0;
        int h = 1;
        for (int t = 0; t < d; ++t) {
            rect = rect * (std::uint64_t{1} << shape.components[t]) +
                   static_cast<std::uint64_t>(idx[t] >> 1);
            h *= (idx[t] & 1) ? 1 : -1;
        }
        g[i] = static_cast<double>(signs[rect] * h);
        for (int t = d - 1; t >= 0; --t) {
            if (++idx[t] < g.cells_along(t)) break;
            idx[t] = 0;
        }
    }
    return g;
}

SignedRFunction build_rfunction(const PointSet& A, const ShapeVector& r) {
    const ShapeCoeffs sc = shape_coeffs(A, r);
    SignedRFunction f;
    f.shape = r;
    f.signs.resize(sc.point_part.size());
    for (std::uint64_t j = 0; j < f.signs.size(); ++j)
        f.signs[j] = sc.value(j) < 0.0 ? -1 : 1;
    return f;
}

double pair_DN_rfunction(const PointSet& A, const SignedRFunction& f) {
    const ShapeCoeffs sc = shape_coeffs(A, f.shape);
    if (f.signs.size() != sc.point_part.size())
        throw std::invalid_argument("pair_DN_rfunction: sign table has wrong cardinality");
    PairwiseAcc acc;
    for (std::uint64_t j = 0; j < f.signs.size(); ++j)
        acc.push(static_cast<double>(f.signs[j]) * sc.value(j));
    return acc.total();
}

std::vector<double> pair_DN_random_signs(const PointSet& A, const ShapeVector& s, int draws,
                                         std::uint64_t seed) {
    const ShapeCoeffs sc = shape_coeffs(A, s);
    const std::uint64_t count = shape_rect_count(s);
    const std::uint64_t words = (count + 63) / 64;

    // Point contributions, deduplicated per occupied rectangle.
    std::vector<std::uint64_t> occupied_idx;
    for (std::uint64_t j = 0; j < count; ++j)
        if (sc.occupied[j]) occupied_idx.push_back(j);

    std::vector<double> out;
    out.reserve(draws);
    for (int t = 0; t < draws; ++t) {
        const std::uint64_t key = splitmix64_at(seed, static_cast<std::uint64_t>(t));
        // Sum of all 2^{|s|} signs, 64 rectangles per RNG word.
        std::int64_t sign_sum = 0;
        for (std::uint64_t w = 0; w < words; ++w) {
            std::uint64_t bits = splitmix64_at(key, w);
            if (w == words - 1 && (count & 63)) bits &= (std::uint64_t{1} << (count & 63)) - 1;
            const int width = (w == words - 1 && (count & 63)) ? static_cast<int>(count & 63) : 64;
            sign_sum += 2 * std::popcount(bits) - width;
        }
        PairwiseAcc acc;
        for (std::uint64_t j : occupied_idx) {
            const std::uint64_t bit = (splitmix64_at(key, j >> 6) >> (j & 63)) & 1;
            acc.push((bit ? 1.0 : -1.0) * sc.point_part[j]);
        }
        out.push_back(acc.total() + static_cast<double>(sign_sum) * sc.linear_part);
    }
    return out;
}

double pair_DN_grid(const PointSet& A, const GridFunction& g) {
    if (g.dim() != A.dim) throw std::invalid_argument("pair_DN_grid: dimension mismatch");
    const int d = g.dim();

    // Padded suffix sums of cell integrals: P(j) = sum_{i >= j} g(i) * vol.
    // <1{p in [0,x)}, g> is then the multilinear interpolation of P at p.
    std::vector<std::int64_t> n(d), pstride(d);
    std::int64_t padded = 1;
    for (int t = 0; t < d; ++t) n[t] = g.cells_along(t);
    for (int t = d - 1; t >= 0; --t) {
        pstride[t] = padded;
        padded *= n[t] + 1;
    }
    std::vector<double> suffix(static_cast<std::size_t>(padded), 0.0);
    {
        const double vol = g.cell_volume();
        std::vector<std::int64_t> idx(d, 0);
        for (std::int64_t i = 0; i < g.cells(); ++i) {
            std::int64_t pj = 0;
            for (int t = 0; t < d; ++t) pj += idx[t] * pstride[t];
            suffix[static_cast<std::size_t>(pj)] = g[i] * vol;
            for (int t = d - 1; t >= 0; --t) {
                if (++idx[t] <= n[t] - 1) break;
                idx[t] = 0;
            }
        }
        // In-place reverse scan along each axis over the padded box.
        for (int axis = 0; axis < d; ++axis) {
            std::vector<std::int64_t> it(d, 0);
            const std::int64_t outer = padded / (n[axis] + 1);
            for (std::int64_t o = 0; o < outer; ++o) {
                // Decode o into indices of the other axes.
                std::int64_t rem = o, base = 0;
                for (int t = d - 1; t >= 0; --t) {
                    if (t == axis) continue;
                    const std::int64_t sz = n[t] + 1;
                    base += (rem % sz) * pstride[t];
                    rem /= sz;
                }
                for (std::int64_t j = n[axis] - 1; j >= 0; --j)
                    suffix[static_cast<std::size_t>(base + j * pstride[axis])] +=
                        suffix[static_cast<std::size_t>(base + (j + 1) * pstride[axis])];
            }
            (void)it;
        }
    }

    // Point part: multilinear corner lookup per point.
    PairwiseAcc point_acc;
    std::vector<std::int64_t> j(d);
    std::vector<double> wlo(d);
    for (std::int64_t i = 0; i < A.size(); ++i) {
        const auto p = A.point(i);
        for (int t = 0; t < d; ++t) {
            auto c = static_cast<std::int64_t>(p[t] * static_cast<double>(n[t]));
            if (c >= n[t]) c = n[t] - 1;
            j[t] = c;
            // Covered fraction of the cell to the right of p[t].
            wlo[t] = static_cast<double>(c + 1) - p[t] * static_cast<double>(n[t]);
        }
        double v = 0.0;
        for (std::uint32_t corner = 0; corner < (1u << d); ++corner) {
            double w = 1.0;
            std::int64_t pj = 0;
            for (int t = 0; t < d; ++t) {
                const bool hi = (corner >> t) & 1;
                w *= hi ? 1.0 - wlo[t] : wlo[t];
                pj += (j[t] + (hi ? 1 : 0)) * pstride[t];
            }
            if (w != 0.0) v += w * suffix[static_cast<std::size_t>(pj)];
        }
        point_acc.push(v);
    }

    // Linear part: integral of g(x) * prod x_t, cell by cell in closed form.
    PairwiseAcc lin_acc;
    {
        const double vol = g.cell_volume();
        std::vector<std::int64_t> idx(d, 0);
        std::vector<double> inv(d);
        for (int t = 0; t < d; ++t) inv[t] = 1.0 / static_cast<double>(n[t]);
        for (std::int64_t i = 0; i < g.cells(); ++i) {
            double mids = 1.0;
            for (int t = 0; t < d; ++t)
                mids *= (static_cast<double>(idx[t]) + 0.5) * inv[t];
            lin_acc.push(g[i] * vol * mids);
            for (int t = d - 1; t >= 0; --t) {
                if (++idx[t] <= n[t] - 1) break;
                idx[t] = 0;
            }
        }
    }

    return point_acc.total() - static_cast<double>(A.size()) * lin_acc.total();
}

}  // namespace disc

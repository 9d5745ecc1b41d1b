#include "disc/grid.hpp"

#include <cmath>

namespace disc {

double pairwise_sum(std::span<const double> xs) {
    // Recursive halving with a small sequential base block.
    if (xs.size() <= 32) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

namespace {

void check_levels(const std::vector<int>& levels, int cap) {
    if (levels.empty()) throw std::invalid_argument("GridFunction: empty level vector");
    int total = 0;
    for (int m : levels) {
        if (m < 0) throw std::invalid_argument("GridFunction: negative level");
        total += m;
    }
    if (total > cap)
        throw GridCapError("grid resolution " + std::to_string(total) +
                           " exceeds cap " + std::to_string(cap) +
                           "; use a sampling estimator or raise the cap explicitly");
}

}  // namespace

GridFunction GridFunction::zeros(std::vector<int> levels, int level_cap) {
    check_levels(levels, level_cap);
    GridFunction g;
    int total = 0;
    for (int m : levels) total += m;
    g.levels_ = std::move(levels);
    g.values_.assign(std::size_t{1} << total, 0.0);
    return g;
}

GridFunction GridFunction::constant(std::vector<int> levels, double c, int level_cap) {
    GridFunction g = zeros(std::move(levels), level_cap);
    for (auto& v : g.values_) v = c;
    return g;
}

int GridFunction::total_level() const {
    int s = 0;
    for (int m : levels_) s += m;
    return s;
}

double GridFunction::cell_volume() const {
    return 1.0 / static_cast<double>(std::uint64_t{1} << total_level());
}

std::int64_t GridFunction::cell_of(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim())
        throw std::invalid_argument("GridFunction::cell_of: dimension mismatch");
    std::int64_t idx = 0;
    for (int t = 0; t < dim(); ++t) {
        const std::int64_t n = cells_along(t);
        auto j = static_cast<std::int64_t>(x[t] * static_cast<double>(n));
        if (j < 0) j = 0;
        if (j >= n) j = n - 1;
        idx = idx * n + j;
    }
    return idx;
}

double GridFunction::value_at(std::span<const double> x) const {
    return values_[static_cast<std::size_t>(cell_of(x))];
}

GridFunction GridFunction::refined_to(const std::vector<int>& levels, int level_cap) const {
    if (static_cast<int>(levels.size()) != dim())
        throw std::invalid_argument("refined_to: dimension mismatch");
    for (int t = 0; t < dim(); ++t)
        if (levels[t] < levels_[t])
            throw std::invalid_argument("refined_to: target resolution is coarser");
    GridFunction out = zeros(levels, level_cap);
    out.add_refined(*this, 1.0);
    return out;
}

void GridFunction::add_refined(const GridFunction& g, double scale) {
    if (g.dim() != dim()) throw std::invalid_argument("add_refined: dimension mismatch");
    const int d = dim();
    std::vector<int> shift(d);
    for (int t = 0; t < d; ++t) {
        shift[t] = levels_[t] - g.levels_[t];
        if (shift[t] < 0) throw std::invalid_argument("add_refined: operand is finer than target");
    }
    // Odometer over fine cells, maintaining the coarse index incrementally.
    std::vector<std::int64_t> idx(d, 0);
    std::vector<std::int64_t> coarse_stride(d);
    std::int64_t s = 1;
    for (int t = d - 1; t >= 0; --t) {
        coarse_stride[t] = s;
        s *= g.cells_along(t);
    }
    const std::int64_t fine_cells = cells();
    const std::int64_t inner = cells_along(d - 1);
    const int inner_shift = shift[d - 1];
    const std::int64_t inner_coarse_stride = coarse_stride[d - 1];
    std::int64_t fine = 0;
    while (fine < fine_cells) {
        std::int64_t base = 0;
        for (int t = 0; t + 1 < d; ++t) base += (idx[t] >> shift[t]) * coarse_stride[t];
        for (std::int64_t i = 0; i < inner; ++i)
            values_[static_cast<std::size_t>(fine + i)] +=
                scale * g.values_[static_cast<std::size_t>(base + (i >> inner_shift) * inner_coarse_stride)];
        fine += inner;
        for (int t = d - 2; t >= 0; --t) {
            if (++idx[t] < cells_along(t)) break;
            idx[t] = 0;
        }
        if (d == 1) break;
    }
}

double GridFunction::integral() const {
    PairwiseAcc acc;
    for (double v : values_) acc.push(v);
    return acc.total() * cell_volume();
}

double GridFunction::pnorm(double p) const {
    if (!(p > 0)) throw std::invalid_argument("pnorm: p must be positive");
    PairwiseAcc acc;
    for (double v : values_) acc.push(std::pow(std::fabs(v), p));
    return std::pow(acc.total() * cell_volume(), 1.0 / p);
}

double GridFunction::sup_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::fabs(v));
    return m;
}

double GridFunction::max_value() const {
    double m = -HUGE_VAL;
    for (double v : values_) m = std::max(m, v);
    return m;
}

std::vector<int> GridFunction::common_levels(const GridFunction& a, const GridFunction& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("common_levels: dimension mismatch");
    std::vector<int> out(a.dim());
    for (int t = 0; t < a.dim(); ++t) out[t] = std::max(a.levels_[t], b.levels_[t]);
    return out;
}

GridFunction GridFunction::combine(const GridFunction& a, const GridFunction& b,
                                   const std::function<double(double, double)>& op,
                                   int level_cap) {
    const auto levels = common_levels(a, b);
    GridFunction fa = a.refined_to(levels, level_cap);
    const GridFunction fb = b.refined_to(levels, level_cap);
    for (std::int64_t i = 0; i < fa.cells(); ++i) fa[i] = op(fa[i], fb[i]);
    return fa;
}

GridFunction haar_grid(const DyadicRectangle& R, int level_cap) {
    std::vector<int> levels(R.sides.size());
    for (std::size_t t = 0; t < R.sides.size(); ++t) levels[t] = R.sides[t].level + 1;
    GridFunction g = GridFunction::zeros(levels, level_cap);
    const int d = g.dim();
    std::vector<std::int64_t> idx(d, 0);
    for (std::int64_t i = 0; i < g.cells(); ++i) {
        int v = 1;
        for (int t = 0; t < d; ++t) {
            // Cell idx[t] at level I.level+1 sits inside the level-I interval
            // idx[t]>>1; odd cells are the right half.
            const std::int64_t cell = idx[t];
            if (static_cast<std::uint64_t>(cell >> 1) != R.sides[t].offset) {
                v = 0;
                break;
            }
            v *= (cell & 1) ? 1 : -1;
        }
        g[i] = static_cast<double>(v);
        for (int t = d - 1; t >= 0; --t) {
            if (++idx[t] < g.cells_along(t)) break;
            idx[t] = 0;
        }
    }
    return g;
}

}  // namespace disc

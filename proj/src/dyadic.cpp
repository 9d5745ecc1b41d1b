#include "disc/dyadic.hpp"

#include <stdexcept>

namespace disc {

int haar_eval(const DyadicInterval& I, double x) {
    if (x < I.left() || x >= I.right()) return 0;
    return x < I.midpoint() ? -1 : 1;
}

int DyadicRectangle::level_sum() const {
    int s = 0;
    for (const auto& I : sides) s += I.level;
    return s;
}

double DyadicRectangle::volume() const {
    return 1.0 / static_cast<double>(std::uint64_t{1} << level_sum());
}

int haar_eval(const DyadicRectangle& R, std::span<const double> x) {
    if (static_cast<int>(x.size()) != R.dim())
        throw std::invalid_argument("haar_eval: point dimension does not match rectangle");
    int v = 1;
    for (int t = 0; t < R.dim(); ++t) {
        v *= haar_eval(R.sides[t], x[t]);
        if (v == 0) return 0;
    }
    return v;
}

int ShapeVector::index() const {
    int s = 0;
    for (int c : components) s += c;
    return s;
}

std::vector<ShapeVector> enumerate_shapes(int n, int d) {
    if (d < 1) throw std::invalid_argument("enumerate_shapes: d must be >= 1");
    std::vector<ShapeVector> out;
    if (n < d) return out;
    std::vector<int> cur(d, 1);
    // Walk compositions in lexicographic order, rightmost component implied.
    auto emit = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == d - 1) {
            cur[pos] = remaining;
            out.push_back(ShapeVector{cur});
            return;
        }
        for (int v = 1; v <= remaining - (d - 1 - pos); ++v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    emit(emit, 0, n);
    return out;
}

std::vector<std::vector<int>> enumerate_prefixes(int dims, int max_total) {
    if (dims < 1) throw std::invalid_argument("enumerate_prefixes: dims must be >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(dims, 1);
    auto emit = [&](auto&& self, int pos, int budget) -> void {
        if (pos == dims) {
            out.push_back(cur);
            return;
        }
        for (int v = 1; v <= budget - (dims - 1 - pos); ++v) {
            cur[pos] = v;
            self(self, pos + 1, budget - v);
        }
    };
    emit(emit, 0, max_total);
    return out;
}

std::uint64_t shape_rect_count(const ShapeVector& r) {
    return std::uint64_t{1} << r.index();
}

DyadicRectangle rectangle_at(const ShapeVector& r, std::uint64_t index) {
    DyadicRectangle R;
    R.sides.resize(r.dim());
    // Row-major decode, coordinate 0 slowest.
    for (int t = r.dim() - 1; t >= 0; --t) {
        const std::uint64_t n = std::uint64_t{1} << r.components[t];
        R.sides[t] = DyadicInterval{r.components[t], index % n};
        index /= n;
    }
    return R;
}

std::uint64_t rect_index_of_point(const ShapeVector& r, std::span<const double> p) {
    if (static_cast<int>(p.size()) != r.dim())
        throw std::invalid_argument("rect_index_of_point: dimension mismatch");
    std::uint64_t idx = 0;
    for (int t = 0; t < r.dim(); ++t) {
        const std::uint64_t n = std::uint64_t{1} << r.components[t];
        auto j = static_cast<std::uint64_t>(p[t] * static_cast<double>(n));
        if (j >= n) j = n - 1;  // p[t] < 1 by contract; guard rounding
        idx = idx * n + j;
    }
    return idx;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t acc = 1;
    for (int i = 1; i <= k; ++i) {
        __int128 next = static_cast<__int128>(acc) * (n - k + i);
        next /= i;  // exact: product of i consecutive integers is divisible by i!
        if (next > INT64_MAX) throw std::overflow_error("binomial: result exceeds int64");
        acc = static_cast<std::int64_t>(next);
    }
    return acc;
}

}  // namespace disc

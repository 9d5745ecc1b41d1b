#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "disc/dyadic.hpp"

namespace disc {

/// Allocation guard for dense grids: sum of per-coordinate levels.
/// 2^26 cells (~0.5 GB of doubles) is the default desk-scale ceiling.
inline constexpr int kDefaultGridLevelCap = 26;

struct GridCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Deterministic pairwise (binary-counter) accumulator. Results depend only
/// on the push order, never on block sizes, so reductions are run-to-run
/// identical.
class PairwiseAcc {
  public:
    void push(double x) {
        for (std::size_t i = 0;; ++i) {
            if (i == filled_.size()) {
                slots_.push_back(x);
                filled_.push_back(true);
                return;
            }
            if (!filled_[i]) {
                slots_[i] = x;
                filled_[i] = true;
                return;
            }
            x += slots_[i];
            filled_[i] = false;
        }
    }

    double total() const {
        double s = 0.0;
        for (std::size_t i = 0; i < slots_.size(); ++i)
            if (filled_[i]) s += slots_[i];
        return s;
    }

  private:
    std::vector<double> slots_;
    std::vector<bool> filled_;
};

double pairwise_sum(std::span<const double> xs);

/// Piecewise-constant function on the anisotropic dyadic grid of [0,1)^d:
/// resolution m = (m_1,...,m_d), one value per cell
/// prod_t [j_t 2^{-m_t}, (j_t+1) 2^{-m_t}). Values are stored row-major with
/// coordinate 0 slowest, matching rectangle_at's offset order.
class GridFunction {
  public:
    GridFunction() = default;

    static GridFunction zeros(std::vector<int> levels, int level_cap = kDefaultGridLevelCap);
    static GridFunction constant(std::vector<int> levels, double c,
                                 int level_cap = kDefaultGridLevelCap);

    int dim() const { return static_cast<int>(levels_.size()); }
    const std::vector<int>& levels() const { return levels_; }
    int total_level() const;
    std::int64_t cells() const { return static_cast<std::int64_t>(values_.size()); }
    double cell_volume() const;
    std::int64_t cells_along(int t) const { return std::int64_t{1} << levels_[t]; }

    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }
    double& operator[](std::int64_t i) { return values_[static_cast<std::size_t>(i)]; }
    double operator[](std::int64_t i) const { return values_[static_cast<std::size_t>(i)]; }

    /// Value on the cell containing x (componentwise in [0,1)).
    double value_at(std::span<const double> x) const;
    std::int64_t cell_of(std::span<const double> x) const;

    /// Copy at a finer resolution; target levels must dominate componentwise.
    GridFunction refined_to(const std::vector<int>& levels,
                            int level_cap = kDefaultGridLevelCap) const;

    /// this += scale * g, where g's levels are dominated by ours.
    void add_refined(const GridFunction& g, double scale = 1.0);

    template <class F>
    void transform(F&& f) {
        for (auto& v : values_) v = f(v);
    }

    double integral() const;           // sum of values * cell volume, pairwise
    double pnorm(double p) const;      // (integral of |.|^p)^{1/p}, p > 0
    double sup_abs() const;
    double max_value() const;

    static std::vector<int> common_levels(const GridFunction& a, const GridFunction& b);
    static GridFunction combine(const GridFunction& a, const GridFunction& b,
                                const std::function<double(double, double)>& op,
                                int level_cap = kDefaultGridLevelCap);

  private:
    std::vector<int> levels_;
    std::vector<double> values_;
};

/// h_R materialized on its native grid (each side one level finer than R).
GridFunction haar_grid(const DyadicRectangle& R, int level_cap = kDefaultGridLevelCap);

}  // namespace disc

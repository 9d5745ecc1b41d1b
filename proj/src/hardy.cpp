#include "disc/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "disc/norms.hpp"

namespace disc {

GridFunction int_t(const GridFunction& g, int t) {
    const int d = g.dim();
    if (t < 0 || t >= d) throw std::invalid_argument("int_t: bad coordinate index");
    std::vector<int> levels = g.levels();
    levels[t] = 0;
    GridFunction out = GridFunction::zeros(levels);
    const std::int64_t nt = g.cells_along(t);
    const double inv = 1.0 / static_cast<double>(nt);

    std::vector<std::int64_t> stride(d), ostride(d);
    std::int64_t s = 1, os = 1;
    for (int u = d - 1; u >= 0; --u) {
        stride[u] = s;
        s *= g.cells_along(u);
        ostride[u] = os;
        os *= out.cells_along(u);
    }
    std::vector<double> gather(static_cast<std::size_t>(nt));
    for (std::int64_t o = 0; o < out.cells(); ++o) {
        // Decode o into indices of the kept coordinates.
        std::int64_t rem = o, base = 0;
        for (int u = d - 1; u >= 0; --u) {
            const std::int64_t sz = out.cells_along(u);
            base += (rem % sz) * stride[u];
            rem /= sz;
        }
        for (std::int64_t j = 0; j < nt; ++j)
            gather[static_cast<std::size_t>(j)] = g[base + j * stride[t]];
        out[o] = pairwise_sum(gather) * inv;
    }
    return out;
}

double tilde_DN_coeff(const PointSet& A, const DyadicRectangle& R) {
    return haar_coeff_DN(A, R).value();
}

GridFunction tilde_DN_grid(const PointSet& A, const std::vector<int>& levels, int level_cap) {
    // Apply (Id - Int_t) one coordinate at a time; the projections commute,
    // so the sequence equals the full product.
    GridFunction g = dn_cell_average_grid(A, levels, level_cap);
    for (int t = 0; t < g.dim(); ++t) {
        const GridFunction avg = int_t(g, t);
        g.add_refined(avg, -1.0);
    }
    return g;
}

namespace {

GridFunction accumulate_square(const std::vector<ShapeVector>& shapes,
                               const std::function<void(const ShapeVector&, std::vector<double>&)>&
                                   fill_sq_terms,
                               int level_cap) {
    if (shapes.empty()) throw std::invalid_argument("square_function: no shapes");
    const int d = shapes.front().dim();
    std::vector<int> levels(d, 0);
    for (const auto& r : shapes) {
        if (r.dim() != d) throw std::invalid_argument("square_function: mixed dimensions");
        for (int t = 0; t < d; ++t) levels[t] = std::max(levels[t], r.components[t]);
    }
    GridFunction s2 = GridFunction::zeros(levels, level_cap);
    std::vector<double> terms;
    for (const auto& r : shapes) {
        terms.assign(static_cast<std::size_t>(shape_rect_count(r)), 0.0);
        fill_sq_terms(r, terms);
        GridFunction layer;
        {
            std::vector<int> lv(r.components);
            layer = GridFunction::zeros(lv, level_cap);
            for (std::int64_t c = 0; c < layer.cells(); ++c)
                layer[c] = terms[static_cast<std::size_t>(c)];
        }
        s2.add_refined(layer);
    }
    s2.transform([](double v) { return std::sqrt(v); });
    return s2;
}

}  // namespace

GridFunction square_function(const PointSet& A, const std::vector<ShapeVector>& shapes,
                             int level_cap) {
    return accumulate_square(
        shapes,
        [&A](const ShapeVector& r, std::vector<double>& terms) {
            const ShapeCoeffs sc = shape_coeffs(A, r);
            const double inv_vol = static_cast<double>(std::uint64_t{1} << r.index());
            for (std::size_t j = 0; j < terms.size(); ++j) {
                const double t = sc.value(j) * inv_vol;
                terms[j] = t * t;
            }
        },
        level_cap);
}

GridFunction square_function(const GridFunction& g, const std::vector<ShapeVector>& shapes,
                             int level_cap) {
    return accumulate_square(
        shapes,
        [&g, level_cap](const ShapeVector& r, std::vector<double>& terms) {
            // <g, h_R> for every R of the shape in one sweep of the common grid.
            std::vector<int> lv(r.components);
            for (int& m : lv) ++m;
            std::vector<int> common(g.levels());
            for (int t = 0; t < g.dim(); ++t) common[t] = std::max(common[t], lv[t]);
            const GridFunction fine = g.refined_to(common, level_cap);
            const int d = fine.dim();
            const double vol = fine.cell_volume();
            std::vector<std::int64_t> idx(d, 0);
            for (std::int64_t c = 0; c < fine.cells(); ++c) {
                std::uint64_t rect = 0;
                int hsign = 1;
                for (int t = 0; t < d; ++t) {
                    const std::int64_t half_cell = idx[t] >> (common[t] - lv[t]);
                    rect = rect * (std::uint64_t{1} << r.components[t]) +
                           static_cast<std::uint64_t>(half_cell >> 1);
                    hsign *= (half_cell & 1) ? 1 : -1;
                }
                terms[rect] += hsign * fine[c] * vol;
                for (int t = d - 1; t >= 0; --t) {
                    if (++idx[t] < fine.cells_along(t)) break;
                    idx[t] = 0;
                }
            }
            const double inv_vol = static_cast<double>(std::uint64_t{1} << r.index());
            for (double& t : terms) {
                const double w = t * inv_vol;
                t = w * w;
            }
        },
        level_cap);
}

GridFunction iterated_square(const std::vector<std::pair<std::vector<int>, GridFunction>>& slices,
                             int k, int n, int d, int level_cap) {
    if (slices.empty()) throw std::invalid_argument("iterated_square: no slices");
    if (k < 1 || k > d - 2) throw std::invalid_argument("iterated_square: need 1 <= k <= d-2");
    std::vector<int> levels(slices.front().second.levels());
    for (const auto& [s, g] : slices)
        for (int t = 0; t < static_cast<int>(levels.size()); ++t)
            levels[t] = std::max(levels[t], g.levels()[t]);

    std::map<std::vector<int>, GridFunction> groups;
    for (const auto& [s, g] : slices) {
        std::vector<int> key(s.begin(), s.begin() + k);
        auto it = groups.find(key);
        if (it == groups.end()) {
            groups.emplace(key, g.refined_to(levels, level_cap));
        } else {
            it->second.add_refined(g);
        }
    }
    GridFunction s2 = GridFunction::zeros(levels, level_cap);
    for (const auto& [key, g] : groups)
        for (std::int64_t c = 0; c < s2.cells(); ++c) s2[c] += g[c] * g[c];
    const double scale = std::pow(static_cast<double>(n), -0.5 * (d - 2));
    s2.transform([scale](double v) { return scale * std::sqrt(v); });
    return s2;
}

GridFunction maximal_function(const GridFunction& g) {
    const int d = g.dim();
    const std::vector<int>& m = g.levels();
    // Averages over every scale vector l <= m, derived by repeated halving;
    // the running maximum is kept on the full grid.
    std::map<std::vector<int>, GridFunction> avg;
    avg.emplace(m, g);
    GridFunction out = g;  // l = m layer

    // Enumerate scale vectors in decreasing total order so a finer neighbor
    // always exists.
    std::vector<std::vector<int>> lattice;
    {
        std::vector<int> cur(d, 0);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == d) {
                lattice.push_back(cur);
                return;
            }
            for (int v = 0; v <= m[pos]; ++v) {
                cur[pos] = v;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
        std::sort(lattice.begin(), lattice.end(),
                  [](const std::vector<int>& x, const std::vector<int>& y) {
                      int sx = 0, sy = 0;
                      for (int v : x) sx += v;
                      for (int v : y) sy += v;
                      if (sx != sy) return sx > sy;
                      return x < y;
                  });
    }
    for (const auto& l : lattice) {
        if (avg.count(l)) continue;
        // Find a coordinate where a one-finer layer exists.
        int axis = -1;
        std::vector<int> finer(l);
        for (int t = 0; t < d; ++t) {
            finer[t] += 1;
            if (finer[t] <= m[t] && avg.count(finer)) {
                axis = t;
                break;
            }
            finer[t] -= 1;
        }
        if (axis < 0) throw std::logic_error("maximal_function: lattice order broken");
        const GridFunction& src = avg.at(finer);
        GridFunction dst = GridFunction::zeros(l);
        std::vector<std::int64_t> sstride(d), dstride(d);
        std::int64_t ss = 1, ds = 1;
        for (int t = d - 1; t >= 0; --t) {
            sstride[t] = ss;
            ss *= src.cells_along(t);
            dstride[t] = ds;
            ds *= dst.cells_along(t);
        }
        for (std::int64_t o = 0; o < dst.cells(); ++o) {
            std::int64_t rem = o, sbase = 0;
            for (int t = d - 1; t >= 0; --t) {
                const std::int64_t j = rem % dst.cells_along(t);
                rem /= dst.cells_along(t);
                sbase += (t == axis ? 2 * j : j) * sstride[t];
            }
            dst[o] = 0.5 * (src[sbase] + src[sbase + sstride[axis]]);
        }
        avg.emplace(l, std::move(dst));
    }
    for (const auto& [l, layer] : avg) {
        if (l == m) continue;
        // out(cell) = max(out(cell), layer value over the containing rectangle)
        std::vector<int> shift(d);
        for (int t = 0; t < d; ++t) shift[t] = m[t] - l[t];
        std::vector<std::int64_t> lstride(d);
        std::int64_t ls = 1;
        for (int t = d - 1; t >= 0; --t) {
            lstride[t] = ls;
            ls *= layer.cells_along(t);
        }
        std::vector<std::int64_t> idx(d, 0);
        for (std::int64_t c = 0; c < out.cells(); ++c) {
            std::int64_t lbase = 0;
            for (int t = 0; t < d; ++t) lbase += (idx[t] >> shift[t]) * lstride[t];
            out[c] = std::max(out[c], layer[lbase]);
            for (int t = d - 1; t >= 0; --t) {
                if (++idx[t] < out.cells_along(t)) break;
                idx[t] = 0;
            }
        }
    }
    return out;
}

std::vector<GoodSet> good_sets(const PointSet& A, int n) {
    std::vector<GoodSet> out;
    for (const auto& r : enumerate_shapes(n, A.dim)) {
        const GoodBadPartition part = classify_good(A, r);
        GoodSet gs;
        gs.shape = r;
        gs.region = GridFunction::zeros(r.components);
        for (std::uint64_t j : part.good) gs.region[static_cast<std::int64_t>(j)] = 1.0;
        gs.measure = static_cast<double>(part.good.size()) /
                     static_cast<double>(shape_rect_count(r));
        out.push_back(std::move(gs));
    }
    return out;
}

HardyReport hardy_lower_report(const PointSet& A, int n, const std::vector<double>& ps,
                               int level_cap) {
    HardyReport rep;
    rep.n = n;
    rep.dim = A.dim;
    rep.n_points = A.size();

    const auto shapes = enumerate_shapes(n, A.dim);
    rep.J = static_cast<std::int64_t>(shapes.size());
    if (shapes.empty()) throw std::invalid_argument("hardy_lower_report: empty family");

    std::vector<int> levels(A.dim, 0);
    for (const auto& r : shapes)
        for (int t = 0; t < A.dim; ++t) levels[t] = std::max(levels[t], r.components[t]);

    GridFunction indicator_sum = GridFunction::zeros(levels, level_cap);
    rep.min_good_measure = 1.0;
    for (const auto& r : shapes) {
        const GoodBadPartition part = classify_good(A, r);
        GridFunction layer = GridFunction::zeros(r.components, level_cap);
        for (std::uint64_t j : part.good) layer[static_cast<std::int64_t>(j)] = 1.0;
        indicator_sum.add_refined(layer);
        rep.min_good_measure =
            std::min(rep.min_good_measure, static_cast<double>(part.good.size()) /
                                               static_cast<double>(shape_rect_count(r)));
    }

    // measure{sum > J/4}: the values are integers, so compare 4*value > J.
    {
        std::int64_t over = 0;
        for (double v : indicator_sum.values())
            if (4.0 * v > static_cast<double>(rep.J)) ++over;
        rep.excess_measure = static_cast<double>(over) * indicator_sum.cell_volume();
    }
    for (double p : ps) rep.sum_indicator_pnorm[p] = indicator_sum.pnorm(p);

    const GridFunction sq = square_function(A, shapes, level_cap);
    const double growth = std::pow(static_cast<double>(n), 0.5 * (A.dim - 1));
    for (double p : ps) {
        rep.sq_pnorm[p] = sq.pnorm(p);
        rep.sq_ratio[p] = rep.sq_pnorm[p] / growth;
    }
    return rep;
}

}  // namespace disc

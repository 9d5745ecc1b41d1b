#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "disc/dyadic.hpp"
#include "disc/grid.hpp"

using namespace disc;

TEST_CASE("haar evaluation on intervals") {
    const DyadicInterval unit{0, 0};
    CHECK(haar_eval(unit, 0.25) == -1);
    CHECK(haar_eval(unit, 0.5) == 1);  // boundary belongs to the right half
    CHECK(haar_eval(DyadicInterval{2, 2}, 0.25) == 0);
    CHECK(haar_eval(DyadicInterval{2, 2}, 0.5) == -1);
    CHECK(haar_eval(DyadicInterval{2, 2}, 0.625) == 1);
}

TEST_CASE("haar evaluation on rectangles") {
    DyadicRectangle R;
    R.sides = {DyadicInterval{0, 0}, DyadicInterval{0, 0}};
    const double a[2] = {0.25, 0.75};
    const double b[2] = {0.25, 0.25};
    CHECK(haar_eval(R, a) == -1);
    CHECK(haar_eval(R, b) == 1);
    DyadicRectangle Q;
    Q.sides = {DyadicInterval{1, 1}, DyadicInterval{1, 1}};
    CHECK(haar_eval(Q, b) == 0);
    const double wrong[3] = {0.1, 0.1, 0.1};
    CHECK_THROWS_AS(haar_eval(R, wrong), std::invalid_argument);
}

TEST_CASE("one-dimensional moment of every Haar function") {
    // integral of x h_I(x) dx = |I|^2 / 4, exact in binary arithmetic for
    // dyadic endpoints: evaluates to (b^2 + a^2 - 2 m^2)/2 with m the midpoint.
    for (int lv = 0; lv <= 8; ++lv)
        for (std::uint64_t j = 0; j < (std::uint64_t{1} << lv); ++j) {
            const DyadicInterval I{lv, j};
            const double a = I.left(), b = I.right(), m = I.midpoint();
            const double moment = 0.5 * ((b * b - m * m) - (m * m - a * a));
            CHECK(moment == 0.25 * I.length() * I.length());
            // and the mean of h_I vanishes
            CHECK((b - m) - (m - a) == 0.0);
        }
}

TEST_CASE("shape enumeration is lexicographic with binomial count") {
    const auto s42 = enumerate_shapes(4, 2);
    REQUIRE(s42.size() == 3);
    CHECK(s42[0].components == std::vector<int>{1, 3});
    CHECK(s42[1].components == std::vector<int>{2, 2});
    CHECK(s42[2].components == std::vector<int>{3, 1});

    CHECK(enumerate_shapes(5, 3).size() == 6);  // C(4,2)
    CHECK(enumerate_shapes(2, 3).empty());

    for (int d = 1; d <= 4; ++d)
        for (int n = d; n <= 20; ++n) {
            const auto shapes = enumerate_shapes(n, d);
            CHECK(static_cast<std::int64_t>(shapes.size()) == binomial(n - 1, d - 1));
            // growth comparison with n^{d-1}
            const double ratio = static_cast<double>(shapes.size()) /
                                 std::pow(static_cast<double>(n), d - 1);
            CHECK(ratio <= 1.0);
            double fact = 1.0;
            for (int i = 2; i < d; ++i) fact *= i;
            const double lo = (1.0 - static_cast<double>(d) * d / n) / fact;
            CHECK(ratio >= lo);
        }
}

TEST_CASE("rectangles of a shape tile the cube") {
    for (const auto& r : {ShapeVector{{1, 1}}, ShapeVector{{2, 1}}, ShapeVector{{1, 1, 1}}}) {
        const std::uint64_t count = shape_rect_count(r);
        CHECK(count == (std::uint64_t{1} << r.index()));
        std::vector<int> levels(r.components);
        GridFunction cover = GridFunction::zeros(levels);
        std::set<std::vector<std::uint64_t>> seen;
        for (std::uint64_t i = 0; i < count; ++i) {
            const DyadicRectangle R = rectangle_at(r, i);
            std::vector<std::uint64_t> key;
            for (const auto& I : R.sides) key.push_back(I.offset);
            CHECK(seen.insert(key).second);  // no duplicates
            // indicator accumulates on the cell grid
            std::int64_t cell = 0;
            for (int t = 0; t < r.dim(); ++t)
                cell = cell * cover.cells_along(t) + static_cast<std::int64_t>(R.sides[t].offset);
            cover[cell] += 1.0;
        }
        for (double v : cover.values()) CHECK(v == 1.0);
    }
}

TEST_CASE("rectangle index round trip through point lookup") {
    const ShapeVector r{{2, 3}};
    for (std::uint64_t i = 0; i < shape_rect_count(r); ++i) {
        const DyadicRectangle R = rectangle_at(r, i);
        const double p[2] = {R.sides[0].midpoint(), R.sides[1].midpoint()};
        CHECK(rect_index_of_point(r, p) == i);
    }
}

TEST_CASE("haar orthogonality on the grid") {
    // distinct rectangles of one shape are orthogonal; self inner product is |R|
    const ShapeVector r{{2, 1}};
    const std::uint64_t count = shape_rect_count(r);
    for (std::uint64_t i = 0; i < count; ++i)
        for (std::uint64_t j = i; j < count; ++j) {
            const GridFunction hi = haar_grid(rectangle_at(r, i));
            const GridFunction hj = haar_grid(rectangle_at(r, j));
            const double ip =
                GridFunction::combine(hi, hj, [](double a, double b) { return a * b; })
                    .integral();
            if (i == j)
                CHECK(ip == doctest::Approx(rectangle_at(r, i).volume()).epsilon(1e-12));
            else
                CHECK(ip == doctest::Approx(0.0).epsilon(1e-12));
        }
}

TEST_CASE("grid basics: integral, pnorm, refinement, cap") {
    const GridFunction h = haar_grid(DyadicRectangle{{DyadicInterval{0, 0}}});
    CHECK(h.integral() == 0.0);
    CHECK(h.pnorm(3.0) == doctest::Approx(1.0).epsilon(1e-12));

    GridFunction g = GridFunction::zeros({2, 1});
    for (std::int64_t i = 0; i < g.cells(); ++i) g[i] = static_cast<double>(i);
    const GridFunction fine = g.refined_to({4, 3});
    CHECK(fine.integral() == doctest::Approx(g.integral()).epsilon(1e-14));
    for (std::int64_t i = 0; i < fine.cells(); ++i) {
        // refinement preserves pointwise values
        const std::int64_t i1 = i / fine.cells_along(1), i2 = i % fine.cells_along(1);
        CHECK(fine[i] == g[(i1 >> 2) * g.cells_along(1) + (i2 >> 2)]);
    }

    CHECK_THROWS_AS(GridFunction::zeros({20, 20}), GridCapError);
    CHECK_THROWS_AS(GridFunction::zeros({5, 5}, 9), GridCapError);
    CHECK_NOTHROW(GridFunction::zeros({5, 5}, 10));
}

TEST_CASE("pairwise accumulator matches recursive pairwise sum") {
    std::vector<double> xs;
    for (int i = 0; i < 1000; ++i) xs.push_back(std::sin(i * 0.1) * std::exp(i % 7));
    PairwiseAcc acc;
    for (double x : xs) acc.push(x);
    // Both are exact reorderings of the same data; they agree to roundoff.
    CHECK(acc.total() == doctest::Approx(pairwise_sum(xs)).epsilon(1e-13));
}

TEST_CASE("grid product of an r-function pattern squares to one") {
    // f^2 == 1 for the all-plus signed family of any shape
    const ShapeVector r{{2, 2}};
    GridFunction f = GridFunction::zeros({3, 3});
    for (std::uint64_t i = 0; i < shape_rect_count(r); ++i)
        f.add_refined(haar_grid(rectangle_at(r, i)));
    const GridFunction sq = GridFunction::combine(f, f, [](double a, double b) { return a * b; });
    for (double v : sq.values()) CHECK(v == 1.0);
}

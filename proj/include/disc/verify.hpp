#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "disc/dyadic.hpp"
#include "disc/pointset.hpp"

namespace disc {

struct CheckResult {
    std::string name;
    bool passed = false;
    bool skipped = false;  // guard kept the check from running; not a failure
    double measured = 0.0;
    double bound = 0.0;
    std::string notes;
};

struct VerifyOptions {
    std::string family = "vdc";  // vdc | halton | random
    int dim = 2;
    int max_n = 8;
    std::uint64_t seed = 1;
    int sign_draws = 100;       // random sign assignments per shape
    int coeff_vectors = 200;    // random coefficient vectors for moment checks
};

/// Point set of the named family sized so that 2N <= 2^n <= 4N.
PointSet family_points(const std::string& family, int dim, int n, std::uint64_t seed);

/// Independent reference for <D_N, h_R>: integrate D_N over each half-box of
/// R in closed form (per-point overlap lengths and the x-moment of each
/// half), then combine with the Haar corner signs. Shares no code with the
/// per-point coefficient formulas it checks.
double haar_coeff_reference(const PointSet& A, const DyadicRectangle& R);

/// Named suites: props | expansion | khintchine | hardy | all.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace disc

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "disc/discrepancy.hpp"
#include "disc/dyadic.hpp"
#include "disc/grid.hpp"
#include "disc/pointset.hpp"

namespace disc {

/// Parameters of the dual-certificate constructions.
struct CertificateConfig {
    double epsilon = 0.2;  // amplitude inside the sine; must be small
    int n = 0;             // scale index, intended to satisfy 2N <= 2^n <= 4N
    int s_cap_num = 3;     // prefix-index cutoff |s| <= (s_cap_num/s_cap_den) n
    int s_cap_den = 4;
    int grid_level_cap = kDefaultGridLevelCap;

    int s_cap(int index) const { return (index * s_cap_num) / s_cap_den; }
};

/// Smallest n with 2N <= 2^n (then automatically 2^n < 4N for N >= 1).
int matching_n(std::int64_t n_points);

/// Sum of the hyperbolic r-functions built from A (d = 2), on the common
/// grid of resolution (n, n).
GridFunction sum_hyperbolic_rfunctions(const PointSet& A,
                                       const std::vector<SignedRFunction>& fs,
                                       const CertificateConfig& cfg);

/// Two-dimensional sine test function sin(eps n^{-1/2} sum_r f_r).
GridFunction build_Psi(const PointSet& A, const CertificateConfig& cfg);

/// Prefix slice of the hyperbolic family in d >= 3: the sum of f_r over
/// shapes r agreeing with s in the first d-2 coordinates. Has n-|s|-1
/// summands; identically zero when |s| = n-1; |s| >= n is an error.
GridFunction build_Fs(const PointSet& A, const std::vector<int>& s, const CertificateConfig& cfg);

/// Test function for d >= 3:
/// n^{-(d-2)/2} sum over |s| <= floor(3n/4) of sin(eps n^{-1/2} F_s).
/// For d = 2 this is exactly build_Psi (no prefix coordinates to restrict).
GridFunction build_Phi(const PointSet& A, const CertificateConfig& cfg);

/// Sum over all v-element subsets of the hyperbolic family of the subset
/// products (d = 2). Refuses more than 10^6 subsets.
GridFunction build_Gv(const PointSet& A, int v, const CertificateConfig& cfg);

struct ProductRuleResult {
    bool is_r_function = false;
    ShapeVector shape;           // the shape the product realizes
    std::int64_t witness_cell = -1;  // first offending cell when not
};

/// Checks on the grid that a product of signed r-functions (d = 2, common
/// index, at least one factor of odd multiplicity) is itself a signed
/// r-function, and reports its shape: componentwise max over the
/// odd-multiplicity factors.
ProductRuleResult verify_product_rule(const std::vector<std::pair<SignedRFunction, int>>& factors);

/// Number of v-element subsets of the index-n hyperbolic family (d = 2)
/// whose product has shape s: the binomial C(|s|-n-1, v-2).
/// Preconditions: 2 <= v <= n and |s| >= n+v-1.
std::int64_t count_products(int n, const ShapeVector& s, int v);

/// Exact m-th moment of a sum of h independent symmetric signs,
/// 2^{-h} sum_j C(h,j) (h-2j)^m; equals the integral of the m-th power of a
/// sum of h all-plus r-functions over the square. m must be even.
std::int64_t gamma_prime(int m, int h);

/// Exact coefficient of G_v in sin(a * sum of h r-functions), from the
/// pointwise product formula e^{iaf} = cos a + i f sin a for f = +-1:
/// (-1)^{(v-1)/2} sin(a)^v cos(a)^{h-v}.
double sine_subset_coefficient(int v, int h, double a);

struct ExpansionCoefficients {
    int k = 0;
    int n = 0;
    // c[v] for odd v <= min(k, h): the uniform coefficient of every v-subset
    // product in the expansion of (sum_r f_r)^k under f^2 == 1.
    std::map<int, std::int64_t> c;
    bool odd_only_ok = false;   // even-size subsets all cancel
    bool uniform_ok = false;    // coefficient depends on |subset| only
    std::map<int, double> gamma;  // c[v] * n^{-(k-v)/2}
    double measured_c0 = 0.0;     // smallest C0 making the factorial bound hold
};

/// Symbolic expansion of (sum over the hyperbolic family)^k by
/// odd-multiplicity bitmask, exact integer coefficients. Guards: n <= 8,
/// odd k <= 7.
ExpansionCoefficients verify_Gv_expansion(int n, int k);

struct PairingReport {
    std::string kind;  // "halasz" | "main"
    int dim = 0;
    int n = 0;
    std::int64_t n_points = 0;
    double epsilon = 0.0;
    bool n_matched = false;  // whether 2N <= 2^n <= 4N held

    double pairing = 0.0;     // <D_N, Psi> resp. <D_N, Phi>
    double dual_norm = 0.0;   // ||Psi||_inf resp. p-sup exp(L^{2/(d-1)}) norm
    double lower_bound = 0.0; // pairing / dual_norm

    // Two-dimensional certificate extras.
    double pairing_G1 = 0.0;
    double leading_delta1 = 0.0;  // sqrt(n) sin(a) cos(a)^{h-1}, a = eps/sqrt(n)
    double leading_term = 0.0;    // leading_delta1 * n^{-1/2} * pairing_G1

    // d >= 3 certificate extras.
    double sup_norm = 0.0;               // measured sup |Phi|
    double iterated_square_max = 0.0;    // max of S_{d-2}(Phi) over cells
    std::vector<std::pair<std::string, double>> per_s;  // per-prefix pairings
    std::map<int, double> pnorms;                       // ||Phi||_p on the ladder
};

PairingReport halasz_certificate(const PointSet& A, const CertificateConfig& cfg);
PairingReport main_certificate(const PointSet& A, const CertificateConfig& cfg);

}  // namespace disc

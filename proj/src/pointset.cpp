#include "disc/pointset.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "disc/prng.hpp"

namespace disc {

PointSet gen_random(std::int64_t n_points, int d, std::uint64_t seed) {
    if (n_points < 1 || d < 1) throw std::invalid_argument("gen_random: need N >= 1, d >= 1");
    PointSet ps;
    ps.dim = d;
    ps.family = "random";
    ps.seed = seed;
    ps.coords.reserve(static_cast<std::size_t>(n_points) * d);
    SplitMix64 rng(seed);
    for (std::int64_t i = 0; i < n_points * d; ++i) ps.coords.push_back(rng.next_unit());
    return ps;
}

PointSet gen_vandercorput(int m) {
    if (m < 0 || m > 30) throw std::invalid_argument("gen_vandercorput: need 0 <= m <= 30");
    PointSet ps;
    ps.dim = 2;
    ps.family = "vdc";
    const std::uint64_t n = std::uint64_t{1} << m;
    const double scale = 1.0 / static_cast<double>(n);
    ps.coords.reserve(2 * n);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t rev = 0;
        for (int b = 0; b < m; ++b) rev |= ((i >> b) & 1u) << (m - 1 - b);
        ps.coords.push_back(static_cast<double>(i) * scale);
        ps.coords.push_back(static_cast<double>(rev) * scale);
    }
    return ps;
}

PointSet gen_halton(std::int64_t n_points, int d) {
    static constexpr int primes[8] = {2, 3, 5, 7, 11, 13, 17, 19};
    if (d < 1 || d > 8) throw std::invalid_argument("gen_halton: supported dimensions are 1..8");
    if (n_points < 1) throw std::invalid_argument("gen_halton: need N >= 1");
    PointSet ps;
    ps.dim = d;
    ps.family = "halton";
    ps.coords.reserve(static_cast<std::size_t>(n_points) * d);
    for (std::int64_t i = 1; i <= n_points; ++i) {
        for (int t = 0; t < d; ++t) {
            const int b = primes[t];
            double inv = 1.0 / b, f = inv, x = 0.0;
            std::int64_t k = i;
            while (k) {
                x += static_cast<double>(k % b) * f;
                k /= b;
                f *= inv;
            }
            ps.coords.push_back(x);
        }
    }
    return ps;
}

void save_points(const PointSet& ps, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_points: cannot open " + path.string());
    out << ps.dim << " " << ps.size() << "\n";
    char buf[32];
    for (std::int64_t i = 0; i < ps.size(); ++i) {
        for (int t = 0; t < ps.dim; ++t) {
            std::snprintf(buf, sizeof buf, "%.17g", ps.coords[i * ps.dim + t]);
            out << (t ? " " : "") << buf;
        }
        out << "\n";
    }
}

namespace {

[[noreturn]] void parse_fail(const std::filesystem::path& path, long line, const std::string& what) {
    throw std::runtime_error("load_points: " + path.string() + ":" + std::to_string(line) +
                             ": " + what);
}

}  // namespace

PointSet load_points(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_points: cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) parse_fail(path, 1, "missing header");
    std::istringstream head(line);
    std::int64_t d = 0, n = 0;
    if (!(head >> d >> n) || d < 1 || n < 1) parse_fail(path, 1, "header must be \"<d> <N>\"");
    PointSet ps;
    ps.dim = static_cast<int>(d);
    ps.family = "file";
    ps.coords.reserve(static_cast<std::size_t>(n * d));
    long lineno = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        if (!std::getline(in, line)) parse_fail(path, lineno + 1, "unexpected end of file");
        ++lineno;
        std::istringstream row(line);
        for (std::int64_t t = 0; t < d; ++t) {
            double x;
            if (!(row >> x)) parse_fail(path, lineno, "expected " + std::to_string(d) + " coordinates");
            if (!(x >= 0.0 && x < 1.0)) parse_fail(path, lineno, "coordinate outside [0,1)");
            ps.coords.push_back(x);
        }
        double extra;
        if (row >> extra) parse_fail(path, lineno, "too many coordinates on line");
    }
    return ps;
}

}  // namespace disc

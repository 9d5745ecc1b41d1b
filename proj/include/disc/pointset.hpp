#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace disc {

/// N points in [0,1)^d, coordinates stored row-major (point-major).
/// The half-open cube keeps box-counting unambiguous: no point ever sits on
/// the closed upper face.
struct PointSet {
    int dim = 0;
    std::vector<double> coords;  // size N * dim
    std::string family;          // generator name, informational
    std::uint64_t seed = 0;

    std::int64_t size() const {
        return dim == 0 ? 0 : static_cast<std::int64_t>(coords.size()) / dim;
    }
    std::span<const double> point(std::int64_t i) const {
        return {coords.data() + i * dim, static_cast<std::size_t>(dim)};
    }
};

/// N i.i.d.-uniform points from splitmix64; same seed, same set.
PointSet gen_random(std::int64_t n_points, int d, std::uint64_t seed);

/// Two-dimensional van der Corput set of size 2^m:
/// {(i 2^-m, bitreverse_m(i) 2^-m) : 0 <= i < 2^m}.
PointSet gen_vandercorput(int m);

/// Radical-inverse (Halton) sequence in the first d primes, indices 1..N.
/// Supports d <= 8.
PointSet gen_halton(std::int64_t n_points, int d);

/// Text format: line 1 "<d> <N>", then N lines of d space-separated
/// coordinates at %.17g precision (lossless round trip).
void save_points(const PointSet& ps, const std::filesystem::path& path);
PointSet load_points(const std::filesystem::path& path);

}  // namespace disc

/**
 * @file generate.hpp
 * @brief Seeded random problem instances.
 *
 * Output depends only on the options: std::mt19937_64 has a fixed output
 * sequence, and bounded draws are taken by plain modular reduction rather
 * than through the implementation-defined standard distributions.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "strassen/model.hpp"

namespace strassen {

/// Deterministic integer source on top of mt19937_64.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    bool coin() { return (engine_() & 1U) != 0; }

    Vector integer_vector(std::size_t k, std::int64_t lo, std::int64_t hi) {
        Vector v(k);
        for (auto& x : v) x = Rational(static_cast<long>(integer(lo, hi)));
        return v;
    }

    Vector nonzero_vector(std::size_t k, std::int64_t lo, std::int64_t hi) {
        for (;;) {
            auto v = integer_vector(k, lo, hi);
            if (!is_zero(v)) return v;
        }
    }

    /// n positive rationals m_i / D summing to one, with n <= D <= max_den.
    std::vector<Rational> probabilities(std::size_t n, std::int64_t max_den) {
        const auto den = integer(static_cast<std::int64_t>(n), max_den);
        std::set<std::int64_t> cuts;
        while (cuts.size() + 1 < n) cuts.insert(integer(1, den - 1));
        std::vector<Rational> out;
        std::int64_t prev = 0;
        for (auto c : cuts) {
            out.push_back(make_rational(static_cast<long>(c - prev), static_cast<long>(den)));
            prev = c;
        }
        out.push_back(make_rational(static_cast<long>(den - prev), static_cast<long>(den)));
        return out;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

struct GenOptions {
    std::uint64_t seed = 1;
    std::size_t dimension = 1;
    std::size_t ny = 3;
    std::size_t nz = 3;
    OrderKind order = OrderKind::ICV;
    ConeKind cone = ConeKind::Orthant;
};

inline constexpr std::int64_t kCoordinateBound = 5;
inline constexpr std::int64_t kMaxDenominator = 20;

namespace detail {

inline std::size_t distinct_point_capacity(std::size_t k) {
    std::size_t cap = 1;
    for (std::size_t d = 0; d < k; ++d) {
        cap *= static_cast<std::size_t>(2 * kCoordinateBound + 1);
        if (cap > static_cast<std::size_t>(kMaxDenominator)) break;
    }
    return cap;
}

inline DiscreteDistribution random_distribution(SeededRng& rng, std::size_t k, std::size_t n) {
    std::set<Vector> seen;
    std::vector<Vector> pts;
    while (pts.size() < n) {
        auto v = rng.integer_vector(k, -kCoordinateBound, kCoordinateBound);
        if (seen.insert(v).second) pts.push_back(std::move(v));
    }
    return DiscreteDistribution::canonicalize(pts, rng.probabilities(n, kMaxDenominator), k);
}

}  // namespace detail

inline PolyhedralCone random_cone(SeededRng& rng, ConeKind kind, std::size_t k) {
    switch (kind) {
        case ConeKind::Orthant: return cone_orthant(k);
        case ConeKind::Ray: return cone_ray(rng.nonzero_vector(k, -kCoordinateBound, kCoordinateBound));
        case ConeKind::Halfspace:
            return cone_halfspace(rng.nonzero_vector(k, -kCoordinateBound, kCoordinateBound));
        case ConeKind::Generators: {
            std::vector<Vector> gens;
            const auto count = rng.integer(1, 4);
            for (std::int64_t l = 0; l < count; ++l) gens.push_back(rng.nonzero_vector(k, -3, 3));
            return PolyhedralCone::from_generators(std::move(gens));
        }
    }
    throw InputError("random_cone: unknown cone kind");
}

/// Instance with integer coordinates in [-5, 5] and masses m / D, D <= 20.
inline DominanceProblem generate_problem(const GenOptions& opt) {
    if (opt.dimension == 0) throw InputError("gen: dimension must be positive");
    if (opt.ny == 0 || opt.nz == 0) throw InputError("gen: support sizes must be positive");
    const std::size_t cap = std::min(detail::distinct_point_capacity(opt.dimension),
                                     static_cast<std::size_t>(kMaxDenominator));
    if (opt.ny > cap || opt.nz > cap) {
        throw InputError("gen: support size exceeds " + std::to_string(cap) +
                         " for dimension " + std::to_string(opt.dimension));
    }
    SeededRng rng(opt.seed);
    auto cone = random_cone(rng, opt.cone, opt.dimension);
    auto Y = detail::random_distribution(rng, opt.dimension, opt.ny);
    auto Z = detail::random_distribution(rng, opt.dimension, opt.nz);
    return DominanceProblem(opt.order, std::move(cone), std::move(Y), std::move(Z));
}

}  // namespace strassen

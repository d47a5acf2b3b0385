// Seeded random dominance instances for property and acceptance tests.
//
// Half of each ensemble is drawn independently (mostly non-dominance); the
// other half builds Z from Y through an explicit coupling, so dominance
// holds by construction and both verdicts are exercised.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "strassen/generate.hpp"
#include "strassen/model.hpp"

namespace strassen::fixtures {

inline Rational small_rational(SeededRng& rng, std::int64_t bound = 5) {
    // Mostly integers, sometimes halves or thirds.
    const auto den = rng.integer(0, 3) == 0 ? rng.integer(2, 3) : 1;
    return make_rational(static_cast<long>(rng.integer(-bound * den, bound * den)),
                         static_cast<long>(den));
}

inline DiscreteDistribution random_distribution(SeededRng& rng, std::size_t k, std::size_t n) {
    std::vector<Vector> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(rng.integer_vector(k, -5, 5));
    // Repeated points are merged by canonicalization; that is fine here.
    return DiscreteDistribution::canonicalize(pts, rng.probabilities(n, 20), k);
}

/// A Z built as z_j = E[Y' | Z' = z_j] (+ a cone element for ICV), which
/// makes Z dominate Y.
inline DiscreteDistribution dominating_z(SeededRng& rng, const DiscreteDistribution& Y,
                                         std::size_t nz, OrderKind order,
                                         const PolyhedralCone& cone) {
    const std::size_t k = Y.dimension();
    std::vector<Rational> mass(nz, Rational(0));
    std::vector<Vector> moment(nz, Vector(k, Rational(0)));
    for (std::size_t i = 0; i < Y.size(); ++i) {
        const auto j1 = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(nz) - 1));
        const auto j2 = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(nz) - 1));
        const Rational share = rng.coin() ? Rational(1) : Rational(1, 2);
        mass[j1] += share * Y.prob(i);
        moment[j1] = moment[j1] + (share * Y.prob(i)) * Y.point(i);
        mass[j2] += (1 - share) * Y.prob(i);
        moment[j2] = moment[j2] + ((1 - share) * Y.prob(i)) * Y.point(i);
    }
    std::vector<Vector> pts;
    std::vector<Rational> probs;
    for (std::size_t j = 0; j < nz; ++j) {
        if (mass[j] == 0) continue;
        Vector z = (1 / mass[j]) * moment[j];
        if (order == OrderKind::ICV) {
            for (const auto& g : cone.generators()) {
                z = z + make_rational(static_cast<long>(rng.integer(0, 2)), 2) * g;
            }
        }
        pts.push_back(std::move(z));
        probs.push_back(mass[j]);
    }
    return DiscreteDistribution::canonicalize(pts, probs, k);
}

struct EnsembleOptions {
    std::vector<std::size_t> dimensions{1, 2, 3};
    std::size_t max_support = 5;
    std::vector<OrderKind> orders{OrderKind::ICV, OrderKind::CV};
    std::vector<ConeKind> cones{ConeKind::Orthant, ConeKind::Ray, ConeKind::Halfspace,
                                ConeKind::Generators};
};

template <typename T>
const T& pick(SeededRng& rng, const std::vector<T>& items) {
    return items[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(items.size()) - 1))];
}

inline DominanceProblem random_problem(SeededRng& rng, const EnsembleOptions& opt) {
    const std::size_t k = pick(rng, opt.dimensions);
    const OrderKind order = pick(rng, opt.orders);
    auto cone = random_cone(rng, pick(rng, opt.cones), k);
    const auto max_n = static_cast<std::int64_t>(opt.max_support);
    auto Y = random_distribution(rng, k, static_cast<std::size_t>(rng.integer(1, max_n)));
    const auto nz = static_cast<std::size_t>(rng.integer(1, max_n));
    auto Z = rng.coin() ? dominating_z(rng, Y, nz, order, cone) : random_distribution(rng, k, nz);
    return DominanceProblem(order, std::move(cone), std::move(Y), std::move(Z));
}

inline std::vector<DominanceProblem> ensemble(std::uint64_t seed, std::size_t count,
                                              const EnsembleOptions& opt = {}) {
    SeededRng rng(seed);
    std::vector<DominanceProblem> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) out.push_back(random_problem(rng, opt));
    return out;
}

}  // namespace strassen::fixtures

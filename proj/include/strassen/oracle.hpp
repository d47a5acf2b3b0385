/**
 * @file oracle.hpp
 * @brief Closed-form dominance tests for the scalar case and for halfspace
 * cones, used to cross-check the LP route.
 *
 * Scalar increasing-concave order compares the integrated lower tails
 * E[(t - X)_+]. Both tails are piecewise linear in t with kinks only at
 * support points, equal to zero left of every support point, and equal to
 * t - E[X] right of every support point. So Z >=icv Y iff the inequality
 * holds at each support point of Y and Z and E[Z] >= E[Y]. Concave order
 * additionally needs equal means.
 */
#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "strassen/model.hpp"

namespace strassen::oracle {

namespace detail {

inline void require_scalar(const DiscreteDistribution& X, const char* what) {
    if (X.dimension() != 1) throw InputError(std::string(what) + ": needs dimension 1");
}

/// E[(t - X)_+].
inline Rational lower_tail(const DiscreteDistribution& X, const Rational& t) {
    Rational s = 0;
    for (std::size_t i = 0; i < X.size(); ++i) {
        const Rational& x = X.point(i)[0];
        if (x < t) s += X.prob(i) * (t - x);
    }
    return s;
}

}  // namespace detail

/// Z >=icv Y for scalar distributions.
inline bool scalar_icv(const DiscreteDistribution& Y, const DiscreteDistribution& Z) {
    detail::require_scalar(Y, "scalar_icv");
    detail::require_scalar(Z, "scalar_icv");
    std::set<Rational> thresholds;
    for (const auto& p : Y.points()) thresholds.insert(p[0]);
    for (const auto& p : Z.points()) thresholds.insert(p[0]);
    for (const auto& t : thresholds) {
        if (detail::lower_tail(Z, t) > detail::lower_tail(Y, t)) return false;
    }
    return Z.mean()[0] >= Y.mean()[0];
}

/// Z >=cv Y for scalar distributions.
inline bool scalar_cv(const DiscreteDistribution& Y, const DiscreteDistribution& Z) {
    return scalar_icv(Y, Z) && Z.mean()[0] == Y.mean()[0];
}

/// Image of X under x -> w.x, with collided atoms merged.
inline DiscreteDistribution project(const DiscreteDistribution& X, const Vector& w) {
    std::vector<Vector> pts;
    pts.reserve(X.size());
    for (const auto& p : X.points()) pts.push_back({dot(w, p)});
    return DiscreteDistribution::canonicalize(pts, X.probs(), 1);
}

/**
 * Scalar test on the projections w.Y and w.Z, for a cone built by
 * cone_halfspace(w). Increasing along {x : w.x >= 0} means constant on w's
 * orthogonal complement, so ICV dominance reduces exactly to the scalar
 * test. CV ignores the cone and is only reducible in dimension 1; for
 * k >= 2 the projected test is merely necessary, so it is rejected.
 */
inline bool halfspace_reduce(const DominanceProblem& problem) {
    const auto& normal = problem.cone().normal();
    if (problem.cone().kind() != ConeKind::Halfspace || !normal) {
        throw InputError("halfspace_reduce: cone was not built as a halfspace");
    }
    if (problem.order() == OrderKind::CV && problem.dimension() > 1) {
        throw InputError("halfspace_reduce: concave order ignores the cone; no scalar reduction "
                         "in dimension > 1");
    }
    const auto Yw = project(problem.Y(), *normal);
    const auto Zw = project(problem.Z(), *normal);
    return problem.order() == OrderKind::ICV ? scalar_icv(Yw, Zw) : scalar_cv(Yw, Zw);
}

}  // namespace strassen::oracle

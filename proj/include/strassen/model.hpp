/**
 * @file model.hpp
 * @brief Domain types: finite-support distributions, polyhedral cones,
 * dominance problems and the two witness types.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "strassen/matrix.hpp"
#include "strassen/rational.hpp"
#include "strassen/simplex.hpp"

namespace strassen {

enum class OrderKind {
    ICV,  ///< increasing concave
    CV,   ///< concave
};

inline std::string_view to_string(OrderKind order) {
    return order == OrderKind::ICV ? "icv" : "cv";
}

/// Finite-support distribution on Q^k. Support points are distinct, sorted
/// lexicographically, and carry strictly positive masses summing to one.
class DiscreteDistribution {
public:
    /// Drops zero masses, merges repeated points, sorts the support and
    /// checks that the masses form a probability vector.
    static DiscreteDistribution canonicalize(const std::vector<Vector>& points,
                                             const std::vector<Rational>& probs,
                                             std::size_t dimension) {
        if (dimension == 0) throw InputError("distribution: dimension must be at least 1");
        if (points.size() != probs.size()) {
            throw InputError("distribution: " + std::to_string(points.size()) + " points but " +
                             std::to_string(probs.size()) + " probabilities");
        }
        if (points.empty()) throw InputError("distribution: empty support");

        std::map<Vector, Rational> merged;
        Rational total = 0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (points[i].size() != dimension) {
                throw InputError("distribution: point " + std::to_string(i) + " has dimension " +
                                 std::to_string(points[i].size()) + ", expected " +
                                 std::to_string(dimension));
            }
            if (probs[i] < 0) {
                throw InputError("distribution: negative probability " + to_string(probs[i]) +
                                 " at index " + std::to_string(i));
            }
            total += probs[i];
            if (probs[i] == 0) continue;
            merged[points[i]] += probs[i];
        }
        if (total != 1) {
            throw InputError("distribution: probabilities sum to " + to_string(total) +
                             ", not 1");
        }
        if (merged.empty()) throw InputError("distribution: empty support after filtering");

        DiscreteDistribution d;
        d.dimension_ = dimension;
        for (auto& [pt, mass] : merged) {
            d.points_.push_back(pt);
            d.probs_.push_back(mass);
        }
        return d;
    }

    /// Point mass at x.
    static DiscreteDistribution dirac(const Vector& x) {
        return canonicalize({x}, {Rational(1)}, x.size());
    }

    /// Equal masses on the given points (repeats add up).
    static DiscreteDistribution uniform(const std::vector<Vector>& points) {
        if (points.empty()) throw InputError("distribution: empty support");
        std::vector<Rational> probs(points.size(), Rational(1, points.size()));
        return canonicalize(points, probs, points.front().size());
    }

    std::size_t dimension() const { return dimension_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<Vector>& points() const { return points_; }
    const std::vector<Rational>& probs() const { return probs_; }
    const Vector& point(std::size_t i) const { return points_[i]; }
    const Rational& prob(std::size_t i) const { return probs_[i]; }

    Vector mean() const {
        Vector m(dimension_, Rational(0));
        for (std::size_t i = 0; i < size(); ++i) {
            for (std::size_t d = 0; d < dimension_; ++d) m[d] += probs_[i] * points_[i][d];
        }
        return m;
    }

    friend bool operator==(const DiscreteDistribution&, const DiscreteDistribution&) = default;

private:
    DiscreteDistribution() = default;

    std::size_t dimension_ = 0;
    std::vector<Vector> points_;
    std::vector<Rational> probs_;
};

enum class ConeKind { Orthant, Ray, Halfspace, Generators };

inline std::string_view to_string(ConeKind kind) {
    switch (kind) {
        case ConeKind::Orthant: return "orthant";
        case ConeKind::Ray: return "ray";
        case ConeKind::Halfspace: return "halfspace";
        case ConeKind::Generators: return "generators";
    }
    return "unknown";
}

/// Finitely generated cone { sum_l lambda_l g_l : lambda >= 0 }. Cones that
/// contain lines (halfspaces) are allowed. The dual cone is never formed
/// explicitly: c lies in it iff c.g_l >= 0 for every generator.
class PolyhedralCone {
public:
    static PolyhedralCone from_generators(std::vector<Vector> generators) {
        if (generators.empty()) throw InputError("cone: generator list is empty");
        const std::size_t k = generators.front().size();
        if (k == 0) throw InputError("cone: dimension must be at least 1");
        for (std::size_t l = 0; l < generators.size(); ++l) {
            if (generators[l].size() != k) {
                throw InputError("cone: generator " + std::to_string(l) +
                                 " has inconsistent dimension");
            }
            if (is_zero(generators[l])) {
                throw InputError("cone: generator " + std::to_string(l) + " is the zero vector");
            }
        }
        return PolyhedralCone(ConeKind::Generators, k, std::move(generators), std::nullopt);
    }

    /// Standard basis e_1..e_k.
    static PolyhedralCone orthant(std::size_t k) {
        if (k == 0) throw InputError("cone_orthant: dimension must be at least 1");
        std::vector<Vector> gens;
        for (std::size_t d = 0; d < k; ++d) {
            Vector e(k, Rational(0));
            e[d] = 1;
            gens.push_back(std::move(e));
        }
        return PolyhedralCone(ConeKind::Orthant, k, std::move(gens), std::nullopt);
    }

    /// { alpha w : alpha >= 0 }.
    static PolyhedralCone ray(const Vector& w) {
        if (w.empty() || is_zero(w)) throw InputError("cone_ray: direction must be nonzero");
        return PolyhedralCone(ConeKind::Ray, w.size(), {w}, std::nullopt);
    }

    /// { x : w.x >= 0 }, generated by w together with +-v for a basis v of
    /// the orthogonal complement of w.
    static PolyhedralCone halfspace(const Vector& w) {
        if (w.empty() || is_zero(w)) throw InputError("cone_halfspace: normal must be nonzero");
        const std::size_t k = w.size();
        const auto pivot = static_cast<std::size_t>(
            std::find_if(w.begin(), w.end(), [](const Rational& x) { return x != 0; }) -
            w.begin());
        std::vector<Vector> gens{w};
        for (std::size_t q = 0; q < k; ++q) {
            if (q == pivot) continue;
            // w_q e_p - w_p e_q is orthogonal to w; over q != p these span w^perp.
            Vector v(k, Rational(0));
            v[pivot] = w[q];
            v[q] = -w[pivot];
            gens.push_back(v);
            gens.push_back(Rational(-1) * v);
        }
        return PolyhedralCone(ConeKind::Halfspace, k, std::move(gens), w);
    }

    ConeKind kind() const { return kind_; }
    std::size_t dimension() const { return dimension_; }
    const std::vector<Vector>& generators() const { return generators_; }
    /// The normal w when built by halfspace().
    const std::optional<Vector>& normal() const { return normal_; }

    /// True iff c.g >= 0 for every generator g.
    bool dual_contains(const Vector& c) const {
        return std::all_of(generators_.begin(), generators_.end(),
                           [&](const Vector& g) { return dot(c, g) >= 0; });
    }

private:
    PolyhedralCone(ConeKind kind, std::size_t k, std::vector<Vector> gens,
                   std::optional<Vector> normal)
        : kind_(kind), dimension_(k), generators_(std::move(gens)), normal_(std::move(normal)) {}

    ConeKind kind_;
    std::size_t dimension_;
    std::vector<Vector> generators_;
    std::optional<Vector> normal_;
};

inline PolyhedralCone cone_orthant(std::size_t k) { return PolyhedralCone::orthant(k); }
inline PolyhedralCone cone_ray(const Vector& w) { return PolyhedralCone::ray(w); }
inline PolyhedralCone cone_halfspace(const Vector& w) { return PolyhedralCone::halfspace(w); }

/// Nonnegative generator weights expressing x, or nullopt when x is not in
/// the cone. The weights returned have been checked by substitution.
inline std::optional<Vector> cone_membership(const PolyhedralCone& cone, const Vector& x) {
    if (x.size() != cone.dimension()) {
        throw InputError("cone_member: point has dimension " + std::to_string(x.size()) +
                         ", cone has dimension " + std::to_string(cone.dimension()));
    }
    const auto& gens = cone.generators();
    lp::LinearProgram<Rational> prog{Matrix<Rational>(x.size(), gens.size()), x, std::nullopt};
    for (std::size_t l = 0; l < gens.size(); ++l) {
        for (std::size_t d = 0; d < x.size(); ++d) prog.A(d, l) = gens[l][d];
    }
    auto outcome = lp::solve_feasibility(prog);
    auto* feasible = std::get_if<lp::Feasible<Rational>>(&outcome);
    if (!feasible) return std::nullopt;

    Vector combo(x.size(), Rational(0));
    for (std::size_t l = 0; l < gens.size(); ++l) {
        if (feasible->x[l] < 0) throw InternalError("cone_member: negative weight");
        combo = combo + feasible->x[l] * gens[l];
    }
    if (combo != x) throw InternalError("cone_member: weights do not reproduce the point");
    return std::move(feasible->x);
}

inline bool cone_member(const PolyhedralCone& cone, const Vector& x) {
    return cone_membership(cone, x).has_value();
}

/// Does Z dominate Y in the given order, with "increasing" taken along the
/// cone? For CV the cone is carried but plays no role.
class DominanceProblem {
public:
    DominanceProblem(OrderKind order, PolyhedralCone cone, DiscreteDistribution Y,
                     DiscreteDistribution Z)
        : order_(order), cone_(std::move(cone)), Y_(std::move(Y)), Z_(std::move(Z)) {
        if (Y_.dimension() != Z_.dimension() || Y_.dimension() != cone_.dimension()) {
            throw InputError("problem: dimensions differ (Y " + std::to_string(Y_.dimension()) +
                             ", Z " + std::to_string(Z_.dimension()) + ", cone " +
                             std::to_string(cone_.dimension()) + ")");
        }
    }

    OrderKind order() const { return order_; }
    const PolyhedralCone& cone() const { return cone_; }
    const DiscreteDistribution& Y() const { return Y_; }
    const DiscreteDistribution& Z() const { return Z_; }
    std::size_t dimension() const { return Y_.dimension(); }

private:
    OrderKind order_;
    PolyhedralCone cone_;
    DiscreteDistribution Y_;
    DiscreteDistribution Z_;
};

/// p(i, j) = Pr[Y' = y_i, Z' = z_j].
struct Coupling {
    Matrix<Rational> p;

    friend bool operator==(const Coupling&, const Coupling&) = default;
};

/// Dual witness (a_i, b_j, c_j) of non-dominance. It induces the utility
/// u(x) = min_j { b_j + c_j.(x - z_j) }.
struct UtilityCertificate {
    Vector a;
    Vector b;
    std::vector<Vector> c;

    friend bool operator==(const UtilityCertificate&, const UtilityCertificate&) = default;
};

/// sum_j b_j Pr[Z = z_j] - sum_i a_i Pr[Y = y_i]; negative on a valid certificate.
inline Rational certificate_gap(const DominanceProblem& problem, const UtilityCertificate& cert) {
    Rational gap = 0;
    for (std::size_t j = 0; j < problem.Z().size(); ++j) gap += cert.b[j] * problem.Z().prob(j);
    for (std::size_t i = 0; i < problem.Y().size(); ++i) gap -= cert.a[i] * problem.Y().prob(i);
    return gap;
}

/// Multiplies every component of the certificate by s.
inline UtilityCertificate scaled(const UtilityCertificate& cert, const Rational& s) {
    UtilityCertificate out{s * cert.a, s * cert.b, {}};
    for (const auto& cj : cert.c) out.c.push_back(s * cj);
    return out;
}

struct Dominates {
    Coupling coupling;
};

struct NotDominates {
    UtilityCertificate certificate;
};

using Verdict = std::variant<Dominates, NotDominates>;

inline bool dominates(const Verdict& v) { return std::holds_alternative<Dominates>(v); }

}  // namespace strassen

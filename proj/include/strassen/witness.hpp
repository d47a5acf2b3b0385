/**
 * @file witness.hpp
 * @brief Re-verification of couplings and utility certificates against the
 * problem statement alone.
 *
 * Nothing here trusts the solver. The only LP call is cone_membership,
 * whose weights are themselves checked by substitution.
 */
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "strassen/dominance.hpp"
#include "strassen/model.hpp"

namespace strassen {

/// Pass, or the first violated condition with its indices.
class Verification {
public:
    static Verification pass() { return {}; }
    static Verification fail(std::string condition, std::string detail) {
        Verification v;
        v.passed_ = false;
        v.condition_ = std::move(condition);
        v.detail_ = std::move(detail);
        return v;
    }

    bool passed() const { return passed_; }
    explicit operator bool() const { return passed_; }

    /// Short machine-friendly tag, e.g. "row_marginal".
    const std::string& condition() const { return condition_; }
    const std::string& detail() const { return detail_; }

    std::string message() const {
        return passed_ ? std::string("pass") : condition_ + ": " + detail_;
    }

private:
    bool passed_ = true;
    std::string condition_;
    std::string detail_;
};

namespace detail {

inline std::string idx(std::size_t i) { return std::to_string(i); }

}  // namespace detail

/// Throws InputError when the coupling matrix is not |Y| x |Z|.
inline Verification verify_coupling(const DominanceProblem& problem, const Coupling& coupling) {
    const auto& Y = problem.Y();
    const auto& Z = problem.Z();
    const auto& p = coupling.p;
    if (p.rows() != Y.size() || p.cols() != Z.size()) {
        throw InputError("verify_coupling: coupling is " + std::to_string(p.rows()) + "x" +
                         std::to_string(p.cols()) + ", problem needs " +
                         std::to_string(Y.size()) + "x" + std::to_string(Z.size()));
    }

    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) {
            if (p(i, j) < 0) {
                return Verification::fail("nonnegativity", "p[" + detail::idx(i) + "][" +
                                                               detail::idx(j) + "] = " +
                                                               to_string(p(i, j)));
            }
        }
    }
    for (std::size_t i = 0; i < p.rows(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < p.cols(); ++j) s += p(i, j);
        if (s != Y.prob(i)) {
            return Verification::fail("row_marginal", "row " + detail::idx(i) + " sums to " +
                                                          to_string(s) + ", Pr[Y = y_" +
                                                          detail::idx(i) + "] = " +
                                                          to_string(Y.prob(i)));
        }
    }
    for (std::size_t j = 0; j < p.cols(); ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < p.rows(); ++i) s += p(i, j);
        if (s != Z.prob(j)) {
            return Verification::fail("column_marginal", "column " + detail::idx(j) +
                                                             " sums to " + to_string(s) +
                                                             ", Pr[Z = z_" + detail::idx(j) +
                                                             "] = " + to_string(Z.prob(j)));
        }
    }
    // Z' >= E[Y' | Z'] multiplied through by Pr[Z = z_j].
    for (std::size_t j = 0; j < p.cols(); ++j) {
        Vector slack = Z.prob(j) * Z.point(j);
        for (std::size_t i = 0; i < p.rows(); ++i) slack = slack - p(i, j) * Y.point(i);
        if (problem.order() == OrderKind::CV) {
            if (!is_zero(slack)) {
                return Verification::fail("conditional_mean",
                                          "column " + detail::idx(j) +
                                              ": Pr[Z=z_j] z_j - sum_i p_ij y_i = " +
                                              to_string(slack) + " is not zero");
            }
        } else if (!cone_member(problem.cone(), slack)) {
            return Verification::fail("conditional_mean",
                                      "column " + detail::idx(j) +
                                          ": Pr[Z=z_j] z_j - sum_i p_ij y_i = " +
                                          to_string(slack) + " is not in the cone");
        }
    }
    return Verification::pass();
}

/// Throws InputError when the certificate's shapes do not match the problem.
inline Verification verify_utility(const DominanceProblem& problem,
                                   const UtilityCertificate& cert) {
    const auto& Y = problem.Y();
    const auto& Z = problem.Z();
    const std::size_t k = problem.dimension();
    if (cert.a.size() != Y.size() || cert.b.size() != Z.size() || cert.c.size() != Z.size()) {
        throw InputError("verify_utility: certificate sizes do not match the supports");
    }
    for (std::size_t j = 0; j < cert.c.size(); ++j) {
        if (cert.c[j].size() != k) {
            throw InputError("verify_utility: c_" + std::to_string(j) + " has dimension " +
                             std::to_string(cert.c[j].size()) + ", expected " +
                             std::to_string(k));
        }
    }

    for (std::size_t i = 0; i < Y.size(); ++i) {
        for (std::size_t j = 0; j < Z.size(); ++j) {
            const Rational rhs = cert.b[j] + dot(cert.c[j], Y.point(i) - Z.point(j));
            if (cert.a[i] > rhs) {
                return Verification::fail("row_inequality",
                                          "(" + detail::idx(i) + ", " + detail::idx(j) +
                                              "): a_i = " + to_string(cert.a[i]) +
                                              " > b_j + c_j.(y_i - z_j) = " + to_string(rhs));
            }
        }
    }
    if (problem.order() == OrderKind::ICV) {
        const auto& gens = problem.cone().generators();
        for (std::size_t j = 0; j < Z.size(); ++j) {
            for (std::size_t l = 0; l < gens.size(); ++l) {
                const Rational v = dot(cert.c[j], gens[l]);
                if (v < 0) {
                    return Verification::fail("dual_cone", "c_" + detail::idx(j) + " . g_" +
                                                               detail::idx(l) + " = " +
                                                               to_string(v) + " < 0");
                }
            }
        }
    }
    const Rational gap = certificate_gap(problem, cert);
    if (gap >= 0) return Verification::fail("gap", "gap = " + to_string(gap) + " is not negative");

    // The induced utility: a_i <= u(y_i), u(z_j) <= b_j, E[u(Z)] - E[u(Y)] < 0.
    Rational eu_y = 0;
    for (std::size_t i = 0; i < Y.size(); ++i) {
        const Rational u = evaluate_utility(cert, Z.points(), Y.point(i)).value;
        if (cert.a[i] > u) {
            return Verification::fail("utility_at_y", "a_" + detail::idx(i) + " = " +
                                                          to_string(cert.a[i]) + " > u(y_i) = " +
                                                          to_string(u));
        }
        eu_y += Y.prob(i) * u;
    }
    Rational eu_z = 0;
    for (std::size_t j = 0; j < Z.size(); ++j) {
        const Rational u = evaluate_utility(cert, Z.points(), Z.point(j)).value;
        if (u > cert.b[j]) {
            return Verification::fail("utility_at_z", "u(z_" + detail::idx(j) + ") = " +
                                                          to_string(u) + " > b_j = " +
                                                          to_string(cert.b[j]));
        }
        eu_z += Z.prob(j) * u;
    }
    if (eu_z - eu_y >= 0) {
        return Verification::fail("expected_utility",
                                  "E[u(Z)] - E[u(Y)] = " + to_string(eu_z - eu_y) +
                                      " is not negative");
    }
    return Verification::pass();
}

/// Dispatches on the verdict's witness.
inline Verification verify_verdict(const DominanceProblem& problem, const Verdict& verdict) {
    if (const auto* d = std::get_if<Dominates>(&verdict)) return verify_coupling(problem, d->coupling);
    return verify_utility(problem, std::get<NotDominates>(verdict).certificate);
}

}  // namespace strassen

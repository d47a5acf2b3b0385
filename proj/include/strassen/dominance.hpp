/**
 * @file dominance.hpp
 * @brief Deciding Z >= Y in the increasing-concave or concave order, with a
 * coupling or a utility certificate as the witness either way.
 *
 * The primal system asks for a joint mass matrix p >= 0 with
 *
 *     -sum_j p_ij = -Pr[Y = y_i]             (one row per i)
 *      sum_i p_ij =  Pr[Z = z_j]             (one row per j)
 *      sum_i p_ij (y_i - z_j) + sum_l lambda_jl g_l = 0    (k rows per j)
 *
 * where lambda >= 0 writes Pr[Z = z_j] z_j - sum_i p_ij y_i as an element of
 * the cone. For CV the lambda columns are dropped, which forces equality.
 *
 * A Farkas vector of that system reads off directly as a certificate: the
 * Y rows give a_i, the Z rows give b_j, the cone rows give c_j. Dual
 * feasibility on a p column is a_i <= b_j + c_j.(y_i - z_j), on a lambda
 * column it is c_j.g_l >= 0, and b.y < 0 is a negative gap.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "strassen/model.hpp"
#include "strassen/simplex.hpp"

namespace strassen {

/// Primal LP plus the index maps from (i, j), (j, l), (j, d) to columns/rows.
class PrimalEncoding {
public:
    lp::LinearProgram<Rational> lp;

    std::size_t ny = 0;
    std::size_t nz = 0;
    std::size_t dimension = 0;
    std::size_t generator_count = 0;  ///< 0 for CV

    std::size_t coupling_column(std::size_t i, std::size_t j) const { return i * nz + j; }
    std::size_t slack_column(std::size_t j, std::size_t l) const {
        return ny * nz + j * generator_count + l;
    }
    std::size_t y_row(std::size_t i) const { return i; }
    std::size_t z_row(std::size_t j) const { return ny + j; }
    std::size_t cone_row(std::size_t j, std::size_t d) const {
        return ny + nz + j * dimension + d;
    }
};

inline PrimalEncoding build_primal(const DominanceProblem& problem) {
    const auto& Y = problem.Y();
    const auto& Z = problem.Z();
    const auto& gens = problem.cone().generators();

    PrimalEncoding enc;
    enc.ny = Y.size();
    enc.nz = Z.size();
    enc.dimension = problem.dimension();
    enc.generator_count = problem.order() == OrderKind::ICV ? gens.size() : 0;

    const std::size_t rows = enc.ny + enc.nz + enc.dimension * enc.nz;
    const std::size_t cols = enc.ny * enc.nz + enc.nz * enc.generator_count;
    enc.lp.A = Matrix<Rational>(rows, cols);
    enc.lp.b.assign(rows, Rational(0));

    for (std::size_t i = 0; i < enc.ny; ++i) enc.lp.b[enc.y_row(i)] = -Y.prob(i);
    for (std::size_t j = 0; j < enc.nz; ++j) enc.lp.b[enc.z_row(j)] = Z.prob(j);

    for (std::size_t i = 0; i < enc.ny; ++i) {
        for (std::size_t j = 0; j < enc.nz; ++j) {
            const std::size_t col = enc.coupling_column(i, j);
            enc.lp.A(enc.y_row(i), col) = -1;
            enc.lp.A(enc.z_row(j), col) = 1;
            for (std::size_t d = 0; d < enc.dimension; ++d) {
                enc.lp.A(enc.cone_row(j, d), col) = Y.point(i)[d] - Z.point(j)[d];
            }
        }
    }
    for (std::size_t j = 0; j < enc.nz; ++j) {
        for (std::size_t l = 0; l < enc.generator_count; ++l) {
            for (std::size_t d = 0; d < enc.dimension; ++d) {
                enc.lp.A(enc.cone_row(j, d), enc.slack_column(j, l)) = gens[l][d];
            }
        }
    }
    return enc;
}

/// Checks a certificate's defining relations exactly; returns a description
/// of the first failure.
inline std::optional<std::string> certificate_defect(const DominanceProblem& problem,
                                                     const UtilityCertificate& cert) {
    const auto& Y = problem.Y();
    const auto& Z = problem.Z();
    for (std::size_t i = 0; i < Y.size(); ++i) {
        for (std::size_t j = 0; j < Z.size(); ++j) {
            if (cert.a[i] > cert.b[j] + dot(cert.c[j], Y.point(i) - Z.point(j))) {
                return "row inequality (" + std::to_string(i) + ", " + std::to_string(j) + ")";
            }
        }
    }
    if (problem.order() == OrderKind::ICV) {
        for (std::size_t j = 0; j < Z.size(); ++j) {
            if (!problem.cone().dual_contains(cert.c[j])) {
                return "slope c_" + std::to_string(j) + " outside the dual cone";
            }
        }
    }
    if (certificate_gap(problem, cert) >= 0) return std::string("gap is not negative");
    return std::nullopt;
}

/// Rescales a certificate by a positive factor so that its gap is exactly -1.
inline UtilityCertificate normalize_certificate(const DominanceProblem& problem,
                                                const UtilityCertificate& cert) {
    const Rational gap = certificate_gap(problem, cert);
    if (gap >= 0) throw InternalError("normalize_certificate: gap is not negative");
    return scaled(cert, Rational(-1) / gap);
}

/// Reads the certificate off a Farkas vector of the primal system and
/// normalizes it to gap -1. Throws InternalError if the result does not
/// satisfy every certificate relation exactly.
inline UtilityCertificate extract_certificate(const DominanceProblem& problem,
                                              const PrimalEncoding& primal,
                                              const Vector& farkas) {
    if (farkas.size() != primal.lp.rows()) {
        throw InternalError("extract_certificate: Farkas vector has the wrong length");
    }
    UtilityCertificate cert;
    cert.a.resize(primal.ny);
    cert.b.resize(primal.nz);
    cert.c.assign(primal.nz, Vector(primal.dimension));
    // The Y rows carry the minus sign of "-sum_j p_ij = -Pr[Y = y_i]", so
    // the multiplier is a_i itself.
    for (std::size_t i = 0; i < primal.ny; ++i) cert.a[i] = farkas[primal.y_row(i)];
    for (std::size_t j = 0; j < primal.nz; ++j) {
        cert.b[j] = farkas[primal.z_row(j)];
        for (std::size_t d = 0; d < primal.dimension; ++d) {
            cert.c[j][d] = farkas[primal.cone_row(j, d)];
        }
    }
    if (auto defect = certificate_defect(problem, cert)) {
        throw InternalError("extract_certificate: " + *defect);
    }
    cert = normalize_certificate(problem, cert);
    if (certificate_gap(problem, cert) != -1) {
        throw InternalError("extract_certificate: normalization failed");
    }
    return cert;
}

inline Verdict check_dominance(const DominanceProblem& problem) {
    const PrimalEncoding enc = build_primal(problem);
    auto outcome = lp::solve_feasibility(enc.lp);
    if (auto* inf = std::get_if<lp::Infeasible<Rational>>(&outcome)) {
        return NotDominates{extract_certificate(problem, enc, inf->y)};
    }
    const auto& x = std::get<lp::Feasible<Rational>>(outcome).x;
    Coupling coupling{Matrix<Rational>(enc.ny, enc.nz)};
    for (std::size_t i = 0; i < enc.ny; ++i) {
        for (std::size_t j = 0; j < enc.nz; ++j) coupling.p(i, j) = x[enc.coupling_column(i, j)];
    }
    return Dominates{std::move(coupling)};
}

/// Outcome of minimizing the certificate gap directly over all (a, b, c).
struct DualReport {
    enum class Status { Optimal, Unbounded };
    Status status;
    /// Optimal value; only meaningful when status == Optimal (always 0 there).
    Rational value;
    /// Normalized certificate recovered from the improving ray.
    std::optional<UtilityCertificate> certificate;

    bool dominates() const { return status == Status::Optimal && value == 0; }
};

/**
 * Builds the gap-minimization LP in the certificate variables and solves it.
 *
 * Free variables a_i, b_j and c_j are split into positive and negative
 * parts. Each relation a_i <= b_j + c_j.(y_i - z_j) gets a slack t_ij >= 0;
 * for ICV each c_j.g_l >= 0 gets a slack s_jl >= 0. The feasible set is a
 * cone containing 0, so the minimum is either 0 or unbounded below.
 */
inline DualReport check_via_dual(const DominanceProblem& problem) {
    const auto& Y = problem.Y();
    const auto& Z = problem.Z();
    const auto& gens = problem.cone().generators();
    const std::size_t ny = Y.size();
    const std::size_t nz = Z.size();
    const std::size_t k = problem.dimension();
    const std::size_t ng = problem.order() == OrderKind::ICV ? gens.size() : 0;

    // Column layout: a+ a- | b+ b- | c+ c- | t | s
    const std::size_t a_pos = 0;
    const std::size_t a_neg = ny;
    const std::size_t b_pos = 2 * ny;
    const std::size_t b_neg = 2 * ny + nz;
    const std::size_t c_pos = 2 * ny + 2 * nz;
    const std::size_t c_neg = c_pos + nz * k;
    const std::size_t t_off = c_neg + nz * k;
    const std::size_t s_off = t_off + ny * nz;
    const std::size_t cols = s_off + nz * ng;
    const std::size_t rows = ny * nz + nz * ng;

    lp::LinearProgram<Rational> prog{Matrix<Rational>(rows, cols), Vector(rows, Rational(0)),
                                     Vector(cols, Rational(0))};
    auto& obj = *prog.objective;
    for (std::size_t i = 0; i < ny; ++i) {
        obj[a_pos + i] = -Y.prob(i);
        obj[a_neg + i] = Y.prob(i);
    }
    for (std::size_t j = 0; j < nz; ++j) {
        obj[b_pos + j] = Z.prob(j);
        obj[b_neg + j] = -Z.prob(j);
    }

    // b_j + c_j.(y_i - z_j) - a_i - t_ij = 0
    for (std::size_t i = 0; i < ny; ++i) {
        for (std::size_t j = 0; j < nz; ++j) {
            const std::size_t r = i * nz + j;
            prog.A(r, b_pos + j) = 1;
            prog.A(r, b_neg + j) = -1;
            prog.A(r, a_pos + i) = -1;
            prog.A(r, a_neg + i) = 1;
            for (std::size_t d = 0; d < k; ++d) {
                const Rational diff = Y.point(i)[d] - Z.point(j)[d];
                prog.A(r, c_pos + j * k + d) = diff;
                prog.A(r, c_neg + j * k + d) = -diff;
            }
            prog.A(r, t_off + r) = -1;
        }
    }
    // c_j.g_l - s_jl = 0
    for (std::size_t j = 0; j < nz; ++j) {
        for (std::size_t l = 0; l < ng; ++l) {
            const std::size_t r = ny * nz + j * ng + l;
            for (std::size_t d = 0; d < k; ++d) {
                prog.A(r, c_pos + j * k + d) = gens[l][d];
                prog.A(r, c_neg + j * k + d) = -gens[l][d];
            }
            prog.A(r, s_off + j * ng + l) = -1;
        }
    }

    auto outcome = lp::solve_optimize(prog);
    if (auto* opt = std::get_if<lp::Optimal<Rational>>(&outcome)) {
        return {DualReport::Status::Optimal, opt->value, std::nullopt};
    }
    if (std::holds_alternative<lp::Infeasible<Rational>>(outcome)) {
        throw InternalError("check_via_dual: homogeneous system reported infeasible");
    }
    const auto& ray = std::get<lp::Unbounded<Rational>>(outcome).ray;
    UtilityCertificate cert;
    cert.a.resize(ny);
    cert.b.resize(nz);
    cert.c.assign(nz, Vector(k));
    for (std::size_t i = 0; i < ny; ++i) cert.a[i] = ray[a_pos + i] - ray[a_neg + i];
    for (std::size_t j = 0; j < nz; ++j) {
        cert.b[j] = ray[b_pos + j] - ray[b_neg + j];
        for (std::size_t d = 0; d < k; ++d) {
            cert.c[j][d] = ray[c_pos + j * k + d] - ray[c_neg + j * k + d];
        }
    }
    if (auto defect = certificate_defect(problem, cert)) {
        throw InternalError("check_via_dual: ray certificate fails " + *defect);
    }
    return {DualReport::Status::Unbounded, Rational(0), normalize_certificate(problem, cert)};
}

/// u(x) with the slope of the first minimizing piece as a supergradient.
struct UtilityValue {
    Rational value;
    Vector supergradient;
};

/// u(x) = min_j { b_j + c_j.(x - z_j) }. Ties go to the lowest j.
inline UtilityValue evaluate_utility(const UtilityCertificate& cert,
                                     const std::vector<Vector>& z_support, const Vector& x) {
    if (cert.b.empty()) throw InputError("evaluate_utility: empty certificate");
    if (cert.b.size() != z_support.size() || cert.c.size() != z_support.size()) {
        throw InputError("evaluate_utility: certificate and support sizes differ");
    }
    std::optional<std::size_t> best;
    Rational best_value;
    for (std::size_t j = 0; j < z_support.size(); ++j) {
        Rational v = cert.b[j] + dot(cert.c[j], x - z_support[j]);
        if (!best || v < best_value) {
            best = j;
            best_value = std::move(v);
        }
    }
    return {best_value, cert.c[*best]};
}

}  // namespace strassen

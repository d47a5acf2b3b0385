/**
 * @file commands.hpp
 * @brief The check / verify / oracle / gen / plot commands, as functions of
 * file paths and output streams returning a process exit code.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "strassen/dominance.hpp"
#include "strassen/generate.hpp"
#include "strassen/io.hpp"
#include "strassen/oracle.hpp"
#include "strassen/witness.hpp"

namespace strassen::cli {

enum ExitCode : int {
    kDominates = 0,
    kNotDominates = 1,
    kInputError = 2,
};

/// verify uses 0 for pass and 1 for fail.
inline constexpr int kVerifyPass = 0;
inline constexpr int kVerifyFail = 1;

inline int cmd_check(const std::string& problem_path, const std::optional<std::string>& witness_out,
                     std::ostream& out, std::ostream& err) {
    try {
        const auto problem = io::read_problem(problem_path);
        const auto verdict = check_dominance(problem);
        const auto verification = verify_verdict(problem, verdict);
        if (!verification) {
            err << "internal error: witness failed verification: " << verification.message() << "\n";
            return kInputError;
        }
        const bool dom = dominates(verdict);
        out << (dom ? "dominates" : "not_dominates") << "\n";
        if (!dom) {
            out << "gap " << to_string(certificate_gap(problem, std::get<NotDominates>(verdict).certificate))
                << "\n";
        }
        out << "witness verified\n";
        if (witness_out) io::write_text(*witness_out, io::dump(io::verdict_to_json(verdict)));
        return dom ? kDominates : kNotDominates;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    }
}

inline int cmd_verify(const std::string& problem_path, const std::string& witness_path,
                      std::ostream& out, std::ostream& err) {
    try {
        const auto problem = io::read_problem(problem_path);
        const auto verdict = io::read_witness(witness_path);
        const auto verification = verify_verdict(problem, verdict);
        if (verification) {
            out << "pass\n";
            return kVerifyPass;
        }
        out << "fail: " << verification.message() << "\n";
        return kVerifyFail;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    }
}

/// Which closed-form test applies to a problem, if any.
inline std::optional<bool> oracle_verdict(const DominanceProblem& problem) {
    if (problem.cone().kind() == ConeKind::Halfspace &&
        (problem.order() == OrderKind::ICV || problem.dimension() == 1)) {
        return oracle::halfspace_reduce(problem);
    }
    if (problem.dimension() == 1 &&
        (problem.cone().kind() == ConeKind::Orthant || problem.order() == OrderKind::CV)) {
        return problem.order() == OrderKind::ICV ? oracle::scalar_icv(problem.Y(), problem.Z())
                                                 : oracle::scalar_cv(problem.Y(), problem.Z());
    }
    return std::nullopt;
}

inline int cmd_oracle(const std::string& problem_path, std::ostream& out, std::ostream& err) {
    try {
        const auto problem = io::read_problem(problem_path);
        const auto verdict = oracle_verdict(problem);
        if (!verdict) {
            err << "no closed-form oracle for order " << to_string(problem.order()) << " with a "
                << to_string(problem.cone().kind()) << " cone in dimension "
                << problem.dimension() << "\n";
            return kInputError;
        }
        out << (*verdict ? "dominates" : "not_dominates") << "\n";
        return *verdict ? kDominates : kNotDominates;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    }
}

inline std::optional<ConeKind> parse_cone_kind(const std::string& name) {
    for (auto kind : {ConeKind::Orthant, ConeKind::Ray, ConeKind::Halfspace, ConeKind::Generators}) {
        if (name == to_string(kind)) return kind;
    }
    return std::nullopt;
}

inline std::optional<OrderKind> parse_order(const std::string& name) {
    if (name == "icv") return OrderKind::ICV;
    if (name == "cv") return OrderKind::CV;
    return std::nullopt;
}

inline int cmd_gen(std::uint64_t seed, long long dim, long long ny, long long nz,
                   const std::string& order, const std::string& cone_kind,
                   const std::string& out_path, std::ostream& out, std::ostream& err) {
    try {
        if (dim < 1 || ny < 1 || nz < 1) throw InputError("gen: sizes must be positive");
        const auto o = parse_order(order);
        if (!o) throw InputError("gen: order must be \"icv\" or \"cv\"");
        const auto kind = parse_cone_kind(cone_kind);
        if (!kind) throw InputError("gen: unknown cone kind \"" + cone_kind + "\"");
        GenOptions opt{seed, static_cast<std::size_t>(dim), static_cast<std::size_t>(ny),
                       static_cast<std::size_t>(nz), *o, *kind};
        const auto problem = generate_problem(opt);
        io::write_text(out_path, io::dump(io::problem_to_json(problem)));
        out << "wrote " << out_path << "\n";
        return 0;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    }
}

/// Abscissae for plotting a scalar certificate's utility: support points,
/// crossings of every pair of affine pieces, and midpoints between
/// consecutive points of that set.
inline std::vector<Rational> plot_abscissae(const DominanceProblem& problem,
                                            const UtilityCertificate& cert) {
    std::set<Rational> xs;
    for (const auto& p : problem.Y().points()) xs.insert(p[0]);
    for (const auto& p : problem.Z().points()) xs.insert(p[0]);
    const auto& z = problem.Z().points();
    for (std::size_t j = 0; j < z.size(); ++j) {
        for (std::size_t l = j + 1; l < z.size(); ++l) {
            const Rational slope_diff = cert.c[j][0] - cert.c[l][0];
            if (slope_diff == 0) continue;
            // b_j + c_j (x - z_j) = b_l + c_l (x - z_l)
            xs.insert((cert.b[l] - cert.b[j] + cert.c[j][0] * z[j][0] - cert.c[l][0] * z[l][0]) /
                      slope_diff);
        }
    }
    std::vector<Rational> sorted(xs.begin(), xs.end());
    std::vector<Rational> result;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0) result.push_back((sorted[i - 1] + sorted[i]) / 2);
        result.push_back(sorted[i]);
    }
    return result;
}

/// CSV with header "x,u,s"; values are canonical rational strings.
inline std::string plot_csv(const DominanceProblem& problem, const UtilityCertificate& cert) {
    std::string csv = "x,u,s\n";
    for (const auto& x : plot_abscissae(problem, cert)) {
        const auto u = evaluate_utility(cert, problem.Z().points(), Vector{x});
        csv += to_string(x) + "," + to_string(u.value) + "," + to_string(u.supergradient[0]) + "\n";
    }
    return csv;
}

inline int cmd_plot(const std::string& problem_path, const std::string& witness_path,
                    const std::string& out_path, std::ostream& out, std::ostream& err) {
    try {
        const auto problem = io::read_problem(problem_path);
        const auto verdict = io::read_witness(witness_path);
        if (problem.dimension() != 1) throw InputError("plot: only dimension 1 can be plotted");
        const auto* nd = std::get_if<NotDominates>(&verdict);
        if (!nd) throw InputError("plot: witness is a coupling, not a utility certificate");
        const auto& cert = nd->certificate;
        if (cert.a.size() != problem.Y().size() || cert.b.size() != problem.Z().size() ||
            cert.c.size() != problem.Z().size() ||
            std::any_of(cert.c.begin(), cert.c.end(), [](const Vector& c) { return c.size() != 1; })) {
            throw InputError("plot: certificate shape does not match the problem");
        }
        io::write_text(out_path, plot_csv(problem, cert));
        out << "wrote " << out_path << "\n";
        return 0;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace strassen::cli

/**
 * @file io.hpp
 * @brief JSON problem and witness files.
 *
 * Problem file:
 *
 *     {
 *       "order": "icv" | "cv",
 *       "dimension": k,
 *       "cone": {"type": "orthant"}
 *             | {"type": "ray", "w": [...]}
 *             | {"type": "halfspace", "w": [...]}
 *             | {"type": "generators", "rays": [[...], ...]},
 *       "Y": {"points": [[...], ...], "probs": [...]},
 *       "Z": {"points": [[...], ...], "probs": [...]}
 *     }
 *
 * Witness file:
 *
 *     {"verdict": "dominates", "coupling": {"p": [[...], ...]}}
 *     {"verdict": "not_dominates", "certificate": {"a": [...], "b": [...], "c": [[...], ...]}}
 *
 * Numbers are JSON integers or strings "n" / "n/d". Output always uses
 * canonical strings, and witness indices refer to the canonical (sorted,
 * merged) supports.
 */
#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "strassen/model.hpp"

namespace strassen::io {

using json = nlohmann::json;

namespace detail {

inline const json& field(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) throw InputError(path + ": expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) throw InputError(path + ": missing field \"" + key + "\"");
    return *it;
}

inline std::string child(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

inline std::string child(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

inline const json& array(const json& v, const std::string& path) {
    if (!v.is_array()) throw InputError(path + ": expected an array");
    return v;
}

}  // namespace detail

inline Rational parse_number(const json& v, const std::string& path) {
    if (v.is_number_integer()) return parse_rational(v.dump());
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const InputError& e) {
            throw InputError(path + ": " + e.what());
        }
    }
    throw InputError(path + ": expected an integer or a \"p/q\" string");
}

inline Vector parse_vector(const json& v, const std::string& path) {
    Vector out;
    for (std::size_t i = 0; i < detail::array(v, path).size(); ++i) {
        out.push_back(parse_number(v[i], detail::child(path, i)));
    }
    return out;
}

inline std::vector<Vector> parse_vectors(const json& v, const std::string& path) {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < detail::array(v, path).size(); ++i) {
        out.push_back(parse_vector(v[i], detail::child(path, i)));
    }
    return out;
}

inline json to_json(const Rational& r) { return to_string(r); }

inline json to_json(const Vector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

inline json to_json(const std::vector<Vector>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back(to_json(v));
    return out;
}

inline json to_json(const Matrix<Rational>& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (const auto& x : m.row(r)) row.push_back(to_json(x));
        out.push_back(std::move(row));
    }
    return out;
}

inline DiscreteDistribution parse_distribution(const json& v, const std::string& path,
                                               std::size_t dimension) {
    const auto points = parse_vectors(detail::field(v, "points", path), detail::child(path, "points"));
    const auto probs = parse_vector(detail::field(v, "probs", path), detail::child(path, "probs"));
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != dimension) {
            throw InputError(detail::child(detail::child(path, "points"), i) + ": has " +
                             std::to_string(points[i].size()) + " coordinates, dimension is " +
                             std::to_string(dimension));
        }
    }
    try {
        return DiscreteDistribution::canonicalize(points, probs, dimension);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

inline PolyhedralCone parse_cone(const json& v, const std::string& path, std::size_t dimension) {
    const json& type = detail::field(v, "type", path);
    if (!type.is_string()) throw InputError(detail::child(path, "type") + ": expected a string");
    const auto kind = type.get<std::string>();
    try {
        if (kind == "orthant") return cone_orthant(dimension);
        if (kind == "ray" || kind == "halfspace") {
            const auto w = parse_vector(detail::field(v, "w", path), detail::child(path, "w"));
            if (w.size() != dimension) {
                throw InputError(detail::child(path, "w") + ": has " + std::to_string(w.size()) +
                                 " coordinates, dimension is " + std::to_string(dimension));
            }
            return kind == "ray" ? cone_ray(w) : cone_halfspace(w);
        }
        if (kind == "generators") {
            const auto rays =
                parse_vectors(detail::field(v, "rays", path), detail::child(path, "rays"));
            for (std::size_t l = 0; l < rays.size(); ++l) {
                if (rays[l].size() != dimension) {
                    throw InputError(detail::child(detail::child(path, "rays"), l) +
                                     ": wrong number of coordinates");
                }
            }
            return PolyhedralCone::from_generators(rays);
        }
    } catch (const InputError& e) {
        const std::string msg = e.what();
        if (msg.rfind(path, 0) == 0) throw;
        throw InputError(path + ": " + msg);
    }
    throw InputError(detail::child(path, "type") + ": unknown cone type \"" + kind + "\"");
}

inline DominanceProblem parse_problem(const json& doc) {
    const json& order_v = detail::field(doc, "order", "problem");
    if (!order_v.is_string()) throw InputError("order: expected \"icv\" or \"cv\"");
    const auto order_s = order_v.get<std::string>();
    OrderKind order;
    if (order_s == "icv") {
        order = OrderKind::ICV;
    } else if (order_s == "cv") {
        order = OrderKind::CV;
    } else {
        throw InputError("order: expected \"icv\" or \"cv\", got \"" + order_s + "\"");
    }

    const json& dim_v = detail::field(doc, "dimension", "problem");
    if (!dim_v.is_number_integer() || dim_v.get<long long>() < 1) {
        throw InputError("dimension: expected a positive integer");
    }
    const auto k = static_cast<std::size_t>(dim_v.get<long long>());

    auto cone = parse_cone(detail::field(doc, "cone", "problem"), "cone", k);
    auto Y = parse_distribution(detail::field(doc, "Y", "problem"), "Y", k);
    auto Z = parse_distribution(detail::field(doc, "Z", "problem"), "Z", k);
    return DominanceProblem(order, std::move(cone), std::move(Y), std::move(Z));
}

inline json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(source + ": " + e.what());
    }
}

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError(path + ": cannot open file for writing");
    out << text;
    if (!out) throw InputError(path + ": write failed");
}

inline DominanceProblem read_problem(const std::string& path) {
    return parse_problem(parse_json_text(read_text(path), path));
}

inline json distribution_to_json(const DiscreteDistribution& d) {
    return {{"points", to_json(d.points())}, {"probs", to_json(d.probs())}};
}

inline json cone_to_json(const PolyhedralCone& cone) {
    switch (cone.kind()) {
        case ConeKind::Orthant: return {{"type", "orthant"}};
        case ConeKind::Ray: return {{"type", "ray"}, {"w", to_json(cone.generators().front())}};
        case ConeKind::Halfspace: return {{"type", "halfspace"}, {"w", to_json(*cone.normal())}};
        case ConeKind::Generators: return {{"type", "generators"}, {"rays", to_json(cone.generators())}};
    }
    throw InternalError("cone_to_json: unknown cone kind");
}

/// Canonical document for a problem.
inline json problem_to_json(const DominanceProblem& problem) {
    return {{"order", std::string(to_string(problem.order()))},
            {"dimension", problem.dimension()},
            {"cone", cone_to_json(problem.cone())},
            {"Y", distribution_to_json(problem.Y())},
            {"Z", distribution_to_json(problem.Z())}};
}

inline json verdict_to_json(const Verdict& verdict) {
    if (const auto* d = std::get_if<Dominates>(&verdict)) {
        return {{"verdict", "dominates"}, {"coupling", {{"p", to_json(d->coupling.p)}}}};
    }
    const auto& cert = std::get<NotDominates>(verdict).certificate;
    return {{"verdict", "not_dominates"},
            {"certificate", {{"a", to_json(cert.a)}, {"b", to_json(cert.b)}, {"c", to_json(cert.c)}}}};
}

/// Parses a witness document. Shapes are checked against a problem by the
/// verifier, not here, beyond the coupling being rectangular.
inline Verdict parse_witness(const json& doc) {
    const json& verdict = detail::field(doc, "verdict", "witness");
    if (!verdict.is_string()) throw InputError("verdict: expected a string");
    const auto v = verdict.get<std::string>();
    if (v == "dominates") {
        const auto rows = parse_vectors(
            detail::field(detail::field(doc, "coupling", "witness"), "p", "coupling"), "coupling.p");
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Matrix<Rational> p(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw InputError("coupling.p: ragged matrix");
            for (std::size_t j = 0; j < cols; ++j) p(i, j) = rows[i][j];
        }
        return Dominates{Coupling{std::move(p)}};
    }
    if (v == "not_dominates") {
        const json& c = detail::field(doc, "certificate", "witness");
        UtilityCertificate cert;
        cert.a = parse_vector(detail::field(c, "a", "certificate"), "certificate.a");
        cert.b = parse_vector(detail::field(c, "b", "certificate"), "certificate.b");
        cert.c = parse_vectors(detail::field(c, "c", "certificate"), "certificate.c");
        return NotDominates{std::move(cert)};
    }
    throw InputError("verdict: expected \"dominates\" or \"not_dominates\", got \"" + v + "\"");
}

inline Verdict read_witness(const std::string& path) {
    return parse_witness(parse_json_text(read_text(path), path));
}

/// Stable text form: two-space indentation, sorted keys, trailing newline.
inline std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace strassen::io

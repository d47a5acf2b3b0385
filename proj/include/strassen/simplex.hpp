/**
 * @file simplex.hpp
 * @brief Exact two-phase tableau simplex over an ordered field.
 *
 * Problems are given in equality standard form
 *
 *     find / minimize  c.x   subject to  A x = b,  x >= 0.
 *
 * Phase 1 adds one artificial column per row and minimizes their sum. When
 * that optimum is positive the system is infeasible and the phase-1 dual
 * values give a Farkas vector y with A^T y >= 0 and b.y < 0. Otherwise the
 * artificial basis is driven out and phase 2 minimizes c.x, ending either
 * at an optimal vertex or on an improving ray.
 *
 * Bland's rule picks both the entering column (lowest index with negative
 * reduced cost) and the leaving row (lowest basic index among minimum
 * ratios), so the method terminates on degenerate problems and the pivot
 * sequence is a function of the input ordering alone.
 *
 * T must behave like an exact field (Rational). Every returned witness is
 * re-checked by direct evaluation before it leaves this header.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strassen/matrix.hpp"
#include "strassen/rational.hpp"

namespace strassen::lp {

template <typename T>
struct LinearProgram {
    Matrix<T> A;
    std::vector<T> b;
    std::optional<std::vector<T>> objective;

    std::size_t rows() const { return A.rows(); }
    std::size_t cols() const { return A.cols(); }

    void validate() const {
        if (b.size() != A.rows()) {
            throw InputError("LinearProgram: b has " + std::to_string(b.size()) +
                             " entries, A has " + std::to_string(A.rows()) + " rows");
        }
        if (objective && objective->size() != A.cols()) {
            throw InputError("LinearProgram: objective has " +
                             std::to_string(objective->size()) + " entries, A has " +
                             std::to_string(A.cols()) + " columns");
        }
    }
};

/// A x = b, x >= 0.
template <typename T>
struct Feasible {
    std::vector<T> x;
};

/// Farkas vector: A^T y >= 0 and b.y < 0.
template <typename T>
struct Infeasible {
    std::vector<T> y;
};

template <typename T>
struct Optimal {
    std::vector<T> x;
    T value;
};

/// A r = 0, r >= 0, c.r < 0.
template <typename T>
struct Unbounded {
    std::vector<T> ray;
};

template <typename T>
using FeasibilityOutcome = std::variant<Feasible<T>, Infeasible<T>>;

template <typename T>
using OptimizationOutcome = std::variant<Optimal<T>, Unbounded<T>, Infeasible<T>>;

// Direct evaluation of the witness conditions. Shared by the solver's own
// post-checks and by callers that want to re-verify.

template <typename T>
std::vector<T> multiply(const Matrix<T>& A, const std::vector<T>& x) {
    std::vector<T> out(A.rows(), T(0));
    for (std::size_t r = 0; r < A.rows(); ++r) {
        for (std::size_t c = 0; c < A.cols(); ++c) {
            if (x[c] != 0) out[r] += A(r, c) * x[c];
        }
    }
    return out;
}

template <typename T>
std::vector<T> multiply_transposed(const Matrix<T>& A, const std::vector<T>& y) {
    std::vector<T> out(A.cols(), T(0));
    for (std::size_t r = 0; r < A.rows(); ++r) {
        if (y[r] == 0) continue;
        for (std::size_t c = 0; c < A.cols(); ++c) out[c] += A(r, c) * y[r];
    }
    return out;
}

template <typename T>
T inner(const std::vector<T>& u, const std::vector<T>& v) {
    T s(0);
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

template <typename T>
bool all_nonnegative(const std::vector<T>& v) {
    for (const auto& e : v) {
        if (e < 0) return false;
    }
    return true;
}

template <typename T>
bool is_feasible_point(const LinearProgram<T>& lp, const std::vector<T>& x) {
    return x.size() == lp.cols() && all_nonnegative(x) && multiply(lp.A, x) == lp.b;
}

template <typename T>
bool is_farkas_certificate(const LinearProgram<T>& lp, const std::vector<T>& y) {
    return y.size() == lp.rows() && all_nonnegative(multiply_transposed(lp.A, y)) &&
           inner(lp.b, y) < 0;
}

template <typename T>
bool is_improving_ray(const LinearProgram<T>& lp, const std::vector<T>& r) {
    if (!lp.objective || r.size() != lp.cols() || !all_nonnegative(r)) return false;
    for (const auto& e : multiply(lp.A, r)) {
        if (e != 0) return false;
    }
    return inner(*lp.objective, r) < 0;
}

namespace detail {

/// Tableau with columns [original n | artificial m | rhs]. The artificial
/// block is kept after phase 1: in the constraint rows it holds B^{-1}, and
/// its reduced costs carry the phase-1 duals.
template <typename T>
class Tableau {
public:
    explicit Tableau(const LinearProgram<T>& lp)
        : m_(lp.rows()), n_(lp.cols()), t_(lp.rows(), lp.cols() + lp.rows() + 1),
          reduced_(lp.cols() + lp.rows() + 1, T(0)), basis_(lp.rows()),
          row_sign_(lp.rows(), 1) {
        for (std::size_t r = 0; r < m_; ++r) {
            row_sign_[r] = lp.b[r] < 0 ? -1 : 1;
            for (std::size_t c = 0; c < n_; ++c) {
                t_(r, c) = row_sign_[r] < 0 ? T(-lp.A(r, c)) : lp.A(r, c);
            }
            t_(r, n_ + r) = 1;
            t_(r, rhs()) = row_sign_[r] < 0 ? T(-lp.b[r]) : lp.b[r];
            basis_[r] = n_ + r;
        }
    }

    /// Runs phase 1. Returns false when the artificial sum cannot reach zero.
    bool phase_one() {
        std::vector<T> cost(n_ + m_, T(0));
        for (std::size_t k = 0; k < m_; ++k) cost[n_ + k] = 1;
        price(cost);
        const auto blocked = iterate(n_ + m_);
        // Phase 1 is bounded below by zero; an improving ray is impossible.
        if (blocked) throw InternalError("simplex: phase 1 reported unbounded");
        return objective_value() == 0;
    }

    /// Farkas vector from the phase-1 duals. Valid after phase_one() == false.
    std::vector<T> farkas() const {
        // Phase-1 duals w_k = 1 - reduced cost of artificial k, for the
        // sign-normalized rows. Undo the normalization and negate.
        std::vector<T> y(m_);
        for (std::size_t k = 0; k < m_; ++k) {
            T w = T(1) - reduced_[n_ + k];
            y[k] = row_sign_[k] < 0 ? w : T(-w);
        }
        return y;
    }

    /// Pivots zero-level artificials out of the basis where an original
    /// column allows it. Rows where none does are redundant and keep their
    /// artificial at zero; their original entries are all zero.
    void drive_out_artificials() {
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] < n_) continue;
            for (std::size_t c = 0; c < n_; ++c) {
                if (t_(r, c) != 0) {
                    pivot(r, c);
                    break;
                }
            }
        }
    }

    /// Phase 2 on the original columns. Returns the entering column of an
    /// improving ray, or nullopt at optimality.
    std::optional<std::size_t> phase_two(const std::vector<T>& objective) {
        std::vector<T> cost(n_ + m_, T(0));
        for (std::size_t c = 0; c < n_; ++c) cost[c] = objective[c];
        price(cost);
        return iterate(n_);
    }

    std::vector<T> point() const {
        std::vector<T> x(n_, T(0));
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] < n_) x[basis_[r]] = t_(r, rhs());
        }
        return x;
    }

    std::vector<T> ray(std::size_t entering) const {
        std::vector<T> d(n_, T(0));
        d[entering] = 1;
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] < n_) d[basis_[r]] = -t_(r, entering);
        }
        return d;
    }

private:
    std::size_t rhs() const { return n_ + m_; }

    // reduced_[rhs()] holds minus the current objective value.
    T objective_value() const { return -reduced_[rhs()]; }

    void price(const std::vector<T>& cost) {
        for (std::size_t c = 0; c <= rhs(); ++c) {
            T d = c < cost.size() ? cost[c] : T(0);
            for (std::size_t r = 0; r < m_; ++r) {
                const T& cb = cost[basis_[r]];
                if (cb != 0 && t_(r, c) != 0) d -= cb * t_(r, c);
            }
            reduced_[c] = d;
        }
    }

    /// Bland-rule iterations over columns [0, allowed). Returns the entering
    /// column when no row limits it (unbounded direction).
    std::optional<std::size_t> iterate(std::size_t allowed) {
        for (;;) {
            std::optional<std::size_t> entering;
            for (std::size_t c = 0; c < allowed; ++c) {
                if (reduced_[c] < 0) {
                    entering = c;
                    break;
                }
            }
            if (!entering) return std::nullopt;

            const std::size_t q = *entering;
            std::optional<std::size_t> leave;
            T best_ratio;
            for (std::size_t r = 0; r < m_; ++r) {
                if (t_(r, q) <= 0) continue;
                T ratio = t_(r, rhs()) / t_(r, q);
                if (!leave || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[*leave])) {
                    leave = r;
                    best_ratio = std::move(ratio);
                }
            }
            if (!leave) return q;
            pivot(*leave, q);
        }
    }

    void pivot(std::size_t pr, std::size_t pc) {
        const std::size_t width = rhs() + 1;
        const T inv = T(1) / t_(pr, pc);
        auto prow = t_.row(pr);
        for (std::size_t c = 0; c < width; ++c) {
            if (prow[c] != 0) prow[c] *= inv;
        }
        for (std::size_t r = 0; r < m_; ++r) {
            if (r == pr || t_(r, pc) == 0) continue;
            const T factor = t_(r, pc);
            auto row = t_.row(r);
            for (std::size_t c = 0; c < width; ++c) {
                if (prow[c] != 0) row[c] -= factor * prow[c];
            }
        }
        if (reduced_[pc] != 0) {
            const T factor = reduced_[pc];
            for (std::size_t c = 0; c < width; ++c) {
                if (prow[c] != 0) reduced_[c] -= factor * prow[c];
            }
        }
        basis_[pr] = pc;
    }

    std::size_t m_;
    std::size_t n_;
    Matrix<T> t_;
    std::vector<T> reduced_;
    std::vector<std::size_t> basis_;
    std::vector<int> row_sign_;
};

template <typename T>
Infeasible<T> checked_farkas(const LinearProgram<T>& lp, const Tableau<T>& tab) {
    auto y = tab.farkas();
    if (!is_farkas_certificate(lp, y)) {
        throw InternalError("simplex: Farkas vector failed its exact re-check");
    }
    return {std::move(y)};
}

}  // namespace detail

/// Decides A x = b, x >= 0. Any objective on the program is ignored.
template <typename T>
FeasibilityOutcome<T> solve_feasibility(const LinearProgram<T>& lp) {
    lp.validate();
    detail::Tableau<T> tab(lp);
    if (!tab.phase_one()) return detail::checked_farkas(lp, tab);
    auto x = tab.point();
    if (!is_feasible_point(lp, x)) throw InternalError("simplex: phase-1 point failed re-check");
    return Feasible<T>{std::move(x)};
}

/// Minimizes the program's objective over A x = b, x >= 0.
template <typename T>
OptimizationOutcome<T> solve_optimize(const LinearProgram<T>& lp) {
    lp.validate();
    if (!lp.objective) throw InputError("solve_optimize: program has no objective");
    detail::Tableau<T> tab(lp);
    if (!tab.phase_one()) return detail::checked_farkas(lp, tab);
    tab.drive_out_artificials();
    if (const auto entering = tab.phase_two(*lp.objective)) {
        auto r = tab.ray(*entering);
        if (!is_improving_ray(lp, r)) throw InternalError("simplex: ray failed re-check");
        return Unbounded<T>{std::move(r)};
    }
    auto x = tab.point();
    if (!is_feasible_point(lp, x)) throw InternalError("simplex: optimal point failed re-check");
    T value = inner(*lp.objective, x);
    return Optimal<T>{std::move(x), std::move(value)};
}

}  // namespace strassen::lp

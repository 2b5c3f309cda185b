#pragma once

// ST decomposition: factor a nonsingular matrix M as S * T with S
// symplectic and T reduced, by running the elimination schedule on M and
// accumulating S from the inverted transcript. Unlike the symplectic case
// the schedule can hit a dead pivot; strict mode reports it, permissive
// mode leaves the affected column unreduced and finishes anyway.

#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "sympel/eliminate.hpp"
#include "sympel/error.hpp"
#include "sympel/field.hpp"
#include "sympel/generator.hpp"
#include "sympel/matrix.hpp"

namespace sympel {

enum class STMode { strict, permissive };

template <FieldType F>
struct STSuccess {
    SquareMatrix<F> s;
    SquareMatrix<F> t;
    Transcript<F> transcript;
};

struct STFailure {
    std::size_t column;  // 0-based block column
    PivotStage stage;
};

template <FieldType F>
struct STResult {
    STMode mode;
    std::variant<STSuccess<F>, STFailure> outcome;
    /// Permissive mode: block columns whose reduction was skipped.
    std::vector<SkippedColumn> unreduced_columns;

    bool ok() const { return std::holds_alternative<STSuccess<F>>(outcome); }
    const STSuccess<F>& success() const { return std::get<STSuccess<F>>(outcome); }
    const STFailure& failure() const { return std::get<STFailure>(outcome); }
};

/// Product of the inverted transcript steps in reverse order; this is the
/// inverse of the matrix the transcript applies, built with row operations.
template <FieldType F>
SquareMatrix<F> accumulate_inverse(const Transcript<F>& t, const F& field) {
    auto s = SquareMatrix<F>::identity(field, t.ell);
    for (auto it = t.steps.rbegin(); it != t.steps.rend(); ++it)
        apply_left(invert_generator(*it), s);
    return s;
}

/// Factor m = S * T. Over exact fields m is rejected if singular; the
/// ApproxField path relies on pivot tolerance instead.
template <FieldType F>
STResult<F> st_decompose(const SquareMatrix<F>& m, STMode mode = STMode::strict) {
    const F& f = m.field();
    if constexpr (F::exact) {
        if (f.is_zero(determinant(m))) throw error("input matrix is singular");
    }
    SquareMatrix<F> g = m;
    Transcript<F> transcript;
    auto policy = mode == STMode::strict ? detail::PivotPolicy::abort : detail::PivotPolicy::skip;
    auto outcome = detail::run_schedule(g, transcript, policy);

    STResult<F> result{mode, STFailure{0, PivotStage::a_pivot}, std::move(outcome.skipped)};
    if (outcome.failure) {
        result.outcome = STFailure{outcome.failure->column, outcome.failure->stage};
        return result;
    }
    auto s = accumulate_inverse(transcript, f);
    result.outcome = STSuccess<F>{std::move(s), std::move(g), std::move(transcript)};
    return result;
}

/// is_reduced, with the columns recorded as skipped exempted in blocks B
/// and D (a dead D-pivot leaves residue in column ell+j only).
template <FieldType F>
bool is_reduced_except(const SquareMatrix<F>& t, std::span<const SkippedColumn> skipped) {
    const F& f = t.field();
    const std::size_t ell = t.ell();
    auto exempt = [&](std::size_t c) {
        for (const auto& s : skipped)
            if (s.column == c) return true;
        return false;
    };
    for (std::size_t r = 0; r < ell; ++r)
        for (std::size_t c = 0; c <= r && c < ell; ++c) {
            if (r > c && !f.is_zero(t(r, c))) return false;
            if (!f.is_zero(t(ell + r, c))) return false;
            if (exempt(c)) continue;
            if (r > c && !f.is_zero(t(ell + r, ell + c))) return false;
            if (!f.is_zero(t(r, ell + c))) return false;
        }
    return true;
}

struct FactorizationReport {
    bool s_symplectic = false;
    bool t_reduced = false;          // modulo skipped columns in permissive mode
    bool residual_zero = false;      // S*T == M (exact) or within tolerance
    double residual_norm = 0.0;      // ApproxField: ||S*T - M||_max
    std::vector<SkippedColumn> skipped;

    bool ok() const { return s_symplectic && t_reduced && residual_zero; }
};

/// Check a successful decomposition against its input.
template <FieldType F>
FactorizationReport validate_factorization(const SquareMatrix<F>& m, const STResult<F>& r,
                                           double tol = default_matrix_tol) {
    if (!r.ok()) throw error("validate_factorization needs a successful decomposition");
    const auto& s = r.success();
    FactorizationReport report;
    report.skipped = r.unreduced_columns;
    report.s_symplectic = is_symplectic(s.s, tol);
    report.t_reduced = is_reduced_except(s.t, std::span<const SkippedColumn>(r.unreduced_columns));
    auto product = s.s * s.t;
    if constexpr (F::exact) {
        report.residual_zero = product == m;
    } else {
        report.residual_norm = max_abs(product - m);
        report.residual_zero = approx_equal(product, m, tol);
    }
    return report;
}

}  // namespace sympel

#pragma once

// Symplectic elimination: reduce a symplectic matrix to a diagonal matrix
// by left-application of elementary generators, recording the transcript.
//
// The reduction runs in cycles j = 0..ell-1. Cycle j clears, in order:
//
//   C-step  block C, column j, rows j..ell-1, with H(i,i,*) using the
//           block-A entry above as pivot; a zero pivot over a nonzero
//           target is repaired by the row-exchange sequence
//   A-step  block A, column j below the diagonal, with E(i,j,*); a zero
//           diagonal pivot is repaired once by E(j,x,1) for the first
//           nonzero row x below it
//   D-step  block D, column j below the diagonal, with E(j,i,*) pivoting
//           on the block-D diagonal entry
//   B-step  block B, column j, rows j..ell-1, with F(i,j,*) on the same
//           pivot
//
// For symplectic input the symmetry of the group relation makes every
// remaining entry of columns j and ell+j vanish, so the end state is
// diagonal. The same schedule run on an arbitrary nonsingular matrix is
// the basis of the ST decomposition (see st.hpp), which is where the
// pivot-failure policies other than `defect` come into play.
//
// Steps whose coefficient would be zero are skipped and never recorded.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sympel/error.hpp"
#include "sympel/field.hpp"
#include "sympel/generator.hpp"
#include "sympel/matrix.hpp"

namespace sympel {

enum class PivotStage { a_pivot, d_pivot };

inline std::string_view to_string(PivotStage s) {
    return s == PivotStage::a_pivot ? "A-pivot" : "D-pivot";
}

/// A column whose reduction was skipped in permissive mode, with the pivot
/// stage that failed (0-based block column).
struct SkippedColumn {
    std::size_t column;
    PivotStage stage;

    friend bool operator==(const SkippedColumn&, const SkippedColumn&) = default;
};

namespace detail {

/// What the schedule does when a pivot needed for column j is zero.
enum class PivotPolicy {
    defect,  // impossible for symplectic input: throw
    abort,   // stop and report (ST strict mode)
    skip,    // record the column, leave it unreduced, continue (permissive)
};

struct ScheduleOutcome {
    std::optional<SkippedColumn> failure;     // set under PivotPolicy::abort
    std::vector<SkippedColumn> skipped;       // filled under PivotPolicy::skip
};

template <FieldType F>
[[noreturn]] void pivot_defect(std::size_t column, PivotStage stage) {
    std::string msg = "zero " + std::string(to_string(stage)) + " with no repair at column " +
                      std::to_string(column + 1);
    if constexpr (F::exact)
        throw std::logic_error(msg + "; cannot happen for symplectic input");
    else
        throw error(msg + " (pivot below tolerance; input too far from symplectic?)");
}

template <FieldType F>
void check_milestone(const SquareMatrix<F>& g, std::size_t col, std::size_t row, const char* label) {
    if (!is_standard_column(g, col) || !is_standard_row(g, row))
        throw std::logic_error(std::string("elimination milestone violated after ") + label +
                               " of cycle " + std::to_string(col % g.ell() + 1));
}

/// Runs the cycle schedule on g in place, appending every applied
/// generator to transcript. `checked` asserts the standard-column/row
/// milestones after the A- and B-steps of each cycle (meaningful for
/// symplectic input only).
template <FieldType F>
ScheduleOutcome run_schedule(SquareMatrix<F>& g, Transcript<F>& transcript, PivotPolicy policy,
                             bool checked = false) {
    const F& f = g.field();
    const std::size_t ell = g.ell();
    transcript.ell = ell;
    ScheduleOutcome outcome;

    auto apply = [&](Generator<F> gen) {
        apply_left(gen, g);
        transcript.push(std::move(gen));
    };
    // Returns true when the caller must stop (abort policy).
    auto on_failure = [&](std::size_t column, PivotStage stage) -> bool {
        switch (policy) {
            case PivotPolicy::defect:
                pivot_defect<F>(column, stage);
            case PivotPolicy::abort:
                outcome.failure = SkippedColumn{column, stage};
                return true;
            case PivotPolicy::skip:
                for (auto& s : outcome.skipped)
                    if (s.column == column) {
                        s.stage = stage;  // D overrides a vacuous A record
                        return false;
                    }
                outcome.skipped.push_back(SkippedColumn{column, stage});
                return false;
        }
        return false;
    };

    for (std::size_t j = 0; j < ell; ++j) {
        // C-step
        for (std::size_t i = j; i < ell; ++i) {
            const auto& target = g(ell + i, j);
            if (f.is_zero(g(i, j))) {
                if (!f.is_zero(target))
                    for (const auto& gen : row_exchange_sequence(i, ell, f).steps) apply(gen);
            } else if (!f.is_zero(target)) {
                apply(Generator<F>(GenKind::H, i, i, f.neg(f.div(target, g(i, j))), ell, f));
            }
        }

        // A-step
        bool a_failed = false;
        if (f.is_zero(g(j, j))) {
            std::size_t x = ell;
            for (std::size_t r = j + 1; r < ell; ++r)
                if (!f.is_zero(g(r, j))) {
                    x = r;
                    break;
                }
            if (x < ell) {
                apply(Generator<F>(GenKind::E, j, x, f.one(), ell, f));
            } else {
                a_failed = true;
                if (on_failure(j, PivotStage::a_pivot)) return outcome;
            }
        }
        if (!a_failed) {
            for (std::size_t i = j + 1; i < ell; ++i) {
                if (f.is_zero(g(i, j))) continue;
                apply(Generator<F>(GenKind::E, i, j, f.neg(f.div(g(i, j), g(j, j))), ell, f));
            }
            if (checked) check_milestone(g, j, ell + j, "A-step");
        }

        // D-step; the pivot g(ell+j, ell+j) is consulted only when some
        // target below it (or in the B-step) is nonzero.
        bool d_failed = false;
        const auto needs_d = [&] {
            for (std::size_t i = j + 1; i < ell; ++i)
                if (!f.is_zero(g(ell + i, ell + j))) return true;
            return false;
        };
        if (needs_d() && f.is_zero(g(ell + j, ell + j))) {
            d_failed = true;
        } else {
            for (std::size_t i = j + 1; i < ell; ++i) {
                if (f.is_zero(g(ell + i, ell + j))) continue;
                apply(Generator<F>(GenKind::E, j, i,
                                   f.div(g(ell + i, ell + j), g(ell + j, ell + j)), ell, f));
            }
        }

        // B-step (shares the D pivot)
        if (!d_failed) {
            const auto needs_b = [&] {
                for (std::size_t i = j; i < ell; ++i)
                    if (!f.is_zero(g(i, ell + j))) return true;
                return false;
            };
            if (needs_b() && f.is_zero(g(ell + j, ell + j))) {
                d_failed = true;
            } else {
                for (std::size_t i = j; i < ell; ++i) {
                    if (f.is_zero(g(i, ell + j))) continue;
                    apply(Generator<F>(GenKind::F, i, j,
                                       f.neg(f.div(g(i, ell + j), g(ell + j, ell + j))), ell, f));
                }
                if (checked) check_milestone(g, ell + j, j, "B-step");
            }
        }
        if (d_failed && on_failure(j, PivotStage::d_pivot)) return outcome;
    }
    return outcome;
}

}  // namespace detail

template <FieldType F>
struct EliminationResult {
    SquareMatrix<F> diagonal;
    Transcript<F> transcript;
    /// Largest |entry| clamped off the diagonal (ApproxField runs only;
    /// exactly zero for exact fields).
    double max_offdiag_residual = 0.0;

    /// Order of the eliminated matrix, 2 * ell.
    std::size_t input_order() const { return diagonal.order(); }
};

/// Reduce a symplectic matrix to its diagonal form. Over exact fields the
/// input is verified symplectic up front. `checked` turns on the per-cycle
/// milestone assertions.
template <FieldType F>
EliminationResult<F> eliminate(SquareMatrix<F> g, bool checked = false) {
    if constexpr (F::exact) {
        if (!is_symplectic(g)) throw error("input matrix is not symplectic");
    }
    Transcript<F> transcript;
    detail::run_schedule(g, transcript, detail::PivotPolicy::defect, checked);

    double residual = 0.0;
    if constexpr (F::exact) {
        if (!is_diagonal_symplectic(g))
            throw std::logic_error("elimination of a symplectic matrix did not reach diagonal form");
    } else {
        const double clamp = default_matrix_tol * (1.0 + max_abs(g));
        for (std::size_t r = 0; r < g.order(); ++r)
            for (std::size_t c = 0; c < g.order(); ++c) {
                if (r == c) continue;
                const double mag = std::fabs(g(r, c));
                if (mag <= clamp) {
                    residual = std::max(residual, mag);
                    g(r, c) = 0.0;
                }
            }
    }
    return EliminationResult<F>{std::move(g), std::move(transcript), residual};
}

/// Apply every step of t to g0 in order. Equals the product of the
/// materialized steps times g0.
template <FieldType F>
SquareMatrix<F> reconstruct_from_transcript(const Transcript<F>& t, SquareMatrix<F> g0) {
    if (!t.steps.empty() && t.ell != g0.ell()) throw error("transcript/matrix dimension mismatch");
    for (const auto& step : t.steps) apply_left(step, g0);
    return g0;
}

}  // namespace sympel

#pragma once

// Similarity transforms M -> S^-1 * M * S for symplectic S, applied factor
// by factor: S is taken (or computed) in elimination-factored form
// S = G1^-1 * ... * Gk^-1 * D, so the conjugation is k elementary
// conjugations (a row operation plus the mirrored column operation each)
// followed by a diagonal scaling.

#include <cstddef>
#include <utility>

#include "sympel/eliminate.hpp"
#include "sympel/error.hpp"
#include "sympel/field.hpp"
#include "sympel/generator.hpp"
#include "sympel/matrix.hpp"

namespace sympel {

/// S^-1 * M * S where S is described by its elimination output: transcript
/// t with (product of t) * S = diag. Applies G*(.)*G^-1 for each step G in
/// order, then D^-1*(.)*D.
template <FieldType F>
SquareMatrix<F> conjugate_by_transcript(SquareMatrix<F> m, const Transcript<F>& t,
                                        const SquareMatrix<F>& diag) {
    const F& f = m.field();
    const std::size_t ell = m.ell();
    if ((!t.steps.empty() && t.ell != ell) || diag.ell() != ell)
        throw error("conjugation dimension mismatch");
    for (std::size_t r = 0; r < diag.order(); ++r) {
        if (f.is_zero(diag(r, r))) throw error("conjugation diagonal has a zero entry");
        for (std::size_t c = 0; c < diag.order(); ++c)
            if (r != c && !f.is_zero(diag(r, c))) throw error("conjugation scale matrix is not diagonal");
    }

    for (const auto& step : t.steps) {
        apply_left(step, m);
        apply_right(invert_generator(step), m);
    }
    // D^-1 * M * D: entry (r, c) scales by d_c / d_r.
    for (std::size_t r = 0; r < m.order(); ++r)
        for (std::size_t c = 0; c < m.order(); ++c) {
            if (r == c) continue;
            m(r, c) = f.div(f.mul(m(r, c), diag(c, c)), diag(r, r));
        }
    return m;
}

/// S^-1 * M * S for a dense symplectic S, factored via eliminate(S).
template <FieldType F>
SquareMatrix<F> conjugate_by_symplectic(SquareMatrix<F> m, const SquareMatrix<F>& s,
                                        double tol = default_matrix_tol) {
    if (m.ell() != s.ell()) throw error("conjugation dimension mismatch");
    if (!is_symplectic(s, tol)) throw error("conjugating matrix is not symplectic");
    auto factored = eliminate(s);
    return conjugate_by_transcript(std::move(m), factored.transcript, factored.diagonal);
}

}  // namespace sympel

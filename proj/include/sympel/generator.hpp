#pragma once

// Elementary symplectic generators and their action as row (left) and
// column (right) operations.
//
// Writing R(i,j,a) = I + a*e_{i,j} and P(i,j,a) = a*(e_{i,j} + e_{j,i})
// (P = a*e_{i,i} when i == j), the three kinds materialize as
//
//   E(i,j,a) = [[R, 0], [0, tR^-1]]   (i != j)
//   F(i,j,a) = [[I, P], [0, I]]       (i <= j)
//   H(i,j,a) = [[I, 0], [P, I]]       (i <= j)
//
// Each is symplectic and acts on a matrix as at most two row operations
// when applied from the left. Indices here are 0-based in [0, ell);
// transcript files serialize them 1-based.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "sympel/error.hpp"
#include "sympel/field.hpp"
#include "sympel/matrix.hpp"
#include "sympel/prng.hpp"

namespace sympel {

enum class GenKind : char { E = 'E', F = 'F', H = 'H' };

template <FieldType F>
class Generator {
public:
    using Element = typename F::Element;

    /// Validates index ranges, i != j for kind E, and alpha != 0. F/H are
    /// normalized to i <= j (the symmetric P makes both orders the same
    /// matrix).
    Generator(GenKind kind, std::size_t i, std::size_t j, Element alpha, std::size_t ell, F field)
        : kind_(kind), i_(i), j_(j), alpha_(std::move(alpha)), ell_(ell), field_(std::move(field)) {
        if (ell_ == 0) throw error("generator needs positive ell");
        if (i_ >= ell_ || j_ >= ell_) throw error("generator index out of range");
        if (field_.is_zero(alpha_)) throw error("generator alpha must be nonzero");
        if (kind_ == GenKind::E) {
            if (i_ == j_) throw error("E generator requires i != j");
        } else if (i_ > j_) {
            std::swap(i_, j_);
        }
    }

    GenKind kind() const { return kind_; }
    std::size_t i() const { return i_; }
    std::size_t j() const { return j_; }
    const Element& alpha() const { return alpha_; }
    std::size_t ell() const { return ell_; }
    const F& field() const { return field_; }

private:
    GenKind kind_;
    std::size_t i_, j_;
    Element alpha_;
    std::size_t ell_;
    F field_;
};

/// Ordered sequence of generators; the represented matrix is the product
/// of the materialized steps applied from the left, earliest step first.
template <FieldType F>
struct Transcript {
    std::size_t ell = 0;
    std::vector<Generator<F>> steps;

    std::size_t size() const { return steps.size(); }
    bool empty() const { return steps.empty(); }
    void push(Generator<F> g) { steps.push_back(std::move(g)); }
};

template <FieldType F>
SquareMatrix<F> materialize(const Generator<F>& g) {
    const F& f = g.field();
    const std::size_t ell = g.ell();
    auto m = SquareMatrix<F>::identity(f, ell);
    const auto& a = g.alpha();
    switch (g.kind()) {
        case GenKind::E:
            m(g.i(), g.j()) = a;
            m(ell + g.j(), ell + g.i()) = f.neg(a);  // tR^-1 = I - a*e_{j,i}
            break;
        case GenKind::F:
            if (g.i() == g.j()) {
                m(g.i(), ell + g.i()) = a;
            } else {
                m(g.i(), ell + g.j()) = a;
                m(g.j(), ell + g.i()) = a;
            }
            break;
        case GenKind::H:
            if (g.i() == g.j()) {
                m(ell + g.i(), g.i()) = a;
            } else {
                m(ell + g.i(), g.j()) = a;
                m(ell + g.j(), g.i()) = a;
            }
            break;
    }
    return m;
}

/// In-place G <- materialize(g) * G, as row operations:
///   E: row_i += a*row_j,        row_{l+j} -= a*row_{l+i}
///   F: row_i += a*row_{l+j},    row_j += a*row_{l+i}   (one op when i == j)
///   H: row_{l+i} += a*row_j,    row_{l+j} += a*row_i   (one op when i == j)
template <FieldType F>
void apply_left(const Generator<F>& g, SquareMatrix<F>& m) {
    if (g.ell() != m.ell() || !(g.field() == m.field()))
        throw error("generator/matrix mismatch");
    const std::size_t ell = m.ell();
    const auto& a = g.alpha();
    switch (g.kind()) {
        case GenKind::E:
            m.row_axpy(g.i(), g.j(), a);
            m.row_axpy(ell + g.j(), ell + g.i(), m.field().neg(a));
            break;
        case GenKind::F:
            if (g.i() == g.j()) {
                m.row_axpy(g.i(), ell + g.i(), a);
            } else {
                m.row_axpy(g.i(), ell + g.j(), a);
                m.row_axpy(g.j(), ell + g.i(), a);
            }
            break;
        case GenKind::H:
            if (g.i() == g.j()) {
                m.row_axpy(ell + g.i(), g.i(), a);
            } else {
                m.row_axpy(ell + g.i(), g.j(), a);
                m.row_axpy(ell + g.j(), g.i(), a);
            }
            break;
    }
}

/// In-place G <- G * materialize(g), the mirrored column operations.
template <FieldType F>
void apply_right(const Generator<F>& g, SquareMatrix<F>& m) {
    if (g.ell() != m.ell() || !(g.field() == m.field()))
        throw error("generator/matrix mismatch");
    const std::size_t ell = m.ell();
    const auto& a = g.alpha();
    switch (g.kind()) {
        case GenKind::E:
            m.col_axpy(g.j(), g.i(), a);
            m.col_axpy(ell + g.i(), ell + g.j(), m.field().neg(a));
            break;
        case GenKind::F:
            if (g.i() == g.j()) {
                m.col_axpy(ell + g.i(), g.i(), a);
            } else {
                m.col_axpy(ell + g.j(), g.i(), a);
                m.col_axpy(ell + g.i(), g.j(), a);
            }
            break;
        case GenKind::H:
            if (g.i() == g.j()) {
                m.col_axpy(g.i(), ell + g.i(), a);
            } else {
                m.col_axpy(g.j(), ell + g.i(), a);
                m.col_axpy(g.i(), ell + g.j(), a);
            }
            break;
    }
}

/// Same kind and indices with negated alpha; materialize(inverse) *
/// materialize(g) is the identity.
template <FieldType F>
Generator<F> invert_generator(const Generator<F>& g) {
    return Generator<F>(g.kind(), g.i(), g.j(), g.field().neg(g.alpha()), g.ell(), g.field());
}

/// The three-step sequence [F(i,i,1), H(i,i,-1), F(i,i,1)] whose product
/// maps row_i <- row_{l+i} and row_{l+i} <- -row_i.
template <FieldType F>
Transcript<F> row_exchange_sequence(std::size_t i, std::size_t ell, const F& field) {
    if (i >= ell) throw error("row exchange index out of range");
    Transcript<F> t{ell, {}};
    t.push(Generator<F>(GenKind::F, i, i, field.one(), ell, field));
    t.push(Generator<F>(GenKind::H, i, i, field.neg(field.one()), ell, field));
    t.push(Generator<F>(GenKind::F, i, i, field.one(), ell, field));
    return t;
}

namespace detail {

inline mpq_class random_nonzero(const RationalField&, SplitMix64& rng) {
    auto draw = [&rng] {
        long v = static_cast<long>(rng.below(18));  // [0, 18) -> [-9, 9] \ {0}
        return v < 9 ? v - 9 : v - 8;
    };
    mpq_class q(draw());
    q /= draw();  // mpq division canonicalizes
    return q;
}

inline std::uint64_t random_nonzero(const PrimeField& f, SplitMix64& rng) {
    return 1 + rng.below(f.modulus() - 1);
}

// Magnitude in [1/4, 2]: bounded and safely away from the zero tolerance.
inline double random_nonzero(const ApproxField&, SplitMix64& rng) {
    double mag = 0.25 + 1.75 * rng.unit();
    return rng.below(2) == 0 ? mag : -mag;
}

template <FieldType F>
Generator<F> random_generator(const F& field, std::size_t ell, SplitMix64& rng) {
    GenKind kind;
    std::size_t i, j;
    if (ell == 1) {
        kind = rng.below(2) == 0 ? GenKind::F : GenKind::H;
        i = j = 0;
    } else {
        switch (rng.below(3)) {
            case 0: kind = GenKind::E; break;
            case 1: kind = GenKind::F; break;
            default: kind = GenKind::H; break;
        }
        i = rng.below(ell);
        j = rng.below(ell);
        if (kind == GenKind::E)
            while (j == i) j = rng.below(ell);
    }
    return Generator<F>(kind, i, j, random_nonzero(field, rng), ell, field);
}

}  // namespace detail

/// Product of `steps` random generators applied to the identity.
/// Deterministic for a fixed (ell, steps, seed, field); always symplectic.
template <FieldType F>
SquareMatrix<F> random_symplectic(const F& field, std::size_t ell, std::size_t steps,
                                  std::uint64_t seed) {
    SplitMix64 rng(seed);
    auto m = SquareMatrix<F>::identity(field, ell);
    for (std::size_t k = 0; k < steps; ++k)
        apply_left(detail::random_generator(field, ell, rng), m);
    return m;
}

}  // namespace sympel

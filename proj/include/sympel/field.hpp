#pragma once

// Field abstraction: every algorithm in this library is generic over a field
// descriptor type that carries the arithmetic, the zero test and the scalar
// literal syntax. Three descriptors are provided:
//
//   RationalField  -- exact arbitrary-precision rationals (GMP mpq)
//   PrimeField     -- GF(p) residues for a runtime prime p
//   ApproxField    -- double precision with an absolute zero tolerance
//
// Scalar literals: integer `-?[0-9]+`, rational `-?[0-9]+/[1-9][0-9]*`,
// float `-?[0-9]+(.[0-9]+)?([eE]-?[0-9]+)?`. Each field accepts the subset
// that denotes its elements.

#include <charconv>
#include <concepts>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "sympel/error.hpp"

namespace sympel {

/// Default absolute tolerance used by ApproxField pivot/zero tests.
inline constexpr double default_pivot_eps = 1e-10;

/// Runtime selector for the active field, as written on a command line
/// (`rational`, `gfp:P`, `float[:EPS]`) or in a matrix file header.
struct FieldConfig {
    enum class Kind { rational, prime, approx };

    Kind kind = Kind::rational;
    std::uint64_t prime = 0;  // Kind::prime only
    double eps = default_pivot_eps;  // Kind::approx only

    static FieldConfig parse(std::string_view spec);
    std::string to_string() const;

    friend bool operator==(const FieldConfig& a, const FieldConfig& b) {
        if (a.kind != b.kind) return false;
        if (a.kind == Kind::prime) return a.prime == b.prime;
        if (a.kind == Kind::approx) return a.eps == b.eps;
        return true;
    }
};

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

// integer literal: -?[0-9]+
inline bool valid_integer_literal(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    return all_digits(s);
}

// float literal: -?[0-9]+(.[0-9]+)?([eE]-?[0-9]+)?
inline bool valid_float_literal(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    std::size_t i = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == 0) return false;
    if (i < s.size() && s[i] == '.') {
        ++i;
        std::size_t start = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i == start) return false;
    }
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        if (i < s.size() && s[i] == '-') ++i;
        std::size_t start = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i == start) return false;
    }
    return i == s.size();
}

inline bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

}  // namespace detail

/// Exact rationals, stored in lowest terms with positive denominator.
class RationalField {
public:
    using Element = mpq_class;
    static constexpr bool exact = true;

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(long v) const { return Element(v); }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }

    // In-place forms that reuse the destination's storage; these carry the
    // inner loops of the row operations and matrix products.
    void mul_into(Element& out, const Element& a, const Element& b) const {
        mpq_mul(out.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    }
    void add_into(Element& acc, const Element& a) const {
        mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), a.get_mpq_t());
    }

    Element inv(const Element& a) const {
        if (is_zero(a)) throw error("cannot invert zero");
        return 1 / a;
    }

    Element div(const Element& a, const Element& b) const {
        if (is_zero(b)) throw error("division by zero");
        return a / b;
    }

    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool eq(const Element& a, const Element& b) const { return a == b; }

    Element parse(std::string_view text) const {
        auto slash = text.find('/');
        std::string_view num = text.substr(0, slash == std::string_view::npos ? text.size() : slash);
        if (!detail::valid_integer_literal(num))
            throw error("malformed rational literal '" + std::string(text) + "'");
        if (slash == std::string_view::npos)
            return canonical(mpz_class(std::string(num), 10), mpz_class(1));
        std::string_view den = text.substr(slash + 1);
        if (!detail::all_digits(den))
            throw error("malformed rational literal '" + std::string(text) + "'");
        mpz_class d(std::string(den), 10);
        if (sgn(d) == 0) throw error("zero denominator in '" + std::string(text) + "'");
        if (den.front() == '0')
            throw error("malformed rational literal '" + std::string(text) + "'");
        return canonical(mpz_class(std::string(num), 10), std::move(d));
    }

    std::string to_string(const Element& a) const { return a.get_str(); }

    FieldConfig config() const { return FieldConfig{FieldConfig::Kind::rational, 0, 0.0}; }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }

private:
    static Element canonical(mpz_class num, mpz_class den) {
        Element q(std::move(num), std::move(den));
        q.canonicalize();
        return q;
    }
};

/// GF(p) for a runtime prime p < 2^32; residues live in [0, p).
class PrimeField {
public:
    using Element = std::uint64_t;
    static constexpr bool exact = true;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p >= (std::uint64_t{1} << 32))
            throw error("prime modulus too large (need p < 2^32)");
        if (!detail::is_prime_u64(p))
            throw error(std::to_string(p) + " is not prime");
    }

    std::uint64_t modulus() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1 % p_; }

    Element from_int(long v) const {
        long r = v % static_cast<long>(p_);
        if (r < 0) r += static_cast<long>(p_);
        return static_cast<Element>(r);
    }

    Element add(Element a, Element b) const { return (a + b) % p_; }
    Element sub(Element a, Element b) const { return (a + p_ - b) % p_; }
    Element mul(Element a, Element b) const { return (a * b) % p_; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    void mul_into(Element& out, Element a, Element b) const { out = mul(a, b); }
    void add_into(Element& acc, Element a) const { acc = add(acc, a); }

    Element inv(Element a) const {
        if (a == 0) throw error("cannot invert zero");
        // extended Euclid
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            t -= q * nt;
            std::swap(t, nt);
            r -= q * nr;
            std::swap(r, nr);
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<Element>(t);
    }

    Element div(Element a, Element b) const {
        if (b == 0) throw error("division by zero");
        return mul(a, inv(b));
    }

    bool is_zero(Element a) const { return a == 0; }
    bool eq(Element a, Element b) const { return a == b; }

    // Out-of-range and negative integers reduce mod p.
    Element parse(std::string_view text) const {
        std::string_view digits = text;
        bool negative = false;
        if (!digits.empty() && digits.front() == '-') {
            negative = true;
            digits.remove_prefix(1);
        }
        if (!detail::all_digits(digits))
            throw error("malformed GF(p) literal '" + std::string(text) + "'");
        Element r = 0;
        for (char c : digits) r = (r * 10 + static_cast<Element>(c - '0')) % p_;
        return negative ? neg(r) : r;
    }

    std::string to_string(Element a) const { return std::to_string(a); }

    FieldConfig config() const { return FieldConfig{FieldConfig::Kind::prime, p_, 0.0}; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint64_t p_;
};

/// Double precision with an absolute zero tolerance applied to pivot and
/// scalar zero tests. Matrix-level comparisons use a separate relative
/// tolerance (see matrix.hpp).
class ApproxField {
public:
    using Element = double;
    static constexpr bool exact = false;

    explicit ApproxField(double eps = default_pivot_eps) : eps_(eps) {
        if (!(eps >= 0)) throw error("tolerance must be >= 0");
    }

    double eps() const { return eps_; }

    Element zero() const { return 0.0; }
    Element one() const { return 1.0; }
    Element from_int(long v) const { return static_cast<double>(v); }

    Element add(Element a, Element b) const { return a + b; }
    Element sub(Element a, Element b) const { return a - b; }
    Element mul(Element a, Element b) const { return a * b; }
    Element neg(Element a) const { return -a; }
    void mul_into(Element& out, Element a, Element b) const { out = a * b; }
    void add_into(Element& acc, Element a) const { acc += a; }

    Element inv(Element a) const {
        if (is_zero(a)) throw error("cannot invert zero (below tolerance)");
        return 1.0 / a;
    }

    Element div(Element a, Element b) const {
        if (is_zero(b)) throw error("division by zero (below tolerance)");
        return a / b;
    }

    bool is_zero(Element a) const { return (a < 0 ? -a : a) <= eps_; }
    bool eq(Element a, Element b) const { return a == b; }

    Element parse(std::string_view text) const {
        if (!detail::valid_float_literal(text))
            throw error("malformed float literal '" + std::string(text) + "'");
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw error("malformed float literal '" + std::string(text) + "'");
        return v;
    }

    // Shortest round-trip form, normalized to the literal grammar
    // (no '+' in exponents).
    std::string to_string(Element a) const {
        char buf[64];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, a);
        std::string s(buf, ptr);
        if (auto pos = s.find("e+"); pos != std::string::npos) s.erase(pos + 1, 1);
        return s;
    }

    FieldConfig config() const { return FieldConfig{FieldConfig::Kind::approx, 0, eps_}; }

    friend bool operator==(const ApproxField& a, const ApproxField& b) { return a.eps_ == b.eps_; }

private:
    double eps_;
};

/// Requirements every field descriptor satisfies.
template <typename F>
concept FieldType =
    std::copyable<F> && requires(const F f, const typename F::Element& a, typename F::Element& out,
                                 std::string_view text) {
        typename F::Element;
        requires std::same_as<decltype(F::exact), const bool>;
        { f.zero() } -> std::same_as<typename F::Element>;
        { f.one() } -> std::same_as<typename F::Element>;
        { f.from_int(long{}) } -> std::same_as<typename F::Element>;
        { f.add(a, a) } -> std::same_as<typename F::Element>;
        { f.sub(a, a) } -> std::same_as<typename F::Element>;
        { f.mul(a, a) } -> std::same_as<typename F::Element>;
        { f.neg(a) } -> std::same_as<typename F::Element>;
        { f.inv(a) } -> std::same_as<typename F::Element>;
        { f.div(a, a) } -> std::same_as<typename F::Element>;
        { f.mul_into(out, a, a) } -> std::same_as<void>;
        { f.add_into(out, a) } -> std::same_as<void>;
        { f.is_zero(a) } -> std::same_as<bool>;
        { f.eq(a, a) } -> std::same_as<bool>;
        { f.parse(text) } -> std::same_as<typename F::Element>;
        { f.to_string(a) } -> std::same_as<std::string>;
        { f.config() } -> std::same_as<FieldConfig>;
        { f == f } -> std::convertible_to<bool>;
    };

inline FieldConfig FieldConfig::parse(std::string_view spec) {
    if (spec == "rational") return FieldConfig{Kind::rational, 0, 0.0};
    if (spec == "float") return FieldConfig{Kind::approx, 0, default_pivot_eps};
    if (spec.rfind("float:", 0) == 0) {
        std::string_view eps_text = spec.substr(6);
        if (!detail::valid_float_literal(eps_text))
            throw error("bad tolerance in field spec '" + std::string(spec) + "'");
        double eps = ApproxField().parse(eps_text);
        if (!(eps >= 0)) throw error("tolerance must be >= 0");
        return FieldConfig{Kind::approx, 0, eps};
    }
    if (spec.rfind("gfp:", 0) == 0) {
        std::string_view p_text = spec.substr(4);
        if (!detail::all_digits(p_text))
            throw error("bad prime in field spec '" + std::string(spec) + "'");
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(p_text.data(), p_text.data() + p_text.size(), p);
        if (ec != std::errc{} || ptr != p_text.data() + p_text.size())
            throw error("bad prime in field spec '" + std::string(spec) + "'");
        PrimeField probe(p);  // validates primality
        return probe.config();
    }
    throw error("unknown field spec '" + std::string(spec) + "' (want rational, gfp:P or float[:EPS])");
}

inline std::string FieldConfig::to_string() const {
    switch (kind) {
        case Kind::rational: return "rational";
        case Kind::prime: return "gfp:" + std::to_string(prime);
        case Kind::approx: return eps == default_pivot_eps ? "float" : "float:" + ApproxField().to_string(eps);
    }
    return "rational";
}

}  // namespace sympel

#pragma once

// Text formats. Matrix files: an optional `# field: ...` header line, then
// one whitespace-separated row of scalar literals per line. Transcript
// files: one generator per line, `E i j alpha` with 1-based indices, in
// application order.

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

namespace detail {

struct Token {
    std::string_view text;
    std::size_t line;    // 1-based
    std::size_t column;  // 1-based
};

struct Line {
    std::string_view text;
    std::size_t number;  // 1-based
};

inline std::vector<Line> nonblank_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++number;
        if (line.find_first_not_of(" \t\r") != std::string_view::npos)
            lines.push_back(Line{line, number});
    }
    return lines;
}

inline std::vector<Token> tokenize(const Line& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.text.size()) {
        if (line.text[i] == ' ' || line.text[i] == '\t' || line.text[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.text.size() && line.text[i] != ' ' && line.text[i] != '\t' &&
               line.text[i] != '\r')
            ++i;
        tokens.push_back(Token{line.text.substr(start, i - start), line.number, start + 1});
    }
    return tokens;
}

template <FieldType F>
typename F::Element parse_scalar_token(const F& field, const Token& tok) {
    try {
        return field.parse(tok.text);
    } catch (const error& e) {
        throw parse_error(e.what(), tok.line, tok.column);
    }
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

}  // namespace detail

/// Field declared by the optional first-line header, if any.
/// Header grammar: `# field: rational|gfp:P|float[:EPS]`.
inline std::optional<FieldConfig> matrix_file_field(std::string_view text) {
    auto lines = detail::nonblank_lines(text);
    if (lines.empty() || lines.front().text.front() != '#') return std::nullopt;
    std::string_view body = detail::trim(lines.front().text.substr(1));
    if (body.rfind("field:", 0) != 0)
        throw parse_error("matrix header must look like '# field: rational'", lines.front().number, 1);
    std::string_view spec = detail::trim(body.substr(6));
    try {
        return FieldConfig::parse(spec);
    } catch (const error& e) {
        throw parse_error(e.what(), lines.front().number, 1);
    }
}

/// Parse a matrix file with a known field. If the file carries a header it
/// must agree with `field` (use matrix_file_field + with_field to honor
/// header overrides).
template <FieldType F>
SquareMatrix<F> parse_matrix_file(std::string_view text, const F& field) {
    auto declared = matrix_file_field(text);
    if (declared) {
        auto cfg = field.config();
        bool same = declared->kind == cfg.kind &&
                    (declared->kind != FieldConfig::Kind::prime || declared->prime == cfg.prime);
        if (!same)
            throw error("matrix file declares field " + declared->to_string() +
                        " but was parsed as " + cfg.to_string());
    }
    auto lines = detail::nonblank_lines(text);
    std::size_t first_row = declared ? 1 : 0;
    if (lines.size() <= first_row) throw parse_error("no matrix rows found", 1, 1);

    const std::size_t n = lines.size() - first_row;
    if (n % 2 != 0)
        throw parse_error("matrix order must be even, got " + std::to_string(n),
                          lines.back().number, 1);
    SquareMatrix<F> m(field, n / 2);
    for (std::size_t r = 0; r < n; ++r) {
        const auto& line = lines[first_row + r];
        auto tokens = detail::tokenize(line);
        if (tokens.size() != n)
            throw parse_error("row has " + std::to_string(tokens.size()) + " entries, expected " +
                                  std::to_string(n),
                              line.number, tokens.empty() ? 1 : tokens.back().column);
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = detail::parse_scalar_token(field, tokens[c]);
    }
    return m;
}

template <FieldType F>
std::string write_matrix_file(const SquareMatrix<F>& m) {
    const F& f = m.field();
    std::string out;
    for (std::size_t r = 0; r < m.order(); ++r) {
        for (std::size_t c = 0; c < m.order(); ++c) {
            if (c) out += ' ';
            out += f.to_string(m(r, c));
        }
        out += '\n';
    }
    return out;
}

template <FieldType F>
Transcript<F> parse_transcript(std::string_view text, const F& field, std::size_t ell) {
    Transcript<F> t{ell, {}};
    for (const auto& line : detail::nonblank_lines(text)) {
        auto tokens = detail::tokenize(line);
        if (tokens.size() != 4)
            throw parse_error("transcript step needs 4 fields: kind i j alpha", line.number, 1);
        const auto& kind_tok = tokens[0];
        GenKind kind;
        if (kind_tok.text == "E") kind = GenKind::E;
        else if (kind_tok.text == "F") kind = GenKind::F;
        else if (kind_tok.text == "H") kind = GenKind::H;
        else throw parse_error("unknown generator kind '" + std::string(kind_tok.text) + "'",
                               kind_tok.line, kind_tok.column);
        auto index = [&](const detail::Token& tok) -> std::size_t {
            std::size_t v = 0;
            if (!detail::all_digits(tok.text))
                throw parse_error("bad generator index '" + std::string(tok.text) + "'", tok.line,
                                  tok.column);
            for (char c : tok.text) {
                v = v * 10 + static_cast<std::size_t>(c - '0');
                if (v > ell) break;
            }
            if (v < 1 || v > ell)
                throw parse_error("generator index out of range [1, " + std::to_string(ell) + "]",
                                  tok.line, tok.column);
            return v - 1;
        };
        std::size_t i = index(tokens[1]);
        std::size_t j = index(tokens[2]);
        auto alpha = detail::parse_scalar_token(field, tokens[3]);
        try {
            t.push(Generator<F>(kind, i, j, std::move(alpha), ell, field));
        } catch (const error& e) {
            throw parse_error(e.what(), line.number, 1);
        }
    }
    return t;
}

template <FieldType F>
std::string write_transcript(const Transcript<F>& t) {
    std::string out;
    for (const auto& g : t.steps) {
        out += static_cast<char>(g.kind());
        out += ' ';
        out += std::to_string(g.i() + 1);
        out += ' ';
        out += std::to_string(g.j() + 1);
        out += ' ';
        out += g.field().to_string(g.alpha());
        out += '\n';
    }
    return out;
}

/// Invoke fn with the field descriptor selected by cfg.
template <typename Fn>
decltype(auto) with_field(const FieldConfig& cfg, Fn&& fn) {
    switch (cfg.kind) {
        case FieldConfig::Kind::prime: return fn(PrimeField(cfg.prime));
        case FieldConfig::Kind::approx: return fn(ApproxField(cfg.eps));
        case FieldConfig::Kind::rational: break;
    }
    return fn(RationalField{});
}

}  // namespace sympel

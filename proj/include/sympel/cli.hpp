#pragma once

// Command-line front end. Thin wrappers over the library: every output is
// the serialized result of the corresponding library call.
//
// Exit codes: 0 success, 1 usage/file/parse errors, 2 a required predicate
// is false (not symplectic, singular input, and similar domain errors),
// 3 strict-mode ST decomposition failure.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sympel/conjugate.hpp"
#include "sympel/eliminate.hpp"
#include "sympel/error.hpp"
#include "sympel/field.hpp"
#include "sympel/generator.hpp"
#include "sympel/io.hpp"
#include "sympel/matrix.hpp"
#include "sympel/st.hpp"

namespace sympel {

namespace detail {

inline bool slurp(const std::string& path, std::string& text) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    return true;
}

inline bool spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << text;
    return bool(out);
}

/// Maps library exceptions to exit codes: text/format problems are usage
/// errors (1), everything else is a failed domain requirement (2).
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
}

/// Effective config for a matrix file: the header wins over the flag.
inline FieldConfig effective_field(const std::string& text, const FieldConfig& flag_cfg) {
    if (auto declared = matrix_file_field(text)) return *declared;
    return flag_cfg;
}

inline std::string yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

/// Run the tool on `args` (without the program name). Results go to `out`,
/// diagnostics to `err`; returns the process exit code.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"symplectic elimination, ST decomposition and conjugation over exact and float fields"};
    app.name("sympel");
    app.require_subcommand(1);

    std::string check_file;
    auto* check = app.add_subcommand("check", "report symplectic/reduced/diagonal predicates");
    check->add_option("file", check_file, "matrix file")->required();

    std::string elim_file, elim_field = "rational", elim_transcript;
    bool elim_checked = false;
    auto* elim = app.add_subcommand("eliminate", "reduce a symplectic matrix to diagonal form");
    elim->add_option("file", elim_file, "matrix file")->required();
    elim->add_option("--field", elim_field, "rational | gfp:P | float[:EPS] (default rational)");
    elim->add_option("--transcript", elim_transcript, "write the applied generators to this file");
    elim->add_flag("--checked", elim_checked, "assert per-cycle reduction milestones");

    std::string st_file, st_mode = "strict", st_sout, st_tout;
    auto* st = app.add_subcommand("st", "decompose a nonsingular matrix as symplectic * reduced");
    st->add_option("file", st_file, "matrix file")->required();
    st->add_option("--mode", st_mode, "strict | permissive (default strict)")
        ->check(CLI::IsMember({"strict", "permissive"}));
    st->add_option("--s-out", st_sout, "write the symplectic factor to this file");
    st->add_option("--t-out", st_tout, "write the reduced factor to this file");

    std::string conj_m, conj_s;
    auto* conj = app.add_subcommand("conjugate", "compute S^-1 M S for symplectic S");
    conj->add_option("--m", conj_m, "matrix file for M")->required();
    conj->add_option("--s", conj_s, "matrix file for the symplectic S")->required();

    std::uint64_t gen_ell = 0, gen_ops = 0, gen_seed = 0;
    std::string gen_field = "rational";
    auto* gen = app.add_subcommand("gen", "write a random symplectic matrix");
    gen->add_option("--ell", gen_ell, "half-order (matrix is 2*ell x 2*ell)")
        ->required()
        ->check(CLI::PositiveNumber);
    gen->add_option("--ops", gen_ops, "number of random generator factors")->required();
    gen->add_option("--seed", gen_seed, "PRNG seed")->required();
    gen->add_option("--field", gen_field, "rational | gfp:P | float[:EPS] (default rational)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    auto load = [&err](const std::string& path, std::string& text) {
        if (detail::slurp(path, text)) return true;
        err << "error: cannot read '" << path << "'\n";
        return false;
    };
    auto parse_flag_field = [&err](const std::string& spec, FieldConfig& cfg) {
        try {
            cfg = FieldConfig::parse(spec);
            return true;
        } catch (const error& e) {
            err << "error: " << e.what() << '\n';
            return false;
        }
    };

    if (*check) {
        std::string text;
        if (!load(check_file, text)) return 1;
        return detail::guarded(err, [&]() -> int {
            return with_field(detail::effective_field(text, FieldConfig{}), [&](auto field) -> int {
                auto m = parse_matrix_file(text, field);
                bool symplectic = is_symplectic(m);
                out << "symplectic: " << detail::yesno(symplectic) << '\n';
                out << "reduced: " << detail::yesno(is_reduced(m)) << '\n';
                out << "diagonal-symplectic: " << detail::yesno(is_diagonal_symplectic(m)) << '\n';
                return symplectic ? 0 : 2;
            });
        });
    }

    if (*elim) {
        std::string text;
        FieldConfig flag_cfg;
        if (!parse_flag_field(elim_field, flag_cfg)) return 1;
        if (!load(elim_file, text)) return 1;
        return detail::guarded(err, [&]() -> int {
            return with_field(detail::effective_field(text, flag_cfg), [&](auto field) -> int {
                auto m = parse_matrix_file(text, field);
                auto result = eliminate(std::move(m), elim_checked);
                if constexpr (!std::decay_t<decltype(field)>::exact)
                    err << "max off-diagonal residual: "
                        << field.to_string(result.max_offdiag_residual) << '\n';
                if (!elim_transcript.empty() &&
                    !detail::spit(elim_transcript, write_transcript(result.transcript))) {
                    err << "error: cannot write '" << elim_transcript << "'\n";
                    return 1;
                }
                out << write_matrix_file(result.diagonal);
                return 0;
            });
        });
    }

    if (*st) {
        std::string text;
        if (!load(st_file, text)) return 1;
        return detail::guarded(err, [&]() -> int {
            return with_field(detail::effective_field(text, FieldConfig{}), [&](auto field) -> int {
                auto m = parse_matrix_file(text, field);
                auto mode = st_mode == "permissive" ? STMode::permissive : STMode::strict;
                auto result = st_decompose(m, mode);
                if (!result.ok()) {
                    const auto& f = result.failure();
                    err << "st decomposition failed at column " << f.column + 1 << " ("
                        << to_string(f.stage) << ")\n";
                    return 3;
                }
                for (const auto& skipped : result.unreduced_columns)
                    err << "column " << skipped.column + 1 << " left unreduced ("
                        << to_string(skipped.stage) << ")\n";
                const auto& payload = result.success();
                std::string s_text = write_matrix_file(payload.s);
                std::string t_text = write_matrix_file(payload.t);
                if (!st_sout.empty()) {
                    if (!detail::spit(st_sout, s_text)) {
                        err << "error: cannot write '" << st_sout << "'\n";
                        return 1;
                    }
                } else {
                    out << s_text;
                }
                if (!st_tout.empty()) {
                    if (!detail::spit(st_tout, t_text)) {
                        err << "error: cannot write '" << st_tout << "'\n";
                        return 1;
                    }
                } else {
                    out << t_text;
                }
                return 0;
            });
        });
    }

    if (*conj) {
        std::string m_text, s_text;
        if (!load(conj_m, m_text) || !load(conj_s, s_text)) return 1;
        return detail::guarded(err, [&]() -> int {
            FieldConfig m_cfg = detail::effective_field(m_text, FieldConfig{});
            FieldConfig s_cfg = detail::effective_field(s_text, m_cfg);
            if (!(m_cfg == s_cfg)) {
                err << "error: matrix files declare different fields (" << m_cfg.to_string()
                    << " vs " << s_cfg.to_string() << ")\n";
                return 1;
            }
            return with_field(m_cfg, [&](auto field) -> int {
                auto m = parse_matrix_file(m_text, field);
                auto s = parse_matrix_file(s_text, field);
                out << write_matrix_file(conjugate_by_symplectic(std::move(m), s));
                return 0;
            });
        });
    }

    // gen
    FieldConfig cfg;
    if (!parse_flag_field(gen_field, cfg)) return 1;
    return detail::guarded(err, [&]() -> int {
        return with_field(cfg, [&](auto field) -> int {
            out << write_matrix_file(random_symplectic(field, gen_ell, gen_ops, gen_seed));
            return 0;
        });
    });
}

}  // namespace sympel

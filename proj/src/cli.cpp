#include "foldrun/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "foldrun/automaton.hpp"
#include "foldrun/contfrac.hpp"
#include "foldrun/errors.hpp"
#include "foldrun/factors.hpp"
#include "foldrun/foldcore.hpp"
#include "foldrun/inference.hpp"
#include "foldrun/oracle.hpp"
#include "foldrun/regular.hpp"
#include "foldrun/report.hpp"
#include "foldrun/runs.hpp"
#include "foldrun/theorems.hpp"

namespace foldrun {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { tsv, json_lines };

void add_format_option(CLI::App* sub, std::string& format) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"tsv", "json-lines"}))
        ->capture_default_str();
}

Format parse_format(const std::string& s) { return s == "json-lines" ? Format::json_lines : Format::tsv; }

// Writes a table either as TSV with a header line or as one JSON object per
// row. Cells are preformatted strings or integers.
class Table {
public:
    Table(std::ostream& out, Format format, std::vector<std::string> columns)
        : out_(out), format_(format), columns_(std::move(columns)) {
        if (format_ == Format::tsv) emit_tsv_line(columns_);
    }

    void row(const std::vector<Json>& cells) {
        if (format_ == Format::tsv) {
            std::vector<std::string> text;
            for (const Json& c : cells) text.push_back(c.is_string() ? c.get<std::string>() : c.dump());
            emit_tsv_line(text);
        } else {
            Json obj = Json::object();
            for (std::size_t i = 0; i < columns_.size(); ++i) obj[columns_[i]] = cells[i];
            out_ << obj.dump() << '\n';
        }
    }

private:
    void emit_tsv_line(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i == 0 ? "" : "\t") << cells[i];
        out_ << '\n';
    }

    std::ostream& out_;
    Format format_;
    std::vector<std::string> columns_;
};

struct CodeOptions {
    std::string code;
    bool regular = false;
    std::optional<std::size_t> length;
};

void add_code_options(CLI::App* sub, CodeOptions& o) {
    sub->add_option("--code", o.code, "unfolding instructions over +,-,0 (e.g. ++-+)");
    sub->add_flag("--regular", o.regular, "use the regular code of --length plus signs");
    sub->add_option("--length", o.length, "number of instructions for --regular")
        ->check(CLI::Range(std::size_t{0}, max_materialized_length));
}

FoldCode resolve_code(const CodeOptions& o) {
    if (o.regular == !o.code.empty()) throw UsageError("give exactly one of --code or --regular");
    if (o.regular) {
        if (!o.length) throw UsageError("--regular needs --length");
        return FoldCode::regular(*o.length);
    }
    if (o.length) throw UsageError("--length only applies to --regular");
    const FoldCode f = FoldCode::parse(o.code);
    if (f.effective_length() > max_materialized_length) {
        throw InvalidInput("codes are limited to " + std::to_string(max_materialized_length) + " instructions");
    }
    return f;
}

struct InferOptions {
    std::string name;
    std::size_t sample_depth = 10;
    std::size_t test_depth = 6;
};

void add_infer_options(CLI::App* sub, InferOptions& o, bool required) {
    auto* opt = sub->add_option("--automaton", o.name, "sp, ep, rl, rl1, rl2, rl3, lnk, sp_reg, ep_reg, rlr or tt")
                    ->check(CLI::IsMember(
                        {"sp", "ep", "rl", "rl1", "rl2", "rl3", "lnk", "sp_reg", "ep_reg", "rlr", "tt"}));
    if (required) opt->required();
    sub->add_option("--sample-depth", o.sample_depth, "length of access words")
        ->check(CLI::Range(1, 16))
        ->capture_default_str();
    sub->add_option("--test-depth", o.test_depth, "length of distinguishing suffixes")
        ->check(CLI::Range(1, 8))
        ->capture_default_str();
}

Automaton named_automaton(const InferOptions& o) {
    static const std::map<std::string, std::function<Oracle()>> oracles{
        {"sp", sp_oracle},
        {"ep", ep_oracle},
        {"rl", rl_oracle},
        {"lnk", lnk_oracle},
        {"rl1", [] { return rl_value_oracle(1); }},
        {"rl2", [] { return rl_value_oracle(2); }},
        {"rl3", [] { return rl_value_oracle(3); }},
        {"sp_reg", sp_oracle},
        {"ep_reg", ep_oracle},
        {"rlr", rl_oracle},
    };
    if (o.name == "tt") return build_tt(default_tt_limit(o.sample_depth, o.test_depth), o.sample_depth, o.test_depth);
    const Automaton a = infer_automaton(oracles.at(o.name)(), o.sample_depth, o.test_depth);
    if (o.name == "sp_reg" || o.name == "ep_reg" || o.name == "rlr") return specialize_regular(a);
    return a;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InvalidInput("cannot write " + path);
    file << text;
}

std::string read_text(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InvalidInput("cannot read " + path);
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void emit_reports(const std::vector<CheckReport>& reports, Format format, std::ostream& out) {
    Table table(out, format, {"check", "bound", "verdict", "witness", "note"});
    for (const CheckReport& r : reports) {
        Json witness = nullptr;
        if (r.witness) {
            witness = format == Format::tsv ? Json(r.witness->to_string())
                                            : Json{{"code", r.witness->code},
                                                   {"values", r.witness->values},
                                                   {"detail", r.witness->detail}};
        }
        table.row({r.name, r.bound, r.passed ? "PASS" : "FAIL", format == Format::tsv && !r.witness ? Json("-") : witness,
                   format == Format::tsv && r.note.empty() ? Json("-") : Json(r.note)});
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Runs in paperfolding sequences: generation, automata and bounded checks", "foldrun"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "help for all subcommands");

    std::string format = "tsv";
    CodeOptions code_opts;
    InferOptions infer_opts;

    // gen
    std::optional<std::uint64_t> gen_count;
    auto* gen = app.add_subcommand("gen", "print the paperfolding word of a code");
    add_code_options(gen, code_opts);
    gen->add_option("--count", gen_count, "print only the first terms")->check(CLI::PositiveNumber);
    add_format_option(gen, format);

    // runs
    std::string inventory;
    std::size_t inventory_max_len = 7;
    auto* runs = app.add_subcommand("runs", "print lengths, starts and ends of the runs");
    add_code_options(runs, code_opts);
    runs->add_option("--inventory", inventory, "list the squares or palindromes of R_f instead")
        ->check(CLI::IsMember({"squares", "palindromes"}));
    runs->add_option("--max-len", inventory_max_len, "longest palindrome listed")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format_option(runs, format);

    // infer
    std::string infer_out;
    auto* infer = app.add_subcommand("infer", "infer a minimal automaton from its semantic oracle");
    add_infer_options(infer, infer_opts, true);
    infer->add_option("--out", infer_out, "write the automaton file here instead of stdout");
    add_format_option(infer, format);

    // verify
    std::string suite = "all";
    std::size_t max_code_len = 10;
    std::uint64_t max_index = 100000;
    std::size_t cf_max = 12;
    std::size_t verify_depth = 10;
    auto* verify = app.add_subcommand("verify", "run the bounded check suites");
    verify->add_option("--suite", suite, "which checks to run")
        ->check(CLI::IsMember({"all", "sp", "runs", "automata", "regular", "cf"}))
        ->capture_default_str();
    verify->add_option("--max-code-len", max_code_len, "largest code length swept")
        ->check(CLI::Range(2, 14))
        ->capture_default_str();
    verify->add_option("--max-index", max_index, "largest index for the regular sequence")
        ->check(CLI::Range(std::uint64_t{16}, std::uint64_t{10000000}))
        ->capture_default_str();
    verify->add_option("--cf-max", cf_max, "largest n for continued fractions")
        ->check(CLI::Range(std::size_t{2}, max_alpha_index))
        ->capture_default_str();
    verify->add_option("--verify-depth", verify_depth, "word length for automaton verification")
        ->check(CLI::Range(1, 12))
        ->capture_default_str();
    add_format_option(verify, format);

    // cf
    std::string eps_text;
    std::optional<std::size_t> sweep;
    auto* cf = app.add_subcommand("cf", "continued fraction of alpha(eps) against the run-length prediction");
    cf->add_option("--eps", eps_text, "signs eps_2..eps_n, e.g. +,-,-,+");
    cf->add_option("--sweep", sweep, "check every sign vector with n <= N")
        ->check(CLI::Range(std::size_t{2}, max_alpha_index));
    add_format_option(cf, format);

    // complexity
    std::size_t n_from = 1;
    std::size_t n_to = 10;
    auto* complexity = app.add_subcommand("complexity", "windowed factor and right-special counts of R_f");
    add_code_options(complexity, code_opts);
    complexity->add_option("--from", n_from, "smallest factor length")->check(CLI::PositiveNumber)->capture_default_str();
    complexity->add_option("--to", n_to, "largest factor length")->check(CLI::PositiveNumber)->capture_default_str();
    add_format_option(complexity, format);

    // dot
    std::string dot_in;
    std::string dot_out;
    auto* dot = app.add_subcommand("dot", "render an automaton as Graphviz DOT");
    add_infer_options(dot, infer_opts, false);
    dot->add_option("--in", dot_in, "automaton file to render");
    dot->add_option("--out", dot_out, "write DOT here instead of stdout");
    add_format_option(dot, format);

    std::vector<std::string> argv_storage{"foldrun"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return exit_usage;
    }

    const Format fmt = parse_format(format);
    CLI::App* active = app.get_subcommands().front();

    try {
        if (active == gen) {
            const PaperfoldingWord word = paperfolding_word(resolve_code(code_opts));
            const std::uint64_t count = gen_count ? *gen_count : word.size();
            if (count > word.size()) {
                throw InvalidInput("--count exceeds the word length " + std::to_string(word.size()));
            }
            Table table(out, fmt, {"n", "P"});
            for (std::uint64_t n = 1; n <= count; ++n) table.row({n, to_int(word[n])});
            return exit_ok;
        }

        if (active == runs) {
            const FoldCode f = resolve_code(code_opts);
            if (f.effective_length() == 0) throw InvalidInput("the empty code has no runs");
            const RunDecomposition r = run_decompose(f);
            if (!inventory.empty()) {
                // One factor per line, ordered as strings.
                const FactorInventory inv = inventory == "squares" ? find_squares(r.lengths)
                                                                   : find_palindromes(r.lengths, inventory_max_len);
                for (const std::string& w : inv.factors) {
                    if (fmt == Format::tsv) {
                        out << w << '\n';
                    } else {
                        out << Json{{"factor", w}}.dump() << '\n';
                    }
                }
                return exit_ok;
            }
            Table table(out, fmt, {"n", "R", "S", "E"});
            for (std::size_t n = 1; n <= r.size(); ++n) table.row({n, r.length(n), r.start(n), r.end(n)});
            return exit_ok;
        }

        if (active == infer) {
            const Automaton a = named_automaton(infer_opts);
            if (!infer_out.empty()) write_text(infer_out, write_automaton(a));
            if (fmt == Format::json_lines || !infer_out.empty()) {
                Table table(out, fmt, {"automaton", "states", "mode"});
                table.row({infer_opts.name, a.state_count(), a.mode() == Mode::accept ? "accept" : "output"});
            } else {
                write_automaton(a, out);
            }
            return exit_ok;
        }

        if (active == verify) {
            std::vector<CheckReport> reports;
            auto append = [&](std::vector<CheckReport> more) {
                reports.insert(reports.end(), more.begin(), more.end());
            };
            const bool all = suite == "all";
            std::optional<StandardAutomata> automata;
            if (all || suite == "automata" || suite == "regular") {
                automata = infer_standard_automata();
            } else if (suite == "sp") {
                automata = StandardAutomata{infer_automaton(sp_oracle(), 10, 6), {}, {}};
            }
            if (all || suite == "sp") append(sp_suite(automata->sp, max_code_len));
            if (all || suite == "runs") append(runs_suite(max_code_len));
            if (all || suite == "automata") append(automata_suite(*automata, verify_depth, max_code_len));
            if (all || suite == "regular") append(regular_suite(specialize_standard(*automata), max_index));
            if (all || suite == "cf") append(cf_suite(cf_max));
            emit_reports(reports, fmt, out);
            return all_passed(reports) ? exit_ok : exit_check_failed;
        }

        if (active == cf) {
            if (eps_text.empty() == !sweep.has_value()) throw UsageError("give exactly one of --eps or --sweep");
            if (sweep) {
                const CheckReport r = cf_theorem_check(*sweep);
                emit_reports({r}, fmt, out);
                return r.passed ? exit_ok : exit_check_failed;
            }
            const std::vector<Sign> eps = parse_sign_vector(eps_text);
            const BigRational alpha = alpha_value(eps);
            const ContinuedFraction computed = cf_from_rational(alpha);
            const ContinuedFraction predicted = predicted_cf(eps);
            const bool match = computed == canonicalize(predicted);
            Table table(out, fmt, {"eps", "alpha", "computed", "predicted", "verdict"});
            table.row({format_sign_vector(eps), numerator(alpha).str() + "/" + denominator(alpha).str(),
                       computed.to_string(), predicted.to_string(), match ? "MATCH" : "MISMATCH"});
            return match ? exit_ok : exit_check_failed;
        }

        if (active == complexity) {
            const FoldCode f = resolve_code(code_opts);
            if (n_from > n_to) throw UsageError("--from must not exceed --to");
            const RunDecomposition r = run_decompose(f);
            const std::size_t t = f.effective_length();
            Table table(out, fmt, {"n", "factors", "right_special"});
            for (std::size_t n = n_from; n <= n_to; ++n) {
                table.row({n, subword_complexity(r, t, n), right_special_count(r, t, n)});
            }
            return exit_ok;
        }

        if (active == dot) {
            if (infer_opts.name.empty() == dot_in.empty()) throw UsageError("give exactly one of --automaton or --in");
            const Automaton a = dot_in.empty() ? named_automaton(infer_opts) : read_automaton(read_text(dot_in));
            const std::string name = dot_in.empty() ? infer_opts.name : std::filesystem::path(dot_in).stem().string();
            const std::string text = to_dot(a, name);
            if (!dot_out.empty()) write_text(dot_out, text);
            if (fmt == Format::json_lines) {
                Table table(out, fmt, {"automaton", "states", "dot"});
                table.row({name, a.state_count(), text});
            } else if (dot_out.empty()) {
                out << text;
            }
            return exit_ok;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << active->help();
        return exit_usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const IndexError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const InferenceError& e) {
        err << "inference failed: " << e.what() << "\n";
        return exit_check_failed;
    }
    return exit_usage;
}

}  // namespace foldrun

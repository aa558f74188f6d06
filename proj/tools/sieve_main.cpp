#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "goldsieve/bfile.hpp"
#include "goldsieve/contfrac.hpp"
#include "goldsieve/double_sieve.hpp"
#include "goldsieve/errors.hpp"
#include "goldsieve/golden.hpp"
#include "goldsieve/ground.hpp"
#include "goldsieve/hiccup.hpp"
#include "goldsieve/rank_transform.hpp"
#include "goldsieve/squares.hpp"
#include "goldsieve/surd.hpp"
#include "goldsieve/verify.hpp"
#include "goldsieve/words.hpp"

namespace {

using goldsieve::GroundSequence;
using goldsieve::Int;
using goldsieve::QuadSurd;

Int parse_int(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string(what) + ": not an integer: '" + s + "'");
}

GroundSequence parse_ground(const std::vector<std::string>& tokens) {
    if (tokens.size() == 1 && tokens[0] == "naturals") return GroundSequence::naturals();
    if (tokens.size() == 1 && tokens[0] == "squares") return GroundSequence::squares();
    if (tokens.size() == 3 && tokens[0] == "arith")
        return GroundSequence::arith(parse_int(tokens[1], "--ground arith A"),
                                     parse_int(tokens[2], "--ground arith B"));
    throw std::invalid_argument("--ground expects 'naturals', 'squares' or 'arith A B'");
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void print_table(const Table& t, const std::string& format) {
    if (format == "csv") {
        for (std::size_t i = 0; i < t.header.size(); ++i)
            std::cout << (i ? "," : "") << csv_escape(t.header[i]);
        std::cout << '\n';
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                std::cout << (i ? "," : "") << csv_escape(row[i]);
            std::cout << '\n';
        }
        return;
    }
    std::vector<std::size_t> width(t.header.size());
    for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += "  ";
            out += cells[i];
            if (i + 1 < cells.size()) out.append(width[i] - cells[i].size(), ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        std::cout << out << '\n';
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
}

void print_values(const std::vector<Int>& v, const std::string& format, Int start_index) {
    if (format == "bfile") {
        std::cout << goldsieve::emit_bfile(v, start_index);
    } else if (format == "csv") {
        std::cout << "n,value\n";
        for (std::size_t i = 0; i < v.size(); ++i)
            std::cout << start_index + static_cast<Int>(i) << ',' << v[i] << '\n';
    } else {
        for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? " " : "") << v[i];
        std::cout << '\n';
    }
}

std::string cell(const std::vector<Int>& v, std::size_t i) {
    return i < v.size() ? std::to_string(v[i]) : std::string();
}

std::vector<Int> read_stdin_values() {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    std::string text = buf.str();
    try {
        auto bf = goldsieve::parse_bfile(text);
        if (!bf.entries.empty()) {
            std::vector<Int> values;
            values.reserve(bf.entries.size());
            for (const auto& e : bf.entries) values.push_back(e.value);
            return values;
        }
    } catch (const goldsieve::parse_error&) {
    }
    std::vector<Int> values;
    std::istringstream in(text);
    std::string token;
    while (in >> token) values.push_back(parse_int(token, "standard input"));
    if (values.empty())
        throw std::invalid_argument("no candidate sequence on standard input "
                                    "(expected a b-file or a whitespace-separated value list)");
    return values;
}

std::string fixed6(double v) {
    std::ostringstream o;
    o.setf(std::ios::fixed);
    o.precision(6);
    o << v;
    return o.str();
}

// The gap word of a ground's sieve: survivor indices for arithmetic grounds,
// square roots of the survivors on the squares (both are two-gap sequences).
std::string word_for(const GroundSequence& ground, Int bits) {
    if (bits < 1) throw std::invalid_argument("--bits must be >= 1");
    if (ground.kind() == goldsieve::GroundKind::squares)
        return goldsieve::gap_word(goldsieve::run_squares(bits + 1).mu);
    auto trace = goldsieve::run_golden(ground, bits + 1, bits + 1);
    return goldsieve::gap_word(goldsieve::normalize(trace).sigma);
}

struct BeattyTarget {
    std::string name;
    std::vector<Int> seq;
    QuadSurd slope;
    QuadSurd offset;
    Int from;
};

void print_beatty_fits(const std::vector<BeattyTarget>& targets, const std::string& format) {
    Table t{{"target", "slope", "offset", "valid_from", "max_residual", "checked"}, {}};
    for (const auto& bt : targets) {
        auto fit = goldsieve::beatty_check(bt.seq, bt.slope, bt.offset, bt.from);
        t.rows.push_back({bt.name, bt.slope.decimal(6), bt.offset.decimal(6),
                          std::to_string(bt.from), std::to_string(fit.max_residual),
                          std::to_string(fit.checked)});
    }
    print_table(t, format);
}

int cmd_golden(const std::vector<std::string>& ground_tokens, Int steps, Int survivors,
               bool normalized, const std::string& format, const std::string& column,
               bool column_given) {
    auto ground = parse_ground(ground_tokens);
    Int target = survivors < 0 ? steps : survivors;
    auto trace = goldsieve::run_golden(ground, steps, target);
    bool single = column_given || format == "bfile";
    if (normalized) {
        auto norm = goldsieve::normalize(trace);
        if (single) {
            if (column == "deletion") print_values(norm.delta, format, 1);
            else if (column == "survivor") print_values(norm.sigma, format, 1);
            else throw std::invalid_argument("--column with --normalized must be deletion or survivor");
            return 0;
        }
        Table t{{"n", "sigma", "delta"}, {}};
        std::size_t rows = std::max(norm.sigma.size(), norm.delta.size());
        for (std::size_t i = 0; i < rows; ++i)
            t.rows.push_back({std::to_string(i + 1), cell(norm.sigma, i), cell(norm.delta, i)});
        print_table(t, format);
        return 0;
    }
    if (single) {
        if (column == "deletion") print_values(trace.deletions, format, 1);
        else if (column == "survivor") print_values(trace.survivors, format, 1);
        else {
            std::vector<Int> pointers;
            for (const auto& s : trace.steps) pointers.push_back(s.pointer);
            print_values(pointers, format, 1);
        }
        return 0;
    }
    Table t{{"n", "pointer", "deletion", "survivor"}, {}};
    std::size_t rows = std::max(trace.steps.size(), trace.survivors.size());
    for (std::size_t i = 0; i < rows; ++i) {
        std::string pointer = i < trace.steps.size() ? std::to_string(trace.steps[i].pointer) : "";
        std::string deletion = i < trace.steps.size() ? std::to_string(trace.steps[i].deletion) : "";
        t.rows.push_back({std::to_string(i + 1), pointer, deletion, cell(trace.survivors, i)});
    }
    print_table(t, format);
    return 0;
}

int cmd_double(const std::vector<std::string>& ground_tokens, Int steps, Int survivors,
               bool normalized, const std::string& format, const std::string& column,
               bool column_given) {
    auto ground = parse_ground(ground_tokens);
    Int target = survivors < 0 ? steps : survivors;
    auto trace = goldsieve::run_double(ground, steps, target);
    bool single = column_given || format == "bfile";
    if (normalized) {
        auto norm = goldsieve::normalize(trace);
        if (single) {
            if (column == "pointer") print_values(norm.pi, format, 1);
            else if (column == "target") print_values(norm.tau, format, 1);
            else print_values(norm.sigma, format, 1);
            return 0;
        }
        Table t{{"n", "pi", "tau", "sigma"}, {}};
        std::size_t rows = std::max(norm.pi.size(), norm.sigma.size());
        for (std::size_t i = 0; i < rows; ++i)
            t.rows.push_back({std::to_string(i + 1), cell(norm.pi, i), cell(norm.tau, i),
                              cell(norm.sigma, i)});
        print_table(t, format);
        return 0;
    }
    if (single) {
        if (column == "pointer") print_values(trace.pointer_values, format, 1);
        else if (column == "target") print_values(trace.target_values, format, 1);
        else print_values(trace.survivors, format, 1);
        return 0;
    }
    Table t{{"n", "pointer", "target", "survivor"}, {}};
    std::size_t rows = std::max(trace.pointer_values.size(), trace.survivors.size());
    for (std::size_t i = 0; i < rows; ++i)
        t.rows.push_back({std::to_string(i + 1), cell(trace.pointer_values, i),
                          cell(trace.target_values, i), cell(trace.survivors, i)});
    print_table(t, format);
    return 0;
}

int cmd_verify(const std::string& suite, const std::vector<std::string>& grid,
               const std::vector<std::string>& horizons, const std::string& format) {
    goldsieve::SuiteSpec spec = goldsieve::find_suite(suite);
    for (const auto& tok : grid) {
        auto eq = tok.find('=');
        auto dots = tok.find("..");
        if (eq == std::string::npos || dots == std::string::npos || dots < eq)
            throw std::invalid_argument("--grid expects KEY=LO..HI, got '" + tok + "'");
        spec.grid[tok.substr(0, eq)] = {
            parse_int(tok.substr(eq + 1, dots - eq - 1), "--grid lower bound"),
            parse_int(tok.substr(dots + 2), "--grid upper bound")};
    }
    for (const auto& tok : horizons) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--horizon expects KEY=N, got '" + tok + "'");
        spec.horizons[tok.substr(0, eq)] = parse_int(tok.substr(eq + 1), "--horizon value");
    }
    auto report = goldsieve::run_suite(spec);
    auto class_name = [](goldsieve::CheckClass c) {
        return c == goldsieve::CheckClass::must_pass ? "must-pass" : "report-only";
    };
    if (format == "json") {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& r : report.results)
            checks.push_back({{"name", r.name},
                              {"classification", class_name(r.classification)},
                              {"passed", r.passed},
                              {"skipped", r.skipped},
                              {"detail", r.detail}});
        nlohmann::json j{{"suite", report.suite},
                         {"description", spec.description},
                         {"must_pass_ok", report.must_pass_ok},
                         {"checks", checks}};
        std::cout << j.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << "suite,check,classification,status,detail\n";
        for (const auto& r : report.results) {
            const char* status = r.skipped ? "skip" : (r.passed ? "pass" : "fail");
            std::cout << csv_escape(report.suite) << ',' << csv_escape(r.name) << ','
                      << class_name(r.classification) << ',' << status << ','
                      << csv_escape(r.detail) << '\n';
        }
    } else {
        std::cout << "suite " << report.suite << ": " << spec.description << '\n';
        Int passed = 0, failed = 0, skipped = 0;
        for (const auto& r : report.results) {
            const char* tag = r.skipped ? "[skip]" : (r.passed ? "[ok]  " : "[FAIL]");
            (r.skipped ? skipped : (r.passed ? passed : failed))++;
            std::cout << "  " << tag << ' ' << r.name << " (" << class_name(r.classification)
                      << "): " << r.detail << '\n';
        }
        std::cout << "summary: " << report.results.size() << " checks, " << passed
                  << " passed, " << failed << " failed, " << skipped << " skipped; must-pass "
                  << (report.must_pass_ok ? "OK" : "FAILED") << '\n';
    }
    return report.must_pass_ok ? 0 : 1;
}

int cmd_oeis_compare(const std::string& path, Int offset, bool offset_set,
                     const std::string& format) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open b-file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    auto ref = goldsieve::parse_bfile(buf.str());
    if (ref.entries.empty()) throw std::invalid_argument("reference b-file has no entries: " + path);
    auto slash = path.find_last_of('/');
    std::string id = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = id.find_last_of('.');
    if (dot != std::string::npos && dot > 0) id = id.substr(0, dot);
    auto candidate = read_stdin_values();
    Int at = offset_set ? offset : ref.entries.front().index;
    auto res = goldsieve::compare(candidate, ref, at);
    if (format == "csv") {
        std::cout << "id,match_length,first_mismatch_index,expected,actual\n";
        std::cout << csv_escape(id) << ',' << res.match_length << ',';
        if (res.mismatch)
            std::cout << res.mismatch->index << ',' << res.mismatch->expected << ','
                      << res.mismatch->actual;
        else
            std::cout << ",,";
        std::cout << '\n';
    } else if (res.mismatch) {
        std::cout << "first mismatch against " << id << " at index " << res.mismatch->index
                  << ": expected " << res.mismatch->expected << ", actual "
                  << res.mismatch->actual << " (" << res.match_length << " terms matched)\n";
    } else {
        std::cout << "candidate matches " << id << " for " << res.match_length << " terms ("
                  << res.compared << " aligned)\n";
    }
    return res.mismatch ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"golden, double and extraction sieves on integer sequences", "sieve"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "sieve 1.0.0");
    app.footer("Horizons are capped by the working-set index limit; raise it with the\n"
               "GOLDSIEVE_MAX_INDEX environment variable when a run reports a resource cap.");

    int rc = 0;
    const CLI::Validator positive_int =
        CLI::Range(static_cast<Int>(1), std::numeric_limits<Int>::max()).description("INT > 0");

    // sieve golden
    std::vector<std::string> g_ground{"naturals"};
    Int g_steps = 100, g_survivors = -1;
    bool g_norm = false;
    std::string g_format = "text", g_column = "deletion";
    auto* golden = app.add_subcommand("golden", "run the golden sieve (pointer reads, one deletion per step)");
    golden->add_option("--ground", g_ground, "naturals | arith A B | squares")->expected(1, 3);
    golden->add_option("--steps", g_steps, "number of sieve steps")->check(positive_int);
    golden->add_option("--survivors", g_survivors, "survivor terms to report (default: --steps)");
    golden->add_flag("--normalized", g_norm, "divide back to index scale (arithmetic grounds)");
    golden->add_option("--format", g_format)->check(CLI::IsMember({"text", "csv", "bfile"}));
    auto* g_col_opt = golden->add_option("--column", g_column,
                                         "emit one sequence instead of the table (bfile default: deletion)")
                          ->check(CLI::IsMember({"deletion", "survivor", "pointer"}));
    golden->callback([&] {
        rc = cmd_golden(g_ground, g_steps, g_survivors, g_norm, g_format, g_column,
                        g_col_opt->count() > 0);
    });

    // sieve double
    std::vector<std::string> d_ground{"naturals"};
    Int d_steps = 100, d_survivors = -1;
    bool d_norm = false;
    std::string d_format = "text", d_column = "pointer";
    auto* dbl = app.add_subcommand("double", "run the double sieve (pointer and target both deleted)");
    dbl->add_option("--ground", d_ground, "naturals | arith A B | squares")->expected(1, 3);
    dbl->add_option("--steps", d_steps, "number of sieve steps")->check(positive_int);
    dbl->add_option("--survivors", d_survivors, "survivor terms to report (default: --steps)");
    dbl->add_flag("--normalized", d_norm, "divide back to index scale (arithmetic grounds)");
    dbl->add_option("--format", d_format)->check(CLI::IsMember({"text", "csv", "bfile"}));
    auto* d_col_opt = dbl->add_option("--column", d_column,
                                      "emit one sequence instead of the table (bfile default: pointer)")
                          ->check(CLI::IsMember({"pointer", "target", "survivor"}));
    dbl->callback([&] {
        rc = cmd_double(d_ground, d_steps, d_survivors, d_norm, d_format, d_column,
                        d_col_opt->count() > 0);
    });

    // sieve extract
    std::vector<std::string> e_ground{"naturals"};
    Int e_j = 1, e_y = 0, e_z = 0, e_n = 100;
    std::string e_format = "text";
    auto* extract = app.add_subcommand("extract", "run the extraction sieve C_{j,y,z}");
    extract->add_option("--j", e_j, "probe shift");
    extract->add_option("--y", e_y, "gap on probe hit")->required();
    extract->add_option("--z", e_z, "gap on probe miss")->required();
    extract->add_option("--ground", e_ground, "naturals | arith A B | squares")->expected(1, 3);
    extract->add_option("--n", e_n, "survivor terms to emit")->check(positive_int);
    extract->add_option("--format", e_format)->check(CLI::IsMember({"text", "csv", "bfile"}));
    extract->callback([&] {
        auto seq = goldsieve::run_extraction({e_j, e_y, e_z}, parse_ground(e_ground), e_n);
        print_values(seq, e_format, 1);
    });

    // sieve hiccup
    Int h_j = 1, h_x = 1, h_y = 0, h_z = 0, h_n = 100;
    std::string h_format = "text";
    auto* hic = app.add_subcommand("hiccup", "generate a self-referential gap recurrence");
    hic->add_option("--j", h_j, "probe shift");
    hic->add_option("--x", h_x, "first term");
    hic->add_option("--y", h_y, "gap when n-j is a produced value")->required();
    hic->add_option("--z", h_z, "gap otherwise")->required();
    hic->add_option("--n", h_n, "terms to emit")->check(positive_int);
    hic->add_option("--format", h_format)->check(CLI::IsMember({"text", "csv", "bfile"}));
    hic->callback([&] { print_values(goldsieve::hiccup_generate({h_j, h_x, h_y, h_z}, h_n), h_format, 1); });

    // sieve analyze ...
    auto* analyze = app.add_subcommand("analyze", "gap-word and Beatty analyzers");
    analyze->require_subcommand(1);
    std::vector<std::string> a_ground{"naturals"};
    Int a_bits = 1000, a_maxlen = 12;
    std::string a_format = "text";
    auto add_word_flags = [&](CLI::App* sub, bool with_len, bool with_format) {
        sub->add_option("--ground", a_ground, "naturals | arith A B | squares")->expected(1, 3);
        sub->add_option("--bits", a_bits, "gap word length")->check(positive_int);
        if (with_len) sub->add_option("--max-len", a_maxlen, "longest factor length")->check(positive_int);
        if (with_format) sub->add_option("--format", a_format)->check(CLI::IsMember({"text", "csv"}));
    };

    auto* gapword = analyze->add_subcommand("gapword", "print the sieve gap word as a 0/1 line");
    add_word_flags(gapword, false, false);
    gapword->callback([&] { std::cout << word_for(parse_ground(a_ground), a_bits) << '\n'; });

    auto* complexity = analyze->add_subcommand("complexity", "factor complexity and Sturmian verdict");
    add_word_flags(complexity, true, true);
    complexity->callback([&] {
        auto word = word_for(parse_ground(a_ground), a_bits);
        auto rep = goldsieve::sturmian_report(word, a_maxlen);
        Table t{{"len", "factors", "sturmian_expected"}, {}};
        Int refuted_at = 0;
        for (Int len = 1; len <= a_maxlen; ++len) {
            Int p = rep.complexity[static_cast<std::size_t>(len - 1)];
            if (p != len + 1 && refuted_at == 0) refuted_at = len;
            t.rows.push_back({std::to_string(len), std::to_string(p), std::to_string(len + 1)});
        }
        print_table(t, a_format);
        if (a_format == "text") {
            if (refuted_at)
                std::cout << "not Sturmian: p(" << refuted_at << ") = "
                          << rep.complexity[static_cast<std::size_t>(refuted_at - 1)] << " != "
                          << refuted_at + 1 << '\n';
            else
                std::cout << "consistent with a Sturmian word up to length " << a_maxlen
                          << " (max imbalance " << rep.max_imbalance << ") on a " << word.size()
                          << "-bit prefix\n";
        }
    });

    auto* density = analyze->add_subcommand("density", "ones density against the exact frequency");
    add_word_flags(density, false, true);
    density->callback([&] {
        auto ground = parse_ground(a_ground);
        if (!ground.is_arith_like())
            throw std::invalid_argument("density comparison needs an arithmetic ground");
        auto word = word_for(ground, a_bits);
        double emp = goldsieve::ones_density(word);
        QuadSurd rho = goldsieve::gap_word_density(ground.a());
        double diff = emp - rho.to_double();
        if (diff < 0) diff = -diff;
        Int ones = static_cast<Int>(std::count(word.begin(), word.end(), '1'));
        Table t{{"bits", "ones", "density", "exact", "abs_diff"}, {}};
        t.rows.push_back({std::to_string(word.size()), std::to_string(ones), fixed6(emp),
                          rho.decimal(6), fixed6(diff)});
        print_table(t, a_format);
    });

    auto* balance = analyze->add_subcommand("balance", "ones-count spread over same-length windows");
    add_word_flags(balance, true, true);
    balance->callback([&] {
        auto profile = goldsieve::balance_profile(word_for(parse_ground(a_ground), a_bits), a_maxlen);
        Table t{{"len", "max_imbalance"}, {}};
        for (std::size_t i = 0; i < profile.size(); ++i)
            t.rows.push_back({std::to_string(i + 1), std::to_string(profile[i])});
        print_table(t, a_format);
    });

    std::string bf_family = "golden", bf_dir = "up";
    Int bf_k = 1, bf_j = 1, bf_n = 1000;
    std::string bf_format = "text";
    auto* beatty = analyze->add_subcommand("beatty-fit", "exact floor-formula residuals");
    beatty->add_option("--family", bf_family)->check(CLI::IsMember({"golden", "metallic"}));
    beatty->add_option("--k", bf_k, "metallic index")->check(positive_int);
    beatty->add_option("--j", bf_j, "probe shift (0 or 1)")->check(CLI::Range(Int{0}, Int{1}));
    beatty->add_option("--dir", bf_dir, "up: gaps (k+1, k); down: gaps (k, k+1)")
        ->check(CLI::IsMember({"up", "down"}));
    beatty->add_option("--n", bf_n, "terms to fit")->check(positive_int);
    beatty->add_option("--format", bf_format)->check(CLI::IsMember({"text", "csv"}));
    beatty->callback([&] {
        std::vector<BeattyTarget> targets;
        if (bf_family == "golden") {
            auto trace = goldsieve::run_golden(GroundSequence::naturals(), bf_n, bf_n);
            QuadSurd phi = goldsieve::golden_ratio();
            targets.push_back({"survivors", trace.survivors, phi, QuadSurd(2) - phi, 1});
            targets.push_back({"deletions", trace.deletions, phi * phi, QuadSurd(2) - phi * phi, 2});
        } else {
            auto ms = goldsieve::metallic_slopes(bf_k);
            bool up = bf_dir == "up";
            if (up && bf_j == 0 && bf_k == 1)
                throw std::invalid_argument(
                    "the (0,1,2,1) recurrence degenerates to the naturals; "
                    "the j=0 up family needs --k >= 2");
            goldsieve::HiccupParams p{bf_j, 1, up ? bf_k + 1 : bf_k, up ? bf_k : bf_k + 1};
            QuadSurd slope = up ? ms.slope_up : ms.slope_down;
            QuadSurd offset = up ? (bf_j == 1 ? ms.offset_j1_up : ms.offset_j0_up)
                                 : (bf_j == 1 ? ms.offset_j1_down : ms.offset_j0_down);
            Int from = (!up && bf_j == 0) ? 2 : 1;
            std::ostringstream name;
            name << "hiccup(j=" << p.j << ", x=1, y=" << p.y << ", z=" << p.z << ")";
            targets.push_back({name.str(), goldsieve::hiccup_generate(p, bf_n), slope, offset, from});
        }
        print_beatty_fits(targets, bf_format);
    });

    // sieve cf
    std::string cf_slope;
    Int cf_param = 1, cf_max_steps = 1 << 14;
    std::string cf_format = "text";
    auto* cf = app.add_subcommand("cf", "periodic continued fraction of a sieve slope");
    cf->add_option("--slope", cf_slope, "alpha | beta | gamma | Mk | Rk")
        ->required()
        ->check(CLI::IsMember({"alpha", "beta", "gamma", "Mk", "Rk"}));
    cf->add_option("--param", cf_param, "progression coefficient a, or metallic index k")
        ->check(positive_int);
    cf->add_option("--max-steps", cf_max_steps)->check(positive_int);
    cf->add_option("--format", cf_format)->check(CLI::IsMember({"text", "csv"}));
    cf->callback([&] {
        QuadSurd x;
        if (cf_slope == "alpha") x = goldsieve::survivor_slope(cf_param);
        else if (cf_slope == "beta") x = goldsieve::deletion_slope(cf_param);
        else if (cf_slope == "gamma") x = goldsieve::double_pointer_slope(cf_param);
        else if (cf_slope == "Mk") x = goldsieve::metallic_slopes(cf_param).slope_up;
        else x = goldsieve::metallic_slopes(cf_param).slope_down;
        auto expansion = goldsieve::cf_expand(x, static_cast<int>(cf_max_steps));
        if (cf_format == "csv") {
            std::cout << "part,position,quotient\n";
            for (std::size_t i = 0; i < expansion.preperiod.size(); ++i)
                std::cout << "preperiod," << i << ',' << expansion.preperiod[i] << '\n';
            for (std::size_t i = 0; i < expansion.period.size(); ++i)
                std::cout << "period," << i << ',' << expansion.period[i] << '\n';
        } else {
            std::cout << goldsieve::render_cf(expansion) << " period " << expansion.period.size()
                      << '\n';
        }
    });

    // sieve rank-transform
    Int rt_a = 0, rt_b = 0, rt_n = 100;
    std::string rt_format = "text", rt_column = "fixed-point";
    auto* rt = app.add_subcommand("rank-transform", "fixed point of the rank transform and its companion");
    rt->add_option("--a", rt_a, "block length")->required();
    rt->add_option("--b", rt_b, "block offset")->required();
    rt->add_option("--n", rt_n, "terms")->check(positive_int);
    rt->add_option("--format", rt_format)->check(CLI::IsMember({"text", "csv", "bfile"}));
    auto* rt_col_opt = rt->add_option("--column", rt_column,
                                      "emit one sequence instead of the table (bfile default: fixed-point)")
                           ->check(CLI::IsMember({"fixed-point", "companion"}));
    rt->callback([&] {
        goldsieve::BlockSequence u(rt_a, rt_b);
        auto fp = goldsieve::transform_fixed_point(u, rt_n);
        if (!fp.converged) {
            std::cerr << "error: no fixed point within " << fp.iterations << " iterations\n";
            rc = 1;
            return;
        }
        std::vector<Int> companions;
        companions.reserve(fp.sequence.size());
        for (std::size_t i = 0; i < fp.sequence.size(); ++i)
            companions.push_back(goldsieve::companion(rt_a, rt_b, fp.sequence[i],
                                                      static_cast<Int>(i + 1)));
        if (rt_format == "bfile" || rt_col_opt->count() > 0) {
            print_values(rt_column == "companion" ? companions : fp.sequence, rt_format, 1);
            return;
        }
        Table t{{"n", "fixed_point", "companion"}, {}};
        for (std::size_t i = 0; i < fp.sequence.size(); ++i)
            t.rows.push_back({std::to_string(i + 1), std::to_string(fp.sequence[i]),
                              std::to_string(companions[i])});
        print_table(t, rt_format);
        if (rt_format == "text")
            std::cout << "converged in " << fp.iterations << " iterations\n";
    });

    // sieve verify
    std::string v_suite, v_format = "text";
    std::vector<std::string> v_grid, v_horizons;
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite_help = "one of:";
    for (const auto& name : goldsieve::suite_names()) suite_help += " " + name;
    verify->add_option("--suite", v_suite, suite_help)->required();
    verify->add_option("--grid", v_grid, "override a grid range, KEY=LO..HI (repeatable)");
    verify->add_option("--horizon", v_horizons, "override a horizon, KEY=N (repeatable)");
    verify->add_option("--format", v_format)->check(CLI::IsMember({"text", "csv", "json"}));
    verify->callback([&] { rc = cmd_verify(v_suite, v_grid, v_horizons, v_format); });

    // sieve oeis ...
    auto* oeis = app.add_subcommand("oeis", "b-file comparison and emission");
    oeis->require_subcommand(1);
    std::string oc_path, oc_format = "text";
    Int oc_offset = 0;
    auto* compare = oeis->add_subcommand(
        "compare", "compare a sequence from standard input against a reference b-file");
    auto* oc_offset_opt =
        compare->add_option("--offset", oc_offset, "reference index aligned with the first term "
                                                   "(default: the b-file's first index)");
    compare->add_option("--bfile", oc_path, "reference b-file path")->required();
    compare->add_option("--format", oc_format)->check(CLI::IsMember({"text", "csv"}));
    compare->callback([&] {
        rc = cmd_oeis_compare(oc_path, oc_offset, oc_offset_opt->count() > 0, oc_format);
    });

    Int oe_start = 1;
    auto* emit = oeis->add_subcommand("emit", "re-emit a sequence from standard input as a b-file");
    emit->add_option("--start", oe_start, "index of the first term");
    emit->callback([&] { std::cout << goldsieve::emit_bfile(read_stdin_values(), oe_start); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const goldsieve::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << " (raise GOLDSIEVE_MAX_INDEX to go further)\n";
        return 2;
    } catch (const goldsieve::parse_error& e) {
        std::cerr << "error: line " << e.line() << ": " << e.what() << '\n';
        return 2;
    } catch (const goldsieve::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}

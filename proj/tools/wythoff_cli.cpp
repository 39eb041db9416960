// Command-line surface for the toolkit: sequence streaming, array and table
// rendering, OEIS b-file export, and the verification suite runner.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 overflow.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wythoff/wythoff.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOverflow = 3;

wythoff::RenderSpec::Format parse_format(const std::string& name) {
    using Format = wythoff::RenderSpec::Format;
    if (name == "text")
        return Format::text;
    if (name == "csv")
        return Format::csv;
    if (name == "json")
        return Format::json;
    throw CLI::ValidationError("--format", "must be one of text|csv|json");
}

struct SeqOptions {
    std::string name;
    wythoff::Nat count = 0;
};

struct ArrayOptions {
    std::string kind;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::string format = "text";
    bool no_labels = false;
    std::string empty_marker = ".";
};

struct TableOptions {
    std::string kind;
    wythoff::Nat p = 0;
    std::string format = "text";
    bool no_labels = false;
    std::string empty_marker = ".";
};

struct VerifyOptions {
    std::string suite;
    wythoff::Nat max_n = 0; // 0: use the suite default
    wythoff::Nat max_k = 0;
    std::string fixtures_dir = "data";
};

int run_seq(const SeqOptions& opt) {
    const wythoff::Seq seq = wythoff::parse_seq(opt.name);
    const wythoff::Nat offset = wythoff::seq_offset(seq);
    const std::vector<wythoff::Nat> terms = wythoff::seq_terms(seq, opt.count);
    for (std::size_t i = 0; i < terms.size(); ++i)
        std::cout << offset + i << ' ' << terms[i] << '\n';
    return kExitOk;
}

int run_export(const SeqOptions& opt) {
    const wythoff::Seq seq = wythoff::parse_seq(opt.name);
    std::cout << wythoff::format_b_file(wythoff::seq_offset(seq),
                                        wythoff::seq_terms(seq, opt.count));
    return kExitOk;
}

int run_array(const ArrayOptions& opt) {
    wythoff::RenderSpec spec;
    spec.format = parse_format(opt.format);
    spec.show_labels = !opt.no_labels;
    spec.empty_cell_marker = opt.empty_marker;

    wythoff::ArrayWindow window;
    if (opt.kind == "wythoff")
        window = wythoff::wythoff_window(opt.rows, opt.cols);
    else if (opt.kind == "wythoff-extended")
        window = wythoff::extended_wythoff_window(opt.rows, opt.cols);
    else if (opt.kind == "fibbinary")
        window = wythoff::fibbinary_array_window(opt.rows, opt.cols);
    else
        throw CLI::ValidationError(
            "kind", "must be one of wythoff|wythoff-extended|fibbinary");
    std::cout << wythoff::render_array(window, spec);
    return kExitOk;
}

int run_table(const TableOptions& opt) {
    wythoff::RenderSpec spec;
    spec.format = parse_format(opt.format);
    spec.show_labels = !opt.no_labels;
    spec.empty_cell_marker = opt.empty_marker;

    wythoff::SparseTable table;
    if (opt.kind == "fib")
        table = wythoff::build_fibbinary_table(opt.p);
    else if (opt.kind == "wythoff")
        table = wythoff::build_wythoff_table(opt.p);
    else if (opt.kind == "fractal")
        table = wythoff::build_fractal_table(opt.p);
    else
        throw CLI::ValidationError("kind", "must be one of fib|wythoff|fractal");
    std::cout << wythoff::render_table(table, spec);
    return kExitOk;
}

void print_report(const wythoff::SuiteReport& report) {
    const char* verdict = report.passed() ? "PASS" : "FAIL";
    std::cout << report.suite << ": " << verdict << " ("
              << report.total_checked() << " checks)\n";
    for (const auto& check : report.checks) {
        if (check.passed())
            continue;
        std::cout << "  " << check.name << ":\n";
        for (const auto& failure : check.failures)
            std::cout << "    " << failure << '\n';
    }
}

int run_verify(const VerifyOptions& opt) {
    using namespace wythoff;
    const bool all = opt.suite == "all";
    std::vector<SuiteReport> reports;

    if (all || opt.suite == "codec")
        reports.push_back(run_codec_suite(opt.max_n ? opt.max_n : kDefaultCodecMaxN));
    if (all || opt.suite == "beatty")
        reports.push_back(
            run_beatty_suite(opt.max_n ? opt.max_n : kDefaultBeattyMaxN));
    if (all || opt.suite == "arrays")
        reports.push_back(
            run_arrays_suite(opt.max_n ? opt.max_n : kDefaultArraysMaxN,
                             opt.max_k ? opt.max_k : kDefaultArraysMaxK));
    if (all || opt.suite == "tables")
        reports.push_back(run_tables_suite(kDefaultTablesMaxP));
    if (all || opt.suite == "fractal")
        reports.push_back(
            run_fractal_suite(opt.max_n ? opt.max_n : kDefaultFractalMaxN));
    if (all || opt.suite == "theorem")
        reports.push_back(
            run_theorem_suite(opt.max_n ? opt.max_n : kDefaultTheoremMaxN,
                              opt.max_k ? opt.max_k : kDefaultTheoremMaxK));
    if (reports.empty() && !all)
        throw CLI::ValidationError(
            "suite", "must be one of all|codec|beatty|arrays|tables|fractal|theorem");

    // generated prefixes are held against the bundled reference data on
    // every run
    reports.push_back(run_fixture_suite(opt.fixtures_dir));

    bool ok = true;
    for (const auto& report : reports) {
        print_report(report);
        ok = ok && report.passed();
    }
    std::cout << (ok ? "verification passed" : "verification FAILED") << '\n';
    return ok ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-integer toolkit for the Zeckendorf representation, "
                 "fibbinary numbers and the Wythoff array"};
    app.require_subcommand(1);

    SeqOptions seq_opt;
    CLI::App* seq = app.add_subcommand("seq", "stream a sequence, one term per line");
    seq->add_option("name", seq_opt.name,
                    "one of fib|odfib|lw|uw|fo|fe|fibonacci|w|wythoff")
        ->required();
    seq->add_option("--count", seq_opt.count, "number of terms")
        ->required()
        ->check(CLI::PositiveNumber);

    SeqOptions export_opt;
    CLI::App* exp = app.add_subcommand("export", "emit a sequence in b-file format");
    exp->add_option("name", export_opt.name,
                    "one of fib|odfib|lw|uw|fo|fe|fibonacci|w|wythoff")
        ->required();
    exp->add_option("--count", export_opt.count, "number of terms")
        ->required()
        ->check(CLI::PositiveNumber);

    ArrayOptions array_opt;
    CLI::App* arr = app.add_subcommand("array", "render an array window");
    arr->add_option("kind", array_opt.kind,
                    "one of wythoff|wythoff-extended|fibbinary")
        ->required();
    arr->add_option("--rows", array_opt.rows, "row count")
        ->required()
        ->check(CLI::PositiveNumber);
    arr->add_option("--cols", array_opt.cols, "column count")
        ->required()
        ->check(CLI::PositiveNumber);
    arr->add_option("--format", array_opt.format, "text|csv|json");
    arr->add_flag("--no-labels", array_opt.no_labels, "omit label rows");
    arr->add_option("--empty-marker", array_opt.empty_marker,
                    "text placeholder for empty cells");

    TableOptions table_opt;
    CLI::App* tab = app.add_subcommand("table", "render a sparse table");
    tab->add_option("kind", table_opt.kind, "one of fib|wythoff|fractal")
        ->required();
    tab->add_option("--p", table_opt.p, "number of rows")
        ->required()
        ->check(CLI::PositiveNumber);
    tab->add_option("--format", table_opt.format, "text|csv|json");
    tab->add_flag("--no-labels", table_opt.no_labels, "omit the label footer");
    tab->add_option("--empty-marker", table_opt.empty_marker,
                    "text placeholder for empty cells");

    VerifyOptions verify_opt;
    CLI::App* ver = app.add_subcommand("verify", "run the invariant suites");
    ver->add_option("suite", verify_opt.suite,
                    "one of all|codec|beatty|arrays|tables|fractal|theorem")
        ->required();
    ver->add_option("--max-n", verify_opt.max_n, "main bound for the suite");
    ver->add_option("--max-k", verify_opt.max_k, "column bound for the suite");
    ver->add_option("--fixtures-dir", verify_opt.fixtures_dir,
                    "directory holding the bundled OEIS fixtures");

    try {
        app.parse(argc, argv);
        if (*seq)
            return run_seq(seq_opt);
        if (*exp)
            return run_export(export_opt);
        if (*arr)
            return run_array(array_opt);
        if (*tab)
            return run_table(table_opt);
        if (*ver)
            return run_verify(verify_opt);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        std::cerr << "overflow: " << e.what() << '\n';
        return kExitOverflow;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

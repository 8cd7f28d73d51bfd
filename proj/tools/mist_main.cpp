// Command-line surface: closed forms, counting, enumeration, extremal scans,
// verification runs, and extremal exports. Exit codes: 0 success (and all
// verifications passing), 1 verification or runtime failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mist/formulas.hpp"
#include "mist/graph6.hpp"
#include "mist/harness.hpp"
#include "mist/mis.hpp"
#include "mist/treegen.hpp"
#include "mist/version.hpp"

namespace {

using namespace mist;

struct GlobalArgs {
    std::string cache_dir = "./cache";
    int jobs = 0;
    std::string format = "csv";
    int cap = kDefaultOrderCap;
};

ScanOptions scan_options(const GlobalArgs& globals) {
    ScanOptions options;
    options.jobs = globals.jobs;
    options.cap = globals.cap;
    if (!globals.cache_dir.empty()) {
        options.cache_dir = globals.cache_dir;
    }
    return options;
}

std::vector<std::string> nonblank_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty()) {
            lines.push_back(line);
        }
    }
    return lines;
}

Tree tree_from_edge_list_lines(const std::vector<std::string>& lines) {
    // First line: vertex count. Each following line: one "u v" edge.
    std::istringstream head(lines.front());
    int n = 0;
    if (!(head >> n)) {
        throw std::invalid_argument("count: cannot parse vertex count from '" + lines.front() +
                                    "'");
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream edge_in(lines[i]);
        int u = 0, v = 0;
        if (!(edge_in >> u >> v)) {
            throw std::invalid_argument("count: cannot parse edge from '" + lines[i] + "'");
        }
        edges.emplace_back(u, v);
    }
    return tree_from_edge_list(n, edges);
}

int run_count(const std::string& input) {
    std::vector<std::string> lines;
    if (input == "-") {
        lines = nonblank_lines(std::cin);
    } else {
        std::ifstream in(input);
        if (!in) {
            throw std::invalid_argument("count: cannot read " + input);
        }
        lines = nonblank_lines(in);
    }
    if (lines.empty()) {
        throw std::invalid_argument("count: no input");
    }
    // Sniff the format: graph6 lines if the first line decodes, otherwise an
    // edge-list file describing a single tree.
    bool graph6_input = true;
    try {
        graph6_decode(lines.front());
    } catch (const std::invalid_argument&) {
        graph6_input = false;
    }
    if (graph6_input) {
        for (const std::string& line : lines) {
            std::cout << count_mis(graph6_decode(line)).to_decimal() << '\n';
        }
    } else {
        std::cout << count_mis(tree_from_edge_list_lines(lines)).to_decimal() << '\n';
    }
    return 0;
}

template <typename Report>
int emit_report(const Report& report, const GlobalArgs& globals, const std::string& out_path,
                const std::string& label, std::size_t row_count) {
    std::ostringstream buffer;
    if (globals.format == "json") {
        write_report_json(report, buffer);
    } else {
        write_report_csv(report, buffer);
    }
    if (out_path.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        if (!out) {
            throw std::runtime_error(label + ": cannot write " + out_path);
        }
        out << buffer.str();
    }
    std::cerr << label << ": " << row_count << " rows, "
              << (report.pass ? "all pass" : "FAILURES") << " ("
              << report.elapsed_seconds << " s)\n";
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mist: exact m.i.s. extremes over trees of fixed order and diameter"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    GlobalArgs globals;
    app.add_option("--cache-dir", globals.cache_dir,
                   "enumeration cache directory ('' disables caching)")
        ->capture_default_str();
    app.add_option("--jobs", globals.jobs, "worker threads (0 = all hardware threads)")
        ->capture_default_str();
    app.add_option("--format", globals.format, "report format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--cap", globals.cap, "enumeration order cap")
        ->check(CLI::Range(1, kOrderCapLimit))
        ->capture_default_str();

    auto* cmd_psi = app.add_subcommand("psi", "print psi(N)");
    int psi_n = 0;
    cmd_psi->add_option("N", psi_n, "index")->required();

    auto* cmd_m = app.add_subcommand("m", "print the closed-form maximum M(N,D)");
    int m_n = 0, m_d = 0;
    cmd_m->add_option("N", m_n, "vertex count")->required();
    cmd_m->add_option("D", m_d, "diameter")->required();

    auto* cmd_count = app.add_subcommand(
        "count", "count m.i.s. per input tree (graph6 lines, an edge-list file, or '-')");
    std::string count_input = "-";
    cmd_count->add_option("input", count_input, "file path or '-' for stdin")
        ->capture_default_str();

    auto* cmd_enumerate = app.add_subcommand("enumerate",
                                             "print every free tree of order N as graph6");
    int enum_n = 0;
    int enum_d = -1;
    cmd_enumerate->add_option("N", enum_n, "order")->required();
    cmd_enumerate->add_option("--diameter", enum_d, "keep only this diameter");

    auto* cmd_construct = app.add_subcommand("construct-b",
                                             "print the double broom B(D,P,Q) as graph6");
    int b_d = 0, b_p = 0, b_q = 0;
    cmd_construct->add_option("D", b_d, "diameter")->required();
    cmd_construct->add_option("P", b_p, "leaves at one end")->required();
    cmd_construct->add_option("Q", b_q, "leaves at the other end")->required();

    auto* cmd_scan = app.add_subcommand("scan", "extremes over all trees with order N, diameter D");
    int scan_n = 0, scan_d = 0;
    cmd_scan->add_option("N", scan_n, "order")->required();
    cmd_scan->add_option("D", scan_d, "diameter")->required();

    auto* cmd_verify_min = app.add_subcommand("verify-min",
                                              "check the sharp lower bound and its minimizers");
    int min_nmax = 13;
    std::string min_out;
    cmd_verify_min->add_option("--nmax", min_nmax, "largest order")->capture_default_str();
    cmd_verify_min->add_option("--out", min_out, "write the report here instead of stdout");

    auto* cmd_verify_max = app.add_subcommand("verify-max",
                                              "check the sharp upper bound and maximizer laws");
    int max_nmax = 13;
    std::string max_out;
    cmd_verify_max->add_option("--nmax", max_nmax, "largest order")->capture_default_str();
    cmd_verify_max->add_option("--out", max_out, "write the report here instead of stdout");

    auto* cmd_verify_lemmas = app.add_subcommand(
        "verify-lemmas", "check the closed-form monotonicity and argmax case analysis");
    int lemmas_nlimit = 80;
    std::string lemmas_out;
    cmd_verify_lemmas->add_option("--nlimit", lemmas_nlimit, "largest order")
        ->capture_default_str();
    cmd_verify_lemmas->add_option("--out", lemmas_out, "write the report here instead of stdout");

    auto* cmd_export = app.add_subcommand("export", "write extremal trees as graph6 lines");
    int export_n = 0, export_d = 0;
    std::string export_which, export_out;
    cmd_export->add_option("N", export_n, "order")->required();
    cmd_export->add_option("D", export_d, "diameter")->required();
    cmd_export->add_option("--which", export_which, "min or max")
        ->check(CLI::IsMember({"min", "max"}))
        ->required();
    cmd_export->add_option("--out", export_out, "destination file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (cmd_psi->parsed()) {
            std::cout << psi(psi_n).to_decimal() << '\n';
            return 0;
        }
        if (cmd_m->parsed()) {
            std::cout << big_m(m_n, m_d).to_decimal() << '\n';
            return 0;
        }
        if (cmd_count->parsed()) {
            return run_count(count_input);
        }
        if (cmd_enumerate->parsed()) {
            TreeStream stream = enum_d >= 0 ? trees_with_diameter(enum_n, enum_d, globals.cap)
                                            : free_trees(enum_n, globals.cap);
            while (auto t = stream.next()) {
                std::cout << graph6_encode(*t) << '\n';
            }
            return 0;
        }
        if (cmd_construct->parsed()) {
            std::cout << graph6_encode(construct_b(b_d, b_p, b_q)) << '\n';
            return 0;
        }
        if (cmd_scan->parsed()) {
            ExtremalRecord record = extremal_scan(scan_n, scan_d, scan_options(globals));
            if (globals.format == "json") {
                std::cout << "{\"n\":" << record.n << ",\"d\":" << record.d
                          << ",\"tree_count\":" << record.tree_count << ",\"min_mis\":\""
                          << record.min_count.to_decimal() << "\",\"max_mis\":\""
                          << record.max_count.to_decimal()
                          << "\",\"argmin_count\":" << record.argmin_keys.size()
                          << ",\"argmax_count\":" << record.argmax_keys.size() << "}\n";
            } else {
                std::cout << "n,d,tree_count,min_mis,max_mis,argmin_count,argmax_count\n"
                          << record.n << ',' << record.d << ',' << record.tree_count << ','
                          << record.min_count.to_decimal() << ','
                          << record.max_count.to_decimal() << ',' << record.argmin_keys.size()
                          << ',' << record.argmax_keys.size() << '\n';
            }
            return 0;
        }
        if (cmd_verify_min->parsed()) {
            VerifyOptions options;
            static_cast<ScanOptions&>(options) = scan_options(globals);
            VerificationReport report = verify_min_theorem(min_nmax, options);
            return emit_report(report, globals, min_out, "verify-min", report.rows.size());
        }
        if (cmd_verify_max->parsed()) {
            VerifyOptions options;
            static_cast<ScanOptions&>(options) = scan_options(globals);
            VerificationReport report = verify_max_theorem(max_nmax, options);
            return emit_report(report, globals, max_out, "verify-max", report.rows.size());
        }
        if (cmd_verify_lemmas->parsed()) {
            LemmaReport report = verify_m_lemmas(lemmas_nlimit);
            return emit_report(report, globals, lemmas_out, "verify-lemmas",
                               report.checks.size());
        }
        if (cmd_export->parsed()) {
            Extreme which = export_which == "min" ? Extreme::kMin : Extreme::kMax;
            std::size_t written =
                export_extremal(export_n, export_d, which, export_out, scan_options(globals));
            std::cout << written << '\n';
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

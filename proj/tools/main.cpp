// spectragraft command line: rho, family, enumerate, verify, report.
// Links the C API only; all computation happens behind spectragraft.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spectragraft.h"

namespace {

// 12 significant digits, trailing zeros kept.
std::string sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.12g", x);
    std::string s = buf;
    if (!s.empty() && s.back() == '.')
        s.pop_back();
    return s;
}

[[noreturn]] void fail(const std::string& message, int code = 2) {
    std::cerr << "error: " << message << '\n';
    std::exit(code);
}

void fail_status(sg_status status) {
    fail(std::string(sg_status_name(status)) + ": " + sg_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail("cannot open '" + path + "' for reading");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail("cannot open '" + path + "' for writing");
    out << content;
}

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { sg_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

sg_graph* load_graph(const std::string& input_file, const std::string& family) {
    if (input_file.empty() == family.empty())
        fail("give exactly one input: an edge-list file or --family");
    sg_graph* g = nullptr;
    sg_status st = family.empty() ? sg_graph_parse(read_file(input_file).c_str(), &g)
                                  : sg_graph_from_family(family.c_str(), &g);
    if (st != SG_OK)
        fail_status(st);
    return g;
}

int cmd_rho(const std::string& input_file, const std::string& family, double tol, bool oracle) {
    sg_graph* g = load_graph(input_file, family);
    const int n = sg_graph_order(g);
    sg_spectral res{};
    std::vector<double> perron(static_cast<size_t>(n));
    if (sg_status st = sg_spectral_radius(g, tol, &res, perron.data()); st != SG_OK)
        fail_status(st);
    sg_graph_facts facts{};
    if (sg_status st = sg_graph_facts_get(g, &facts); st != SG_OK)
        fail_status(st);

    std::cout << "rho = " << sig12(res.rho) << '\n';
    std::cout << "tr_max = " << facts.tr_max << '\n';
    char rbuf[32];
    std::snprintf(rbuf, sizeof rbuf, "%.3e", res.residual);
    std::cout << "residual = " << rbuf << '\n';
    std::cout << "iterations = " << res.iterations << '\n';
    std::cout << "method = " << (res.used_oracle ? "oracle" : "power") << '\n';
    std::cout << "perron =";
    for (double c : perron)
        std::cout << ' ' << sig12(c);
    std::cout << '\n';
    if (oracle) {
        std::vector<double> eigs(static_cast<size_t>(n));
        if (sg_status st = sg_full_spectrum(g, eigs.data()); st != SG_OK)
            fail_status(st);
        std::cout << "spectrum =";
        for (double e : eigs)
            std::cout << ' ' << sig12(e);
        std::cout << '\n';
    }
    sg_graph_free(g);
    return 0;
}

int cmd_family(const std::string& spec, const std::string& out_path) {
    sg_graph* g = nullptr;
    if (sg_status st = sg_graph_from_family(spec.c_str(), &g); st != SG_OK)
        fail_status(st);
    OwnedString text;
    if (sg_status st = sg_graph_edge_list(g, &text.ptr); st != SG_OK)
        fail_status(st);
    if (out_path.empty())
        std::cout << text.str();
    else
        write_file(out_path, text.str());
    sg_graph_free(g);
    return 0;
}

int cmd_enumerate(int order, const std::string& filter, const std::string& out_path) {
    OwnedString text;
    long count = 0;
    if (sg_status st = sg_enumerate_trees(order, filter.c_str(), &text.ptr, &count); st != SG_OK)
        fail_status(st);
    if (out_path.empty()) {
        std::cout << text.str();
        std::cerr << count << '\n';
    } else {
        write_file(out_path, text.str());
        std::cout << count << '\n';
    }
    return 0;
}

int cmd_verify(const std::string& claim, int n_min, int n_max, int jobs, std::uint64_t seed,
               const std::string& json_path) {
    OwnedString json, summary;
    int exit_code = 0;
    sg_status st = sg_verify(claim.c_str(), n_min, n_max, jobs, seed,
                             json_path.empty() ? nullptr : &json.ptr, &summary.ptr, &exit_code);
    if (st != SG_OK)
        fail_status(st);
    if (!json_path.empty())
        write_file(json_path, json.str());
    std::cout << summary.str();
    return exit_code;
}

int cmd_report(const std::string& json_path, const std::string& csv_path) {
    OwnedString csv;
    if (sg_status st = sg_report_csv(read_file(json_path).c_str(), &csv.ptr); st != SG_OK)
        fail_status(st);
    if (csv_path.empty())
        std::cout << csv.str();
    else
        write_file(csv_path, csv.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance signless Laplacian spectral radius toolkit"};
    app.set_config("--config");
    app.require_subcommand(1);

    std::string input_file, family, out_path, json_path, csv_path, filter = "all", claim = "all";
    double tol = -1.0;
    bool oracle = false;
    int order = 0, n_min = -1, n_max = -1, jobs = 1;
    std::uint64_t seed = 12345;

    auto* rho = app.add_subcommand("rho", "spectral radius, Perron vector and residual of one graph");
    rho->add_option("input", input_file, "edge-list file (first line 'n m', then 'u v' lines)");
    rho->add_option("--family", family, "family spec, e.g. B:n=10,n0=3,parts=1,1,1");
    rho->add_option("--tol", tol, "relative eigen-residual tolerance (default 1e-12)");
    rho->add_flag("--oracle", oracle, "also print the full spectrum from the rotation oracle");

    auto* fam = app.add_subcommand("family", "construct a named family member and emit its edge list");
    fam->add_option("spec", family, "family spec, e.g. S:n=8,legs=2,2,3")->required();
    fam->add_option("--out", out_path, "write the edge list here instead of stdout");

    auto* enu = app.add_subcommand("enumerate", "enumerate unlabeled trees of a given order");
    enu->add_option("--order", order, "tree order")->required();
    enu->add_option("--filter", filter,
                    "all | non-caterpillar | non-starlike | intersection | pendants=<k>");
    enu->add_option("--out", out_path, "fixture output file (one 'code<TAB>edges' line per tree)");

    auto* ver = app.add_subcommand("verify", "run extremal claims over exhaustively enumerated trees");
    ver->add_option("--claim", claim, "2.1 2.2 2.3 2.4 2.5 2.6 3.1 3.2 3.3 3.4 3.5 3.6 or all");
    ver->add_option("--n-min", n_min, "lowest order (default: per claim)");
    ver->add_option("--n-max", n_max, "highest order (default: per claim)");
    ver->add_option("--json", json_path, "write the JSON report here");
    ver->add_option("--jobs", jobs, "worker threads; output is identical for any value");
    ver->add_option("--seed", seed, "seed for the invariant sweep's random vectors");

    auto* rep = app.add_subcommand("report", "summarize a JSON report as CSV");
    rep->add_option("json", json_path, "JSON report produced by verify --json")->required();
    rep->add_option("--csv", csv_path, "write CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    if (rho->parsed())
        return cmd_rho(input_file, family, tol, oracle);
    if (fam->parsed())
        return cmd_family(family, out_path);
    if (enu->parsed())
        return cmd_enumerate(order, filter, out_path);
    if (ver->parsed())
        return cmd_verify(claim, n_min, n_max, jobs, seed, json_path);
    if (rep->parsed())
        return cmd_report(json_path, csv_path);
    return 2;
}

#include "spectragraft.h"

#include <cstring>
#include <new>
#include <string>

#include "spectragraft/families.hpp"
#include "spectragraft/graph.hpp"
#include "spectragraft/spectral.hpp"
#include "spectragraft/tree_enum.hpp"
#include "spectragraft/verify.hpp"

using namespace spectragraft;

struct sg_graph {
    Graph impl;
};

namespace {

thread_local std::string g_last_error;

sg_status map_code(errc code) {
    switch (code) {
    case errc::invalid_argument: return SG_ERROR_INVALID_ARGUMENT;
    case errc::parse: return SG_ERROR_PARSE;
    case errc::disconnected: return SG_ERROR_DISCONNECTED;
    case errc::not_a_tree: return SG_ERROR_NOT_A_TREE;
    case errc::cap_exceeded: return SG_ERROR_CAP_EXCEEDED;
    case errc::no_convergence: return SG_ERROR_NO_CONVERGENCE;
    case errc::internal: return SG_ERROR_INTERNAL;
    }
    return SG_ERROR_INTERNAL;
}

template <typename Fn>
sg_status guarded(Fn&& fn) {
    try {
        fn();
        return SG_OK;
    } catch (const error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return SG_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SG_ERROR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

sg_status require(bool ok, const char* what) {
    if (ok)
        return SG_OK;
    g_last_error = what;
    return SG_ERROR_INVALID_ARGUMENT;
}

} // namespace

extern "C" {

const char* sg_status_name(sg_status status) {
    switch (status) {
    case SG_OK: return "ok";
    case SG_ERROR_INVALID_ARGUMENT: return "invalid_argument";
    case SG_ERROR_PARSE: return "parse";
    case SG_ERROR_DISCONNECTED: return "disconnected";
    case SG_ERROR_NOT_A_TREE: return "not_a_tree";
    case SG_ERROR_CAP_EXCEEDED: return "cap_exceeded";
    case SG_ERROR_NO_CONVERGENCE: return "no_convergence";
    case SG_ERROR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* sg_last_error(void) {
    return g_last_error.c_str();
}

const char* sg_version(void) {
    return "1.0.0";
}

int sg_enumeration_cap(void) {
    return enumeration_cap();
}

void sg_string_free(char* text) {
    delete[] text;
}

sg_status sg_graph_parse(const char* edge_list_text, sg_graph** out) {
    if (sg_status st = require(edge_list_text && out, "sg_graph_parse: NULL argument"))
        return st;
    *out = nullptr;
    return guarded([&] { *out = new sg_graph{parse_edge_list(edge_list_text)}; });
}

sg_status sg_graph_from_family(const char* family_spec, sg_graph** out) {
    if (sg_status st = require(family_spec && out, "sg_graph_from_family: NULL argument"))
        return st;
    *out = nullptr;
    return guarded([&] { *out = new sg_graph{build_family(parse_family_spec(family_spec))}; });
}

void sg_graph_free(sg_graph* graph) {
    delete graph;
}

int sg_graph_order(const sg_graph* graph) {
    return graph ? graph->impl.order() : 0;
}

int sg_graph_edge_count(const sg_graph* graph) {
    return graph ? graph->impl.size() : 0;
}

sg_status sg_graph_edge_list(const sg_graph* graph, char** out_text) {
    if (sg_status st = require(graph && out_text, "sg_graph_edge_list: NULL argument"))
        return st;
    return guarded([&] { *out_text = dup_string(write_edge_list(graph->impl)); });
}

sg_status sg_graph_canonical_code(const sg_graph* graph, char** out_code) {
    if (sg_status st = require(graph && out_code, "sg_graph_canonical_code: NULL argument"))
        return st;
    return guarded([&] { *out_code = dup_string(canonical_code(graph->impl)); });
}

sg_status sg_graph_facts_get(const sg_graph* graph, sg_graph_facts* out) {
    if (sg_status st = require(graph && out, "sg_graph_facts_get: NULL argument"))
        return st;
    return guarded([&] {
        const Graph& g = graph->impl;
        GraphStats st = graph_stats(g);
        TransmissionVector tv = transmissions(all_pairs_distances(g));
        sg_graph_facts facts{};
        facts.order = g.order();
        facts.size = g.size();
        facts.diameter = st.diameter;
        facts.pendant_count = static_cast<int>(st.pendant_vertices.size());
        facts.high_degree_count = st.high_degree_count;
        facts.wiener_index = st.wiener;
        facts.tr_max = tv.tr_max;
        facts.tr_min = tv.tr_min;
        facts.is_tree = g.is_tree() ? 1 : 0;
        if (facts.is_tree) {
            ClassFlags flags = class_membership(g);
            facts.starlike = flags.non_starlike ? 0 : 1;
            facts.caterpillar = flags.non_caterpillar ? 0 : 1;
            facts.double_broom = flags.double_broom ? 1 : 0;
        }
        *out = facts;
    });
}

sg_status sg_spectral_radius(const sg_graph* graph, double tol, sg_spectral* out, double* perron_out) {
    if (sg_status st = require(graph && out, "sg_spectral_radius: NULL argument"))
        return st;
    return guarded([&] {
        SpectralResult res = spectral_radius(graph->impl, tol > 0.0 ? tol : kDefaultTol);
        out->rho = res.rho;
        out->residual = res.residual;
        out->iterations = res.iterations;
        out->used_oracle = (res.method == SpectralMethod::oracle) ? 1 : 0;
        if (perron_out)
            std::memcpy(perron_out, res.perron.data(), res.perron.size() * sizeof(double));
    });
}

sg_status sg_full_spectrum(const sg_graph* graph, double* eigs_out) {
    if (sg_status st = require(graph && eigs_out, "sg_full_spectrum: NULL argument"))
        return st;
    return guarded([&] {
        auto eigs = full_spectrum_oracle(q_matrix(graph->impl));
        std::memcpy(eigs_out, eigs.data(), eigs.size() * sizeof(double));
    });
}

sg_status sg_enumerate_trees(int order, const char* filter, char** out_fixture_text, long* out_count) {
    if (sg_status st = require(out_fixture_text || out_count, "sg_enumerate_trees: no output requested"))
        return st;
    return guarded([&] {
        auto keep = parse_tree_filter(filter ? filter : "all");
        std::string text;
        long count = 0;
        for (const Graph& g : enumerate_trees(order)) {
            if (!keep(g))
                continue;
            ++count;
            if (out_fixture_text) {
                text += fixture_line(g);
                text += '\n';
            }
        }
        if (out_fixture_text)
            *out_fixture_text = dup_string(text);
        if (out_count)
            *out_count = count;
    });
}

sg_status sg_verify(const char* claim, int n_min, int n_max, int jobs, uint64_t seed,
                    char** out_json, char** out_summary, int* out_exit_code) {
    if (sg_status st = require(claim != nullptr, "sg_verify: NULL claim"))
        return st;
    return guarded([&] {
        RunOptions opts;
        opts.n_min = n_min;
        opts.n_max = n_max;
        opts.jobs = jobs >= 1 ? jobs : 1;
        opts.seed = seed;
        std::vector<ClaimEntry> entries = run_claim(claim, opts);
        if (out_json) {
            ReportMeta meta{claim, n_min, n_max, seed};
            *out_json = dup_string(report_json(entries, meta));
        }
        if (out_summary)
            *out_summary = dup_string(human_summary(entries));
        if (out_exit_code)
            *out_exit_code = exit_code_for(entries);
    });
}

sg_status sg_report_csv(const char* report_json_text, char** out_csv) {
    if (sg_status st = require(report_json_text && out_csv, "sg_report_csv: NULL argument"))
        return st;
    return guarded([&] { *out_csv = dup_string(report_csv_from_json(report_json_text)); });
}

} // extern "C"

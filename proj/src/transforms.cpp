#include "spectragraft/transforms.hpp"

#include <algorithm>
#include <queue>

namespace spectragraft {

bool is_cut_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw error(errc::invalid_argument,
                    "{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
    // BFS from u avoiding the edge uv; the edge cuts iff v stays unreachable.
    std::vector<bool> seen(static_cast<size_t>(g.order()), false);
    std::queue<int> q;
    seen[static_cast<size_t>(u)] = true;
    q.push(u);
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (int b : g.neighbors(a)) {
            if (a == u && b == v)
                continue;
            if (a == v && b == u)
                continue;
            if (!seen[static_cast<size_t>(b)]) {
                seen[static_cast<size_t>(b)] = true;
                q.push(b);
            }
        }
    }
    return !seen[static_cast<size_t>(v)];
}

ContractionResult c_transform(const Graph& g, int u, int v) {
    g.require_connected();
    if (!is_cut_edge(g, u, v))
        throw error(errc::invalid_argument, "{" + std::to_string(u) + "," + std::to_string(v) +
                                                "} is not a cut edge; c-transform undefined");
    const int n = g.order();
    std::vector<int> relabel(static_cast<size_t>(n));
    for (int w = 0; w < n; ++w)
        relabel[static_cast<size_t>(w)] = (w > v) ? w - 1 : w;
    relabel[static_cast<size_t>(v)] = relabel[static_cast<size_t>(u)]; // v merges into u

    Graph out(n); // order preserved: v disappears, one pendant appears
    for (auto [a, b] : g.sorted_edges()) {
        if ((a == u && b == v) || (a == v && b == u))
            continue;
        out.add_edge(relabel[static_cast<size_t>(a)], relabel[static_cast<size_t>(b)]);
    }
    const int merged = relabel[static_cast<size_t>(u)];
    out.add_edge(merged, n - 1);
    return ContractionResult{std::move(out), std::move(relabel), merged, n - 1};
}

std::vector<std::vector<int>> branches_at(const Graph& g, int v0) {
    g.require_connected();
    if (v0 < 0 || v0 >= g.order())
        throw error(errc::invalid_argument, "vertex " + std::to_string(v0) + " out of range");
    std::vector<int> comp(static_cast<size_t>(g.order()), -1);
    comp[static_cast<size_t>(v0)] = -2;
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[static_cast<size_t>(s)] != -1)
            continue;
        std::vector<int> members;
        std::queue<int> q;
        comp[static_cast<size_t>(s)] = static_cast<int>(out.size());
        q.push(s);
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            members.push_back(a);
            for (int b : g.neighbors(a)) {
                if (comp[static_cast<size_t>(b)] == -1) {
                    comp[static_cast<size_t>(b)] = static_cast<int>(out.size());
                    q.push(b);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

namespace {

void validate_grouping(const std::vector<std::vector<int>>& branches,
                       const std::array<std::vector<int>, 3>& groups) {
    std::vector<int> seen(branches.size(), 0);
    for (const auto& grp : groups) {
        if (grp.empty())
            throw error(errc::invalid_argument, "branch grouping: every part needs at least one branch");
        for (int idx : grp) {
            if (idx < 0 || idx >= static_cast<int>(branches.size()))
                throw error(errc::invalid_argument, "branch grouping: branch index " + std::to_string(idx) +
                                                        " out of range");
            if (seen[static_cast<size_t>(idx)]++)
                throw error(errc::invalid_argument, "branch grouping: branch " + std::to_string(idx) +
                                                        " used twice (not a partition)");
        }
    }
    for (size_t i = 0; i < branches.size(); ++i)
        if (!seen[i])
            throw error(errc::invalid_argument,
                        "branch grouping: branch " + std::to_string(i) + " unassigned (not a partition)");
}

} // namespace

BranchDecomposition branch_decomposition(const Graph& g, int v0) {
    auto branches = branches_at(g, v0);
    if (branches.size() != 3)
        throw error(errc::invalid_argument, "vertex " + std::to_string(v0) + " has " +
                                                std::to_string(branches.size()) +
                                                " branches; give an explicit 3-grouping");
    BranchDecomposition dec;
    dec.v0 = v0;
    dec.branches = std::move(branches);
    dec.groups = {std::vector<int>{0}, std::vector<int>{1}, std::vector<int>{2}};
    return dec;
}

BranchDecomposition branch_decomposition(const Graph& g, int v0,
                                         const std::array<std::vector<int>, 3>& groups) {
    auto branches = branches_at(g, v0);
    if (branches.size() < 3)
        throw error(errc::invalid_argument, "vertex " + std::to_string(v0) + " has only " +
                                                std::to_string(branches.size()) + " branches; need >= 3");
    validate_grouping(branches, groups);
    BranchDecomposition dec;
    dec.v0 = v0;
    dec.branches = std::move(branches);
    dec.groups = groups;
    return dec;
}

Graph move_branch(const Graph& g, const BranchDecomposition& dec, int u) {
    if (u == dec.v0)
        throw error(errc::invalid_argument, "move target u must differ from v0");
    std::vector<int> part(static_cast<size_t>(g.order()), -1);
    for (int gi = 0; gi < 3; ++gi)
        for (int bidx : dec.groups[static_cast<size_t>(gi)])
            for (int w : dec.branches[static_cast<size_t>(bidx)])
                part[static_cast<size_t>(w)] = gi;
    if (part[static_cast<size_t>(u)] != 1)
        throw error(errc::invalid_argument, "move target u=" + std::to_string(u) + " does not lie in G2");

    Graph out(g.order());
    for (auto [a, b] : g.sorted_edges()) {
        bool from_v0_into_g3 = (a == dec.v0 && part[static_cast<size_t>(b)] == 2) ||
                               (b == dec.v0 && part[static_cast<size_t>(a)] == 2);
        if (from_v0_into_g3) {
            int w = (a == dec.v0) ? b : a;
            out.add_edge(u, w);
        } else {
            out.add_edge(a, b);
        }
    }
    return out;
}

bool branch_move_condition(const BranchDecomposition& dec, std::span<const double> x) {
    size_t need = 0;
    for (const auto& br : dec.branches)
        need += br.size();
    if (x.size() != need + 1)
        throw error(errc::invalid_argument, "Perron vector length " + std::to_string(x.size()) +
                                                " does not match graph order " + std::to_string(need + 1));
    // G1 and G2 both include v0; G3 excludes it.
    auto side_sum = [&](int side) {
        double s = 0.0;
        for (int b3 : dec.groups[2]) {
            for (int vi : dec.branches[static_cast<size_t>(b3)]) {
                double xi = x[static_cast<size_t>(vi)];
                double t = xi + x[static_cast<size_t>(dec.v0)];
                s += t * t;
                for (int bj : dec.groups[static_cast<size_t>(side)]) {
                    for (int vj : dec.branches[static_cast<size_t>(bj)]) {
                        double u = xi + x[static_cast<size_t>(vj)];
                        s += u * u;
                    }
                }
            }
        }
        return s;
    };
    return side_sum(0) >= side_sum(1);
}

std::vector<PendantPath> pendant_paths_at(const Graph& g, int u) {
    if (u < 0 || u >= g.order())
        throw error(errc::invalid_argument, "vertex " + std::to_string(u) + " out of range");
    std::vector<PendantPath> out;
    for (int start : g.neighbors(u)) {
        PendantPath path;
        int prev = u, cur = start;
        while (g.degree(cur) == 2) {
            path.vertices.push_back(cur);
            int nxt = (g.neighbors(cur)[0] == prev) ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            prev = cur;
            cur = nxt;
        }
        if (g.degree(cur) == 1) {
            path.vertices.push_back(cur);
            out.push_back(std::move(path));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const PendantPath& a, const PendantPath& b) { return a.vertices[0] < b.vertices[0]; });
    return out;
}

namespace {

void validate_pendant_path(const Graph& g, int u, const PendantPath& path) {
    if (path.vertices.empty())
        throw error(errc::invalid_argument, "pendant path must be nonempty");
    int prev = u;
    for (size_t k = 0; k < path.vertices.size(); ++k) {
        int cur = path.vertices[k];
        if (cur == u)
            throw error(errc::invalid_argument, "pendant path may not contain its anchor vertex");
        if (!g.has_edge(prev, cur))
            throw error(errc::invalid_argument, "pendant path breaks at " + std::to_string(prev) + "-" +
                                                    std::to_string(cur) + ": not an edge");
        int want = (k + 1 == path.vertices.size()) ? 1 : 2;
        if (g.degree(cur) != want)
            throw error(errc::invalid_argument, "vertex " + std::to_string(cur) +
                                                    " has degree " + std::to_string(g.degree(cur)) +
                                                    ", not a pendant-path vertex");
        prev = cur;
    }
}

} // namespace

Graph pendant_path_shift(const Graph& g, int u, const PendantPath& shorter, const PendantPath& longer) {
    g.require_connected();
    validate_pendant_path(g, u, shorter);
    validate_pendant_path(g, u, longer);
    const int p = shorter.length(), q = longer.length();
    if (p < 1 || q < p)
        throw error(errc::invalid_argument, "pendant path shift requires q >= p >= 1, got p=" +
                                                std::to_string(p) + " q=" + std::to_string(q));
    for (int a : shorter.vertices)
        for (int b : longer.vertices)
            if (a == b)
                throw error(errc::invalid_argument, "pendant paths share vertex " + std::to_string(a));
    if (g.order() - p - q < 2)
        throw error(errc::invalid_argument, "pendant path shift needs a base graph of order >= 2 beyond the paths");

    const int leaf = shorter.vertices.back();
    const int hook = (p == 1) ? u : shorter.vertices[static_cast<size_t>(p - 2)];
    Graph out(g.order());
    for (auto [a, b] : g.sorted_edges()) {
        if ((a == hook && b == leaf) || (a == leaf && b == hook))
            continue;
        out.add_edge(a, b);
    }
    out.add_edge(longer.vertices.back(), leaf);
    return out;
}

} // namespace spectragraft

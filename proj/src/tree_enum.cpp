#include "spectragraft/tree_enum.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <unordered_set>

namespace spectragraft {

int enumeration_cap() {
    if (const char* env = std::getenv("SPECTRA_GRAFT_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1)
            return static_cast<int>(v);
    }
    return kDefaultEnumerationCap;
}

namespace {

// Rooted AHU code of the subtree at v with parent p (adjacency-list form).
std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int p) {
    std::vector<std::string> kids;
    for (int w : adj[static_cast<size_t>(v)])
        if (w != p)
            kids.push_back(rooted_code(adj, w, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids)
        out += k;
    out += ")";
    return out;
}

std::vector<int> centroids_of(const std::vector<std::vector<int>>& adj, int n) {
    // Iterative leaf stripping converges on the centroid(s) of the tree
    // weighted by subtree sizes; do it via subtree-size computation instead.
    std::vector<int> size(static_cast<size_t>(n), 1);
    std::vector<int> order, parent(static_cast<size_t>(n), -1);
    order.reserve(static_cast<size_t>(n));
    order.push_back(0);
    for (size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int w : adj[static_cast<size_t>(v)])
            if (w != parent[static_cast<size_t>(v)]) {
                parent[static_cast<size_t>(w)] = v;
                order.push_back(w);
            }
    }
    for (size_t i = order.size(); i-- > 1;)
        size[static_cast<size_t>(parent[static_cast<size_t>(order[i])])] += size[static_cast<size_t>(order[i])];
    int best = n;
    std::vector<int> cents;
    for (int v = 0; v < n; ++v) {
        int weight = n - size[static_cast<size_t>(v)];
        for (int w : adj[static_cast<size_t>(v)])
            if (w != parent[static_cast<size_t>(v)])
                weight = std::max(weight, size[static_cast<size_t>(w)]);
        if (weight < best) {
            best = weight;
            cents.assign(1, v);
        } else if (weight == best) {
            cents.push_back(v);
        }
    }
    std::sort(cents.begin(), cents.end());
    return cents;
}

std::string code_of_adj(const std::vector<std::vector<int>>& adj, int n) {
    if (n == 1)
        return "()";
    auto cents = centroids_of(adj, n);
    if (cents.size() == 1)
        return rooted_code(adj, cents[0], -1);
    // Bicentroidal: split across the centroid edge.
    std::string a = rooted_code(adj, cents[0], cents[1]);
    std::string b = rooted_code(adj, cents[1], cents[0]);
    return std::min(a + b, b + a);
}

std::vector<std::vector<int>> adjacency_of(const Graph& g) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        adj[static_cast<size_t>(v)] = g.neighbors(v);
    return adj;
}

} // namespace

std::vector<int> tree_centroids(const Graph& g) {
    g.require_tree();
    return centroids_of(adjacency_of(g), g.order());
}

std::string canonical_code(const Graph& g) {
    g.require_tree();
    return code_of_adj(adjacency_of(g), g.order());
}

namespace {

// Canonical level-sequence successor enumeration of rooted trees: start from
// the path [1,2,...,n]; each successor trims the last level > 2 and repeats
// the block under its parent until the sequence is filled. Ends at the star
// [1,2,2,...,2]. Every canonical sequence appears exactly once.
class RootedTreeSequence {
public:
    explicit RootedTreeSequence(int n) : n_(n), level_(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i)
            level_[static_cast<size_t>(i)] = i + 1;
        done_ = false;
    }

    bool done() const { return done_; }
    const std::vector<int>& levels() const { return level_; }

    void advance() {
        int p = -1;
        for (int i = n_ - 1; i >= 0; --i) {
            if (level_[static_cast<size_t>(i)] > 2) {
                p = i;
                break;
            }
        }
        if (p < 0) {
            done_ = true;
            return;
        }
        int q = -1;
        for (int i = p - 1; i >= 0; --i) {
            if (level_[static_cast<size_t>(i)] == level_[static_cast<size_t>(p)] - 1) {
                q = i;
                break;
            }
        }
        for (int i = p; i < n_; ++i)
            level_[static_cast<size_t>(i)] = level_[static_cast<size_t>(i - (p - q))];
    }

    // Parent of position i: nearest earlier position one level up.
    Graph to_graph() const {
        Graph g(n_);
        std::vector<int> latest(static_cast<size_t>(n_ + 2), -1);
        for (int i = 0; i < n_; ++i) {
            int lv = level_[static_cast<size_t>(i)];
            if (i > 0)
                g.add_edge(latest[static_cast<size_t>(lv - 1)], i);
            latest[static_cast<size_t>(lv)] = i;
        }
        return g;
    }

private:
    int n_;
    std::vector<int> level_;
    bool done_ = false;
};

} // namespace

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1)
        throw error(errc::invalid_argument, "tree order must be >= 1, got " + std::to_string(n));
    const int cap = enumeration_cap();
    if (n > cap)
        throw error(errc::cap_exceeded, "order " + std::to_string(n) + " exceeds the enumeration cap " +
                                            std::to_string(cap) + " (set SPECTRA_GRAFT_CAP to raise it)");
    if (n == 1)
        return {Graph(1)};
    std::map<std::string, Graph> classes;
    for (RootedTreeSequence seq(n); !seq.done(); seq.advance()) {
        Graph g = seq.to_graph();
        std::string code = canonical_code(g);
        classes.emplace(std::move(code), std::move(g));
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [code, g] : classes)
        out.push_back(std::move(g));
    return out;
}

long prufer_count_oracle(int n) {
    if (n < 1)
        throw error(errc::invalid_argument, "tree order must be >= 1, got " + std::to_string(n));
    if (n > 9)
        throw error(errc::cap_exceeded, "sequence-decoding oracle is O(n^(n-2)); capped at n <= 9");
    if (n <= 2)
        return 1;

    const int m = n - 2;
    std::vector<int> seq(static_cast<size_t>(m), 0);
    std::vector<int> degree(static_cast<size_t>(n));
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    std::unordered_set<std::string> codes;

    for (;;) {
        // Decode the current sequence into a labeled tree. Consumed leaves get
        // degree 0 so the ascending pointer never revisits them.
        for (int v = 0; v < n; ++v) {
            degree[static_cast<size_t>(v)] = 1;
            adj[static_cast<size_t>(v)].clear();
        }
        for (int s : seq)
            ++degree[static_cast<size_t>(s)];
        int ptr = 0;
        int leaf = -1;
        for (int s : seq) {
            if (leaf < 0) {
                while (degree[static_cast<size_t>(ptr)] != 1)
                    ++ptr;
                leaf = ptr++;
            }
            adj[static_cast<size_t>(leaf)].push_back(s);
            adj[static_cast<size_t>(s)].push_back(leaf);
            degree[static_cast<size_t>(leaf)] = 0;
            if (--degree[static_cast<size_t>(s)] == 1 && s < ptr)
                leaf = s;
            else
                leaf = -1;
        }
        int a = -1, b = -1;
        for (int v = 0; v < n; ++v) {
            if (degree[static_cast<size_t>(v)] == 1) {
                (a < 0 ? a : b) = v;
            }
        }
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);

        codes.insert(code_of_adj(adj, n));

        int k = m - 1;
        while (k >= 0 && seq[static_cast<size_t>(k)] == n - 1)
            seq[static_cast<size_t>(k--)] = 0;
        if (k < 0)
            break;
        ++seq[static_cast<size_t>(k)];
    }
    return static_cast<long>(codes.size());
}

std::string fixture_line(const Graph& g) {
    return canonical_code(g) + "\t" + write_edge_list_inline(g);
}

} // namespace spectragraft

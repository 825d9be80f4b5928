#include "spectragraft/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>

namespace spectragraft {

const char* errc_name(errc code) {
    switch (code) {
    case errc::invalid_argument: return "invalid_argument";
    case errc::parse: return "parse";
    case errc::disconnected: return "disconnected";
    case errc::not_a_tree: return "not_a_tree";
    case errc::cap_exceeded: return "cap_exceeded";
    case errc::no_convergence: return "no_convergence";
    case errc::internal: return "internal";
    }
    return "unknown";
}

Graph::Graph(int order) : order_(order) {
    if (order < 1)
        throw error(errc::invalid_argument, "graph order must be >= 1, got " + std::to_string(order));
    adj_.resize(static_cast<size_t>(order));
}

Graph Graph::from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
    Graph g(order);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order_)
        throw error(errc::invalid_argument,
                    "vertex " + std::to_string(v) + " out of range [0," + std::to_string(order_ - 1) + "]");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw error(errc::invalid_argument, "self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw error(errc::invalid_argument,
                    "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    if (u > v)
        std::swap(u, v);
    edges_.emplace_back(u, v);
    adj_[static_cast<size_t>(u)].push_back(v);
    adj_[static_cast<size_t>(v)].push_back(u);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nu = adj_[static_cast<size_t>(u)];
    return std::find(nu.begin(), nu.end(), v) != nu.end();
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<size_t>(v)].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
}

std::vector<std::pair<int, int>> Graph::sorted_edges() const {
    auto out = edges_;
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// BFS from src; fills dist (-1 = unreached), returns number reached.
int bfs(const Graph& g, int src, std::vector<int>& dist) {
    dist.assign(static_cast<size_t>(g.order()), -1);
    std::queue<int> q;
    dist[static_cast<size_t>(src)] = 0;
    q.push(src);
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                q.push(w);
                ++reached;
            }
        }
    }
    return reached;
}

} // namespace

bool Graph::is_connected() const {
    std::vector<int> dist;
    return bfs(*this, 0, dist) == order_;
}

bool Graph::is_tree() const {
    return size() == order_ - 1 && is_connected();
}

void Graph::require_connected() const {
    std::vector<int> dist;
    if (bfs(*this, 0, dist) == order_)
        return;
    int stranded = -1;
    for (int v = 0; v < order_; ++v) {
        if (dist[static_cast<size_t>(v)] < 0) {
            stranded = v;
            break;
        }
    }
    throw error(errc::disconnected, "graph is disconnected: vertices 0 and " +
                                        std::to_string(stranded) + " lie in different components");
}

void Graph::require_tree() const {
    require_connected();
    if (size() != order_ - 1)
        throw error(errc::not_a_tree, "expected a tree: order " + std::to_string(order_) + " needs " +
                                          std::to_string(order_ - 1) + " edges, got " + std::to_string(size()));
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    g.require_connected();
    const int n = g.order();
    DistanceMatrix dm;
    dm.n = n;
    dm.d.resize(static_cast<size_t>(n) * n);
    std::vector<int> dist;
    for (int src = 0; src < n; ++src) {
        bfs(g, src, dist);
        for (int v = 0; v < n; ++v)
            dm.d[static_cast<size_t>(src) * n + v] = dist[static_cast<size_t>(v)];
    }
    return dm;
}

TransmissionVector transmissions(const DistanceMatrix& d) {
    TransmissionVector tv;
    tv.tr.resize(static_cast<size_t>(d.n));
    for (int v = 0; v < d.n; ++v) {
        std::int64_t s = 0;
        for (int u = 0; u < d.n; ++u)
            s += d(v, u);
        tv.tr[static_cast<size_t>(v)] = s;
    }
    tv.tr_max = *std::max_element(tv.tr.begin(), tv.tr.end());
    tv.tr_min = *std::min_element(tv.tr.begin(), tv.tr.end());
    return tv;
}

QMatrix q_matrix(const DistanceMatrix& d) {
    QMatrix q;
    q.n = d.n;
    q.q.resize(static_cast<size_t>(d.n) * d.n);
    TransmissionVector tv = transmissions(d);
    for (int u = 0; u < d.n; ++u) {
        for (int v = 0; v < d.n; ++v)
            q.q[static_cast<size_t>(u) * d.n + v] = (u == v) ? tv.tr[static_cast<size_t>(u)] : d(u, v);
    }
    return q;
}

QMatrix q_matrix(const Graph& g) {
    return q_matrix(all_pairs_distances(g));
}

GraphStats graph_stats(const Graph& g) {
    const DistanceMatrix dm = all_pairs_distances(g);
    GraphStats st;
    st.degrees.resize(static_cast<size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        st.degrees[static_cast<size_t>(v)] = g.degree(v);
        if (g.degree(v) == 1)
            st.pendant_vertices.push_back(v);
        if (g.degree(v) >= 3)
            ++st.high_degree_count;
    }
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            st.diameter = std::max(st.diameter, dm(u, v));
            st.wiener += dm(u, v);
        }
    }
    return st;
}

namespace {

struct LineReader {
    std::string_view text;
    size_t pos = 0;
    int line_no = 0;

    // Returns next non-blank line; empty optional at end of input.
    bool next(std::string_view& out) {
        while (pos < text.size()) {
            size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos)
                eol = text.size();
            std::string_view line = text.substr(pos, eol - pos);
            pos = eol + 1;
            ++line_no;
            size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string_view::npos)
                continue; // blank
            size_t b = line.find_last_not_of(" \t\r");
            out = line.substr(a, b - a + 1);
            return true;
        }
        return false;
    }
};

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw error(errc::parse, "line " + std::to_string(line_no) + ": " + what);
}

std::vector<long> parse_ints(std::string_view line, int line_no, size_t expect) {
    std::vector<long> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        if (i >= line.size())
            break;
        long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
            parse_fail(line_no, "expected integers, got '" + std::string(line) + "'");
        out.push_back(value);
        i = static_cast<size_t>(ptr - line.data());
    }
    if (out.size() != expect)
        parse_fail(line_no, "expected " + std::to_string(expect) + " integers, got " +
                                std::to_string(out.size()) + " in '" + std::string(line) + "'");
    return out;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    LineReader rd{text};
    std::string_view line;
    if (!rd.next(line))
        throw error(errc::parse, "empty input: expected header line 'n m'");
    auto header = parse_ints(line, rd.line_no, 2);
    long n = header[0], m = header[1];
    if (n < 1)
        parse_fail(rd.line_no, "vertex count must be >= 1, got " + std::to_string(n));
    if (n > 1'000'000)
        parse_fail(rd.line_no, "vertex count " + std::to_string(n) + " is out of supported range");
    if (m < 0 || m > n * (n - 1) / 2)
        parse_fail(rd.line_no, "edge count " + std::to_string(m) + " out of range for order " + std::to_string(n));

    Graph g(static_cast<int>(n));
    for (long k = 0; k < m; ++k) {
        if (!rd.next(line))
            throw error(errc::parse, "line " + std::to_string(rd.line_no + 1) + ": expected " +
                                         std::to_string(m) + " edges, got " + std::to_string(k));
        auto uv = parse_ints(line, rd.line_no, 2);
        long u = uv[0], v = uv[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            parse_fail(rd.line_no, "vertex id out of range [0," + std::to_string(n - 1) + "] in '" +
                                       std::string(line) + "'");
        if (u == v)
            parse_fail(rd.line_no, "self-loop at vertex " + std::to_string(u));
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            parse_fail(rd.line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (rd.next(line))
        parse_fail(rd.line_no, "trailing content after " + std::to_string(m) + " edges: '" +
                                   std::string(line) + "'");
    return g;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.sorted_edges())
        os << u << ' ' << v << '\n';
    return os.str();
}

std::string write_edge_list_inline(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.size();
    for (auto [u, v] : g.sorted_edges())
        os << ' ' << u << ' ' << v;
    return os.str();
}

Graph parse_edge_list_inline(std::string_view text) {
    std::vector<long> nums;
    {
        size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && (text[i] == ' ' || text[i] == '\t'))
                ++i;
            if (i >= text.size())
                break;
            long value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
            if (ec != std::errc())
                throw error(errc::parse, "inline edge list: expected integers in '" + std::string(text) + "'");
            nums.push_back(value);
            i = static_cast<size_t>(ptr - text.data());
        }
    }
    if (nums.size() < 2)
        throw error(errc::parse, "inline edge list: missing 'n m' header");
    long n = nums[0], m = nums[1];
    if (n < 1 || m < 0 || nums.size() != static_cast<size_t>(2 + 2 * m))
        throw error(errc::parse, "inline edge list: expected " + std::to_string(2 * m) +
                                     " endpoint integers after header");
    Graph g(static_cast<int>(n));
    for (long k = 0; k < m; ++k)
        g.add_edge(static_cast<int>(nums[static_cast<size_t>(2 + 2 * k)]),
                   static_cast<int>(nums[static_cast<size_t>(3 + 2 * k)]));
    return g;
}

} // namespace spectragraft

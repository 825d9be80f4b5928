#include "spectragraft/families.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace spectragraft {

namespace {

[[noreturn]] void reject(const std::string& what) {
    throw error(errc::invalid_argument, what);
}

} // namespace

Graph make_path(int n) {
    if (n < 1)
        reject("path requires n >= 1, got n=" + std::to_string(n));
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph make_star(int n) {
    if (n < 2)
        reject("star requires n >= 2, got n=" + std::to_string(n));
    Graph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(0, v);
    return g;
}

Graph make_broom(int n, int n0, const std::vector<int>& parts) {
    const int r = static_cast<int>(parts.size());
    if (r < 1)
        reject("B family requires r >= 1 arms");
    if (n0 < 0)
        reject("B family requires n0 >= 0, got n0=" + std::to_string(n0));
    for (int i = 0; i < r; ++i) {
        if (parts[static_cast<size_t>(i)] < 1)
            reject("B family requires n_i >= 1, got n" + std::to_string(i + 1) + "=" +
                   std::to_string(parts[static_cast<size_t>(i)]));
        if (i > 0 && parts[static_cast<size_t>(i - 1)] > parts[static_cast<size_t>(i)])
            reject("B family requires n1 <= n2 <= ... <= nr (parts must be nondecreasing)");
    }
    const int total = n0 + std::accumulate(parts.begin(), parts.end(), 0);
    if (total != n - r - 1)
        reject("B family requires n0 + sum(parts) == n - r - 1: " + std::to_string(total) +
               " != " + std::to_string(n - r - 1));
    Graph g(n);
    int next = r + 1;
    for (int a = 1; a <= r; ++a)
        g.add_edge(0, a);
    for (int k = 0; k < n0; ++k)
        g.add_edge(0, next++);
    for (int a = 1; a <= r; ++a)
        for (int k = 0; k < parts[static_cast<size_t>(a - 1)]; ++k)
            g.add_edge(a, next++);
    return g;
}

Graph make_spider(int n, const std::vector<int>& legs) {
    const int r = static_cast<int>(legs.size());
    if (r < 1)
        reject("S family requires r >= 1 legs");
    for (int i = 0; i < r; ++i) {
        if (legs[static_cast<size_t>(i)] < 1)
            reject("S family requires n_i >= 1, got n" + std::to_string(i + 1) + "=" +
                   std::to_string(legs[static_cast<size_t>(i)]));
        if (i > 0 && legs[static_cast<size_t>(i - 1)] > legs[static_cast<size_t>(i)])
            reject("S family requires n1 <= n2 <= ... <= nr (legs must be nondecreasing)");
    }
    if (std::accumulate(legs.begin(), legs.end(), 0) != n - 1)
        reject("S family requires sum(legs) == n - 1, got sum=" +
               std::to_string(std::accumulate(legs.begin(), legs.end(), 0)) + " for n=" + std::to_string(n));
    Graph g(n);
    int next = 1;
    for (int leg : legs) {
        int prev = 0;
        for (int k = 0; k < leg; ++k) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

Graph make_double_broom(int n, int k, int t1, int t2) {
    if (t1 < 1 || t2 < 1)
        reject("T family requires t1 >= 1 and t2 >= 1");
    if (t1 + t2 != k)
        reject("T family requires t1 + t2 == k: " + std::to_string(t1) + "+" + std::to_string(t2) +
               " != " + std::to_string(k));
    const int len = n - k;
    if (len < 2)
        reject("T family requires path length l = n - k >= 2, got l=" + std::to_string(len));
    Graph g(n);
    for (int v = 0; v + 1 < len; ++v)
        g.add_edge(v, v + 1);
    int next = len;
    for (int i = 0; i < t1; ++i)
        g.add_edge(0, next++);
    for (int i = 0; i < t2; ++i)
        g.add_edge(len - 1, next++);
    return g;
}

Graph make_p_tree(int n, int i, int j) {
    if (n < 8)
        reject("P family requires n >= 8, got n=" + std::to_string(n));
    if (i < 2 || i > n - 4 || j < 2 || j > n - 4)
        reject("P family requires 2 <= i,j <= n-4, got i=" + std::to_string(i) + " j=" + std::to_string(j));
    if (i == j)
        reject("P family requires i != j");
    Graph g(n);
    const int spine = n - 3; // spine vertex v_t has label t-1
    for (int v = 0; v + 1 < spine; ++v)
        g.add_edge(v, v + 1);
    g.add_edge(i - 1, n - 3);
    g.add_edge(j - 1, n - 2);
    g.add_edge(n - 2, n - 1);
    return g;
}

int pendant_count(const Graph& g) {
    g.require_tree();
    int k = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1)
            ++k;
    return k;
}

bool is_starlike(const Graph& g) {
    g.require_tree();
    int high = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 3)
            ++high;
    return high <= 1;
}

bool is_caterpillar(const Graph& g) {
    g.require_tree();
    // Vertices surviving leaf deletion; a tree's non-leaf set induces a subtree,
    // so it is a path iff no survivor keeps three surviving neighbors.
    std::vector<bool> core(static_cast<size_t>(g.order()), false);
    int core_count = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) >= 2) {
            core[static_cast<size_t>(v)] = true;
            ++core_count;
        }
    }
    if (core_count <= 1)
        return true;
    for (int v = 0; v < g.order(); ++v) {
        if (!core[static_cast<size_t>(v)])
            continue;
        int inner = 0;
        for (int w : g.neighbors(v))
            if (core[static_cast<size_t>(w)])
                ++inner;
        if (inner > 2)
            return false;
    }
    return true;
}

namespace {

// The degree->=2 vertices of a double broom induce a path c_1..c_l (l >= 2)
// whose interior vertices have no pendant neighbors. Returns the two path end
// vertices, or nullopt.
std::optional<std::pair<int, int>> double_broom_core_ends(const Graph& g) {
    std::vector<int> core;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 2)
            core.push_back(v);
    if (core.size() < 2)
        return std::nullopt;
    std::vector<bool> in_core(static_cast<size_t>(g.order()), false);
    for (int v : core)
        in_core[static_cast<size_t>(v)] = true;
    std::vector<int> ends;
    for (int v : core) {
        int inner = 0;
        for (int w : g.neighbors(v))
            if (in_core[static_cast<size_t>(w)])
                ++inner;
        if (inner > 2)
            return std::nullopt;
        if (inner == 1)
            ends.push_back(v);
        if (inner == 2 && g.degree(v) != 2)
            return std::nullopt; // interior vertex carries a pendant edge
    }
    if (ends.size() != 2)
        return std::nullopt;
    return std::make_pair(ends[0], ends[1]);
}

} // namespace

bool is_double_broom(const Graph& g) {
    g.require_tree();
    return double_broom_core_ends(g).has_value();
}

std::optional<std::pair<int, int>> double_broom_params(const Graph& g) {
    g.require_tree();
    auto ends = double_broom_core_ends(g);
    if (!ends)
        return std::nullopt;
    auto leaves_at = [&](int v) {
        int k = 0;
        for (int w : g.neighbors(v))
            if (g.degree(w) == 1)
                ++k;
        return k;
    };
    int t1 = leaves_at(ends->first);
    int t2 = leaves_at(ends->second);
    if (t1 > t2)
        std::swap(t1, t2);
    return std::make_pair(t1, t2);
}

ClassFlags class_membership(const Graph& g) {
    ClassFlags flags;
    flags.non_caterpillar = !is_caterpillar(g);
    flags.non_starlike = !is_starlike(g);
    flags.pendant_count = pendant_count(g);
    flags.double_broom = is_double_broom(g);
    return flags;
}

namespace {

int to_int(std::string_view s, std::string_view key) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw error(errc::parse, "family spec: bad integer '" + std::string(s) + "' for " + std::string(key));
    return value;
}

} // namespace

FamilySpec parse_family_spec(std::string_view text) {
    size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw error(errc::parse, "family spec: expected 'Tag:key=value,...', got '" + std::string(text) + "'");
    std::string_view tag = text.substr(0, colon);
    FamilySpec spec;
    if (tag == "Path")
        spec.tag = FamilySpec::Tag::path;
    else if (tag == "Star")
        spec.tag = FamilySpec::Tag::star;
    else if (tag == "B")
        spec.tag = FamilySpec::Tag::broom;
    else if (tag == "S")
        spec.tag = FamilySpec::Tag::spider;
    else if (tag == "T")
        spec.tag = FamilySpec::Tag::double_broom;
    else if (tag == "P")
        spec.tag = FamilySpec::Tag::p_tree;
    else
        throw error(errc::parse, "family spec: unknown family '" + std::string(tag) +
                                     "' (expected Path, Star, B, S, T or P)");

    bool seen_n = false;
    std::vector<int>* open_list = nullptr; // list key consuming bare integers
    std::string_view rest = text.substr(colon + 1);
    size_t pos = 0;
    while (pos <= rest.size()) {
        size_t comma = rest.find(',', pos);
        if (comma == std::string_view::npos)
            comma = rest.size();
        std::string_view item = rest.substr(pos, comma - pos);
        pos = comma + 1;
        if (item.empty()) {
            if (pos > rest.size())
                break;
            throw error(errc::parse, "family spec: empty item in '" + std::string(text) + "'");
        }
        size_t eq = item.find('=');
        if (eq == std::string_view::npos) {
            if (!open_list)
                throw error(errc::parse, "family spec: stray value '" + std::string(item) + "'");
            open_list->push_back(to_int(item, "list"));
            continue;
        }
        std::string_view key = item.substr(0, eq);
        std::string_view value = item.substr(eq + 1);
        open_list = nullptr;
        if (key == "n") {
            spec.n = to_int(value, key);
            seen_n = true;
        } else if (key == "n0" && spec.tag == FamilySpec::Tag::broom) {
            spec.n0 = to_int(value, key);
        } else if (key == "parts" && spec.tag == FamilySpec::Tag::broom) {
            spec.parts.push_back(to_int(value, key));
            open_list = &spec.parts;
        } else if (key == "legs" && spec.tag == FamilySpec::Tag::spider) {
            spec.parts.push_back(to_int(value, key));
            open_list = &spec.parts;
        } else if (key == "t1" && spec.tag == FamilySpec::Tag::double_broom) {
            spec.t1 = to_int(value, key);
        } else if (key == "t2" && spec.tag == FamilySpec::Tag::double_broom) {
            spec.t2 = to_int(value, key);
        } else if (key == "i" && spec.tag == FamilySpec::Tag::p_tree) {
            spec.i = to_int(value, key);
        } else if (key == "j" && spec.tag == FamilySpec::Tag::p_tree) {
            spec.j = to_int(value, key);
        } else {
            throw error(errc::parse, "family spec: unknown key '" + std::string(key) + "' for family " +
                                         std::string(tag));
        }
        if (pos > rest.size())
            break;
    }
    if (!seen_n)
        throw error(errc::parse, "family spec: missing n");
    switch (spec.tag) {
    case FamilySpec::Tag::broom:
    case FamilySpec::Tag::spider:
        if (spec.parts.empty())
            throw error(errc::parse, std::string("family spec: missing ") +
                                         (spec.tag == FamilySpec::Tag::broom ? "parts" : "legs"));
        break;
    case FamilySpec::Tag::double_broom:
        if (spec.t1 == 0 || spec.t2 == 0)
            throw error(errc::parse, "family spec: T requires t1 and t2");
        break;
    case FamilySpec::Tag::p_tree:
        if (spec.i == 0 || spec.j == 0)
            throw error(errc::parse, "family spec: P requires i and j");
        break;
    default:
        break;
    }
    return spec;
}

Graph build_family(const FamilySpec& spec) {
    switch (spec.tag) {
    case FamilySpec::Tag::path: return make_path(spec.n);
    case FamilySpec::Tag::star: return make_star(spec.n);
    case FamilySpec::Tag::broom: return make_broom(spec.n, spec.n0, spec.parts);
    case FamilySpec::Tag::spider: return make_spider(spec.n, spec.parts);
    case FamilySpec::Tag::double_broom: return make_double_broom(spec.n, spec.t1 + spec.t2, spec.t1, spec.t2);
    case FamilySpec::Tag::p_tree: return make_p_tree(spec.n, spec.i, spec.j);
    }
    throw error(errc::internal, "unhandled family tag");
}

} // namespace spectragraft

#ifndef MFDS_GRAPH_HPP
#define MFDS_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mfds {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Set of vertex ids over a fixed universe [0, n). O(1) membership,
/// iteration in ascending id order.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

    int universe() const { return n_; }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(int v) const {
        return (bits_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void add(int v) {
        uint64_t& w = bits_[static_cast<size_t>(v) >> 6];
        uint64_t mask = uint64_t{1} << (v & 63);
        if (!(w & mask)) {
            w |= mask;
            ++count_;
        }
    }

    void remove(int v) {
        uint64_t& w = bits_[static_cast<size_t>(v) >> 6];
        uint64_t mask = uint64_t{1} << (v & 63);
        if (w & mask) {
            w &= ~mask;
            --count_;
        }
    }

    void clear() {
        std::fill(bits_.begin(), bits_.end(), 0);
        count_ = 0;
    }

    template <class F>
    void for_each(F&& fn) const {
        for (size_t wi = 0; wi < bits_.size(); ++wi) {
            uint64_t w = bits_[wi];
            while (w) {
                int bit = std::countr_zero(w);
                fn(static_cast<int>(wi * 64 + bit));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count_);
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    friend VertexSet set_union(const VertexSet& a, const VertexSet& b) {
        VertexSet r(std::max(a.n_, b.n_));
        for (size_t i = 0; i < r.bits_.size(); ++i) {
            uint64_t w = 0;
            if (i < a.bits_.size()) w |= a.bits_[i];
            if (i < b.bits_.size()) w |= b.bits_[i];
            r.bits_[i] = w;
            r.count_ += std::popcount(w);
        }
        return r;
    }

private:
    int n_ = 0;
    int count_ = 0;
    std::vector<uint64_t> bits_;
};

/// Immutable undirected simple graph in CSR adjacency form.
/// Vertex ids are dense in [0, n); original input labels are retained
/// for reporting.
class Graph {
public:
    Graph() = default;

    /// Builds a normalized graph: self-loops dropped, duplicate and
    /// reversed-duplicate edges merged, neighbor lists sorted.
    static Graph from_edge_pairs(int n, std::vector<std::pair<int, int>> edges,
                                 std::vector<long long> labels = {}) {
        Graph g;
        g.n_ = n;
        for (auto& [u, v] : edges) {
            if (u == v) continue;
            if (u > v) std::swap(u, v);
        }
        std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        g.m_ = static_cast<long long>(edges.size());

        std::vector<int> deg(n, 0);
        for (const auto& [u, v] : edges) {
            ++deg[u];
            ++deg[v];
        }
        g.offsets_.assign(n + 1, 0);
        for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
        g.neighbors_.resize(g.offsets_[n]);
        std::vector<int> pos(g.offsets_.begin(), g.offsets_.end() - 1);
        for (const auto& [u, v] : edges) {
            g.neighbors_[pos[u]++] = v;
            g.neighbors_[pos[v]++] = u;
        }
        for (int v = 0; v < n; ++v)
            std::sort(g.neighbors_.begin() + g.offsets_[v], g.neighbors_.begin() + g.offsets_[v + 1]);

        if (labels.empty()) {
            g.labels_.resize(n);
            std::iota(g.labels_.begin(), g.labels_.end(), 0);
        } else {
            g.labels_ = std::move(labels);
        }
        return g;
    }

    int n() const { return n_; }
    long long m() const { return m_; }

    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

    std::span<const int> neighbors(int v) const {
        return {neighbors_.data() + offsets_[v],
                static_cast<size_t>(offsets_[v + 1] - offsets_[v])};
    }

    bool adjacent(int u, int v) const {
        if (degree(u) > degree(v)) std::swap(u, v);
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    long long label(int v) const { return labels_[v]; }
    const std::vector<long long>& labels() const { return labels_; }

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<int> offsets_{0};
    std::vector<int> neighbors_;
    std::vector<long long> labels_;
};

namespace detail {

inline Graph build_from_labeled_edges(std::vector<std::pair<long long, long long>>& raw) {
    std::vector<long long> labels;
    labels.reserve(raw.size() * 2);
    for (const auto& [u, v] : raw) {
        labels.push_back(u);
        labels.push_back(v);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto index_of = [&](long long x) {
        return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), x) - labels.begin());
    };
    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw.size());
    for (const auto& [u, v] : raw) edges.emplace_back(index_of(u), index_of(v));
    int n = static_cast<int>(labels.size());
    return Graph::from_edge_pairs(n, std::move(edges), std::move(labels));
}

}  // namespace detail

/// Parses whitespace-separated "u v" lines. Lines starting with '%' or '#'
/// are comments; trailing tokens (e.g. weights) are ignored. Vertex labels
/// are remapped to dense 0-based ids; the original labels are retained.
inline Graph load_edge_list(std::istream& in) {
    std::vector<std::pair<long long, long long>> raw;
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '%' || line[start] == '#') continue;
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v))
            throw ParseError("edge list: malformed line " + std::to_string(line_no) + ": '" + line + "'");
        raw.emplace_back(u, v);
    }
    if (raw.empty()) throw ParseError("edge list: no edges found (empty input)");
    return detail::build_from_labeled_edges(raw);
}

/// Parses a MatrixMarket coordinate file (pattern, real or integer; symmetric
/// or general). Weights are ignored; only the structure is kept.
inline Graph load_matrix_market(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("matrix market: empty input");
    std::istringstream hs(line);
    std::string banner, object, format, field, symmetry;
    hs >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%MatrixMarket") throw ParseError("matrix market: missing %%MatrixMarket banner");
    if (format != "coordinate")
        throw ParseError("matrix market: unsupported format '" + format + "' (only coordinate is supported)");

    long long line_no = 1;
    long long rows = 0, cols = 0, nnz = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '%') continue;
        std::istringstream ls(line);
        if (!(ls >> rows >> cols >> nnz))
            throw ParseError("matrix market: malformed size line " + std::to_string(line_no));
        break;
    }
    if (rows <= 0) throw ParseError("matrix market: missing or invalid size line");

    int n = static_cast<int>(std::max(rows, cols));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(nnz));
    long long seen = 0;
    while (seen < nnz && std::getline(in, line)) {
        ++line_no;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '%') continue;
        std::istringstream ls(line);
        long long i, j;
        if (!(ls >> i >> j))
            throw ParseError("matrix market: malformed entry at line " + std::to_string(line_no));
        if (i < 1 || i > n || j < 1 || j > n)
            throw ParseError("matrix market: index out of range at line " + std::to_string(line_no));
        edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
        ++seen;
    }
    if (seen < nnz) throw ParseError("matrix market: fewer entries than declared");

    std::vector<long long> labels(n);
    std::iota(labels.begin(), labels.end(), 1);  // MatrixMarket is 1-based
    return Graph::from_edge_pairs(n, std::move(edges), std::move(labels));
}

/// All u != v with dist(v, u) <= 2; v itself is excluded.
inline VertexSet two_hop_neighbors(const Graph& g, int v) {
    VertexSet out(g.n());
    for (int w : g.neighbors(v)) {
        out.add(w);
        for (int x : g.neighbors(w))
            if (x != v) out.add(x);
    }
    return out;
}

/// |E(S)| for the induced subgraph G[S].
inline long long edge_count(const Graph& g, const VertexSet& s) {
    long long twice = 0;
    s.for_each([&](int v) {
        for (int w : g.neighbors(v))
            if (s.contains(w)) ++twice;
    });
    return twice / 2;
}

/// dist_{G[restriction]}(u, v) <= 2: equal, adjacent, or a common neighbor
/// inside the restriction.
inline bool dist_leq_two(const Graph& g, const VertexSet& restriction, int u, int v) {
    if (u == v) return true;
    if (g.adjacent(u, v)) return true;
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            if (restriction.contains(a[i])) return true;
            ++i;
            ++j;
        }
    }
    return false;
}

/// diam(G[S]) <= 2. Every non-adjacent pair must share a neighbor inside S,
/// which also implies G[S] is connected. Empty sets and singletons qualify.
inline bool diameter_at_most_two(const Graph& g, const VertexSet& s) {
    if (s.size() <= 1) return true;
    std::vector<int> members = s.to_vector();
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            if (!dist_leq_two(g, s, members[i], members[j])) return false;
    return true;
}

/// Induced subgraph on S plus the local-to-parent id map. Local labels are
/// inherited from the parent, so original input labels survive nesting.
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> to_parent = s.to_vector();
    std::vector<int> local(g.n(), -1);
    for (size_t i = 0; i < to_parent.size(); ++i) local[to_parent[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    std::vector<long long> labels(to_parent.size());
    for (size_t i = 0; i < to_parent.size(); ++i) {
        int v = to_parent[i];
        labels[i] = g.label(v);
        for (int w : g.neighbors(v))
            if (w > v && local[w] >= 0) edges.emplace_back(static_cast<int>(i), local[w]);
    }
    return {Graph::from_edge_pairs(static_cast<int>(to_parent.size()), std::move(edges), std::move(labels)),
            std::move(to_parent)};
}

}  // namespace mfds

#endif  // MFDS_GRAPH_HPP

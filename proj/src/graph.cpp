#include "dgc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace dgc {

// ---- VertexSet ---------------------------------------------------------------

VertexSet::VertexSet(std::vector<int> ids)
    : ids_(std::move(ids))
{
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(int lo, int hi)
{
    std::vector<int> ids;
    for (int v = lo; v <= hi; ++v)
        ids.push_back(v);
    return VertexSet(std::move(ids));
}

bool VertexSet::contains(int v) const
{
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::add(int v)
{
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v)
        ids_.insert(it, v);
}

void VertexSet::remove(int v)
{
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v)
        ids_.erase(it);
}

// ---- Graph -------------------------------------------------------------------

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges)
{
    if (n < 0)
        throw PreconditionError("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n) + 1, {});
    for (auto [u, v] : edges) {
        if (u == v)
            throw PreconditionError("self-loop at vertex " + std::to_string(u));
        if (u < 1 || u > n || v < 1 || v > n)
            throw PreconditionError(
                "edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    g.m_ = 0;
    g.delta_ = 0;
    for (int v = 1; v <= n; ++v) {
        auto& a = g.adj_[static_cast<std::size_t>(v)];
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        g.m_ += static_cast<int>(a.size());
        g.delta_ = std::max(g.delta_, static_cast<int>(a.size()));
    }
    g.m_ /= 2;
    return g;
}

void Graph::check_vertex(int v) const
{
    if (v < 1 || v > n_)
        throw PreconditionError("unknown vertex " + std::to_string(v));
}

bool Graph::adjacent(int u, int v) const
{
    const auto& a = adjacency(u);
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<std::size_t>(m_));
    for (int u = 1; u <= n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v)
                es.emplace_back(u, v);
    return es;
}

Graph Graph::induced(const std::vector<int>& verts, std::vector<int>* old_of_new) const
{
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> new_of_old(static_cast<std::size_t>(n_) + 1, 0);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        check_vertex(sorted[i]);
        new_of_old[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i) + 1;
    }
    std::vector<std::pair<int, int>> es;
    for (int u : sorted)
        for (int v : adjacency(u))
            if (u < v && new_of_old[static_cast<std::size_t>(v)] != 0)
                es.emplace_back(new_of_old[static_cast<std::size_t>(u)],
                    new_of_old[static_cast<std::size_t>(v)]);
    if (old_of_new) {
        old_of_new->assign(sorted.size() + 1, 0);
        for (std::size_t i = 0; i < sorted.size(); ++i)
            (*old_of_new)[i + 1] = sorted[i];
    }
    return from_edges(static_cast<int>(sorted.size()), es);
}

// ---- PartialColoring ---------------------------------------------------------

int PartialColoring::colored_count() const
{
    int k = 0;
    for (std::size_t v = 1; v < color.size(); ++v)
        if (color[v] != 0)
            ++k;
    return k;
}

bool PartialColoring::total(int n) const
{
    for (int v = 1; v <= n; ++v)
        if (color[static_cast<std::size_t>(v)] == 0)
            return false;
    return true;
}

int PartialColoring::max_color() const
{
    int mx = 0;
    for (std::size_t v = 1; v < color.size(); ++v)
        mx = std::max(mx, color[v]);
    return mx;
}

// ---- I/O ---------------------------------------------------------------------

Graph load_graph(std::istream& in)
{
    std::string line;
    int lineno = 0;
    int n = -1;
    long m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ls(line);
        if (n < 0) {
            char p;
            ls >> p >> n >> m;
            if (!ls || p != 'p' || n < 0 || m < 0)
                throw ParseError("bad header at line " + std::to_string(lineno), lineno);
            continue;
        }
        int u, v;
        ls >> u >> v;
        if (!ls)
            throw ParseError("bad edge line " + std::to_string(lineno) + ": '" + line + "'", lineno);
        if (u == v)
            throw ParseError(
                "self-loop at line " + std::to_string(lineno) + " (vertex " + std::to_string(u) + ")",
                lineno);
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError("vertex id out of range 1.." + std::to_string(n) + " at line "
                    + std::to_string(lineno),
                lineno);
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (n < 0)
        throw ParseError("missing 'p <n> <m>' header", lineno);
    if (m >= 0 && static_cast<long>(edges.size()) != m) {
        // Duplicates are collapsed later; only complain when lines are missing.
        if (static_cast<long>(edges.size()) < m)
            throw ParseError("header announces " + std::to_string(m) + " edges but "
                    + std::to_string(edges.size()) + " found",
                lineno);
    }
    return Graph::from_edges(n, edges);
}

void save_graph(const Graph& g, std::ostream& out)
{
    auto es = g.edges();
    out << "p " << g.n() << ' ' << es.size() << '\n';
    for (auto [u, v] : es)
        out << u << ' ' << v << '\n';
}

std::string graph_to_json(const Graph& g)
{
    nlohmann::ordered_json j;
    j["n"] = g.n();
    auto es = g.edges();
    auto& je = j["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : es)
        je.push_back({ u, v });
    return j.dump(2) + "\n";
}

Graph graph_from_json(const std::string& text)
{
    auto j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> es;
    for (const auto& e : j.at("edges"))
        es.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph::from_edges(n, es);
}

static bool has_suffix(const std::string& s, const std::string& suf)
{
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

Graph load_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw PreconditionError("cannot open graph file: " + path);
    if (has_suffix(path, ".json")) {
        std::ostringstream ss;
        ss << in.rdbuf();
        return graph_from_json(ss.str());
    }
    return load_graph(in);
}

void save_graph_file(const Graph& g, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw PreconditionError("cannot write graph file: " + path);
    if (has_suffix(path, ".json"))
        out << graph_to_json(g);
    else
        save_graph(g, out);
}

// ---- primitives --------------------------------------------------------------

int k_delta(int delta)
{
    if (delta < 2)
        throw PreconditionError("k_delta requires delta >= 2");
    int k = 0;
    while (static_cast<long long>(k + 2) * (k + 3) <= delta)
        ++k;
    return k;
}

std::int64_t non_adjacent_pairs_in_neighborhood(
    const Graph& g, int v, const VertexSet* restrict_to)
{
    g.check_vertex(v);
    std::vector<int> nbrs;
    for (int u : g.neighbors(v))
        if (!restrict_to || restrict_to->contains(u))
            nbrs.push_back(u);
    std::int64_t adjacent_pairs = 0;
    for (int u : nbrs) {
        const auto& a = g.neighbors(u);
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < nbrs.size()) {
            if (a[i] < nbrs[j])
                ++i;
            else if (a[i] > nbrs[j])
                ++j;
            else {
                ++adjacent_pairs;
                ++i;
                ++j;
            }
        }
    }
    adjacent_pairs /= 2;
    std::int64_t total = static_cast<std::int64_t>(nbrs.size()) * (static_cast<std::int64_t>(nbrs.size()) - 1) / 2;
    return total - adjacent_pairs;
}

Matching greedy_complement_matching(const Graph& g, const VertexSet& s)
{
    for (int v : s)
        g.check_vertex(v);
    Matching m;
    std::vector<int> pool(s.begin(), s.end());
    std::vector<bool> used(pool.size(), false);
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (used[i])
            continue;
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            if (used[j])
                continue;
            if (!g.adjacent(pool[i], pool[j])) {
                used[i] = used[j] = true;
                m.pairs.emplace_back(pool[i], pool[j]);
                break;
            }
        }
    }
    return m;
}

namespace {

    // Branch and bound for a clique of size > threshold within one induced
    // subgraph. Greedy-coloring upper bound prunes; `nodes` is the shared
    // branch budget.
    struct CliqueSearch {
        const Graph& g;
        int target; // want a clique of size >= target
        std::uint64_t budget;
        std::uint64_t nodes = 0;
        std::vector<int> best {};
        std::vector<int> current {};

        bool expand(std::vector<int>& cand)
        {
            if (++nodes > budget)
                throw BudgetExceeded("clique search budget exceeded");
            if (static_cast<int>(current.size()) >= target) {
                best = current;
                return true;
            }
            if (cand.empty())
                return false;
            // Greedy coloring bound on the candidate set.
            std::vector<int> color(cand.size(), 0);
            int num_colors = 0;
            for (std::size_t i = 0; i < cand.size(); ++i) {
                std::vector<bool> taken(cand.size() + 2, false);
                for (std::size_t j = 0; j < i; ++j)
                    if (g.adjacent(cand[i], cand[j]))
                        taken[static_cast<std::size_t>(color[j])] = true;
                int c = 1;
                while (taken[static_cast<std::size_t>(c)])
                    ++c;
                color[i] = c;
                num_colors = std::max(num_colors, c);
            }
            if (static_cast<int>(current.size()) + num_colors < target)
                return false;
            for (std::size_t i = 0; i < cand.size(); ++i) {
                if (static_cast<int>(current.size() + cand.size() - i) < target)
                    return false;
                int v = cand[i];
                std::vector<int> next;
                for (std::size_t j = i + 1; j < cand.size(); ++j)
                    if (g.adjacent(v, cand[j]))
                        next.push_back(cand[j]);
                current.push_back(v);
                if (expand(next))
                    return true;
                current.pop_back();
            }
            return false;
        }
    };

} // namespace

std::optional<std::pair<int, VertexSet>> find_clique_above(
    const Graph& g, int threshold, std::uint64_t budget_per_neighborhood)
{
    if (threshold < 1)
        throw PreconditionError("find_clique_above requires threshold >= 1");
    for (int v = 1; v <= g.n(); ++v) {
        // Any clique of size >= 2 lies inside the closed neighborhood of each
        // of its members, so scanning closed neighborhoods is complete.
        if (g.degree(v) < threshold)
            continue;
        std::vector<int> cand;
        for (int u : g.neighbors(v))
            if (g.degree(u) >= threshold)
                cand.push_back(u);
        if (static_cast<int>(cand.size()) + 1 <= threshold)
            continue;
        CliqueSearch search { .g = g, .target = threshold + 1, .budget = budget_per_neighborhood };
        search.current.push_back(v);
        try {
            if (search.expand(cand))
                return std::make_pair(v, VertexSet(search.best));
        } catch (const BudgetExceeded&) {
            throw BudgetExceeded(
                "clique search budget exceeded in the closed neighborhood of vertex "
                    + std::to_string(v),
                v);
        }
    }
    return std::nullopt;
}

bool is_proper(const Graph& g, const PartialColoring& coloring)
{
    return !find_conflict_edge(g, coloring).has_value();
}

std::optional<std::pair<int, int>> find_conflict_edge(const Graph& g, const PartialColoring& c)
{
    for (int u = 1; u <= g.n(); ++u) {
        if (!c.colored(u))
            continue;
        for (int v : g.neighbors(u))
            if (v > u && c.colored(v) && c.at(u) == c.at(v))
                return std::make_pair(u, v);
    }
    return std::nullopt;
}

bool is_clique(const Graph& g, const std::vector<int>& verts)
{
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!g.adjacent(verts[i], verts[j]))
                return false;
    return true;
}

bool is_stable(const Graph& g, const std::vector<int>& verts)
{
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j]))
                return false;
    return true;
}

} // namespace dgc

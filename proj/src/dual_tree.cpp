#include "chow/dual_tree.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace chow {

namespace {

using Adjacency = std::map<std::string, std::vector<std::string>>;

Adjacency adjacency(const DualTree& t) {
    Adjacency adj;
    for (const auto& v : t.vertices) adj[v];
    for (const auto& [a, b] : t.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

std::map<std::string, int> input_index(const DualTree& t) {
    std::map<std::string, int> idx;
    for (std::size_t i = 0; i < t.vertices.size(); ++i)
        idx[t.vertices[i]] = static_cast<int>(i);
    return idx;
}

bool shortlex_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

/* AHU encoding of the subtree at v looking away from parent. */
std::string encode_rooted(const std::string& v, const std::string& parent, const Adjacency& adj) {
    std::vector<std::string> child_codes;
    for (const auto& w : adj.at(v)) {
        if (w == parent) continue;
        child_codes.push_back(encode_rooted(w, v, adj));
    }
    std::sort(child_codes.begin(), child_codes.end(), shortlex_less);
    std::string out = "(";
    for (const auto& c : child_codes) out += c;
    out += ")";
    return out;
}

/* One or two central vertices found by stripping leaves. */
std::vector<std::string> tree_centers(const DualTree& t) {
    Adjacency adj = adjacency(t);
    std::set<std::string> alive(t.vertices.begin(), t.vertices.end());
    while (alive.size() > 2) {
        std::vector<std::string> leaves;
        for (const auto& v : alive) {
            int d = 0;
            for (const auto& w : adj.at(v))
                if (alive.count(w)) ++d;
            if (d <= 1) leaves.push_back(v);
        }
        for (const auto& v : leaves) alive.erase(v);
    }
    /* report centers in input order */
    std::vector<std::string> out;
    for (const auto& v : t.vertices)
        if (alive.count(v)) out.push_back(v);
    return out;
}

/* Canonical root: the single center, or the center whose half-encoding is
 * shortlex-smaller (input order breaking ties). */
std::string canonical_root(const DualTree& t, const Adjacency& adj) {
    std::vector<std::string> centers = tree_centers(t);
    if (centers.size() == 1) return centers[0];
    const std::string& c1 = centers[0];
    const std::string& c2 = centers[1];
    std::string e1 = encode_rooted(c1, c2, adj);
    std::string e2 = encode_rooted(c2, c1, adj);
    if (e1 == e2) return c1;
    return shortlex_less(e1, e2) ? c1 : c2;
}

void order_dfs(const std::string& v, const std::string& parent, const Adjacency& adj,
               const std::map<std::string, int>& idx, std::vector<std::string>& out) {
    out.push_back(v);
    std::vector<std::pair<std::string, std::string>> children;  // (encoding, vertex)
    for (const auto& w : adj.at(v)) {
        if (w == parent) continue;
        children.emplace_back(encode_rooted(w, v, adj), w);
    }
    std::sort(children.begin(), children.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return shortlex_less(a.first, b.first);
        return idx.at(a.second) < idx.at(b.second);
    });
    for (const auto& [code, w] : children) order_dfs(w, v, adj, idx, out);
}

std::string canonical_vertex_name(int rank) {
    if (rank < 26) return std::string(1, static_cast<char>('a' + rank));
    return "v" + std::to_string(rank);
}

}  // namespace

bool TreeAutomorphism::is_identity() const {
    for (const auto& [v, w] : vertex_map)
        if (v != w) return false;
    return true;
}

std::string TreeAutomorphism::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [v, w] : vertex_map) {
        if (!first) os << ", ";
        first = false;
        os << v << ":" << w;
    }
    os << "}";
    return os.str();
}

TreeAutomorphism compose(const TreeAutomorphism& g, const TreeAutomorphism& h) {
    TreeAutomorphism out;
    for (const auto& [v, w] : h.vertex_map) {
        auto it = g.vertex_map.find(w);
        if (it == g.vertex_map.end())
            throw DomainError("compose: vertex '" + w + "' missing from outer map");
        out.vertex_map[v] = it->second;
    }
    return out;
}

TreeAutomorphism inverse_of(const TreeAutomorphism& g) {
    TreeAutomorphism out;
    for (const auto& [v, w] : g.vertex_map) {
        if (out.vertex_map.count(w))
            throw DomainError("inverse_of: map is not injective");
        out.vertex_map[w] = v;
    }
    return out;
}

void validate_tree(const DualTree& t) {
    if (t.vertices.empty()) throw DomainError("tree: no vertices");
    std::set<std::string> seen;
    for (const auto& v : t.vertices) {
        if (v.empty()) throw DomainError("tree: empty vertex id");
        if (!seen.insert(v).second) throw DomainError("tree: duplicate vertex '" + v + "'");
    }
    std::set<std::pair<std::string, std::string>> edge_set;
    for (const auto& [a, b] : t.edges) {
        if (!seen.count(a) || !seen.count(b))
            throw DomainError("tree: edge endpoint not a vertex");
        if (a == b) throw DomainError("tree: self-loop at '" + a + "'");
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        if (!edge_set.insert(key).second)
            throw DomainError("tree: duplicate edge (" + a + ", " + b + ")");
    }
    if (t.edges.size() != t.vertices.size() - 1)
        throw DomainError("tree: edge count must be vertex count - 1");
    /* connectivity */
    Adjacency adj = adjacency(t);
    std::set<std::string> visited;
    std::queue<std::string> bfs;
    bfs.push(t.vertices[0]);
    visited.insert(t.vertices[0]);
    while (!bfs.empty()) {
        std::string v = bfs.front();
        bfs.pop();
        for (const auto& w : adj.at(v))
            if (visited.insert(w).second) bfs.push(w);
    }
    if (visited.size() != t.vertices.size()) throw DomainError("tree: not connected");
    /* orientation: exactly the degree-2 vertices, values = their neighbors */
    for (const auto& v : t.vertices) {
        std::size_t d = adj.at(v).size();
        if (d == 2) {
            auto it = t.orientation.find(v);
            if (it == t.orientation.end())
                throw DomainError("tree: missing orientation for degree-2 vertex '" + v + "'");
            const auto& [n0, ninf] = it->second;
            const auto& nb = adj.at(v);
            bool ok = (n0 == nb[0] && ninf == nb[1]) || (n0 == nb[1] && ninf == nb[0]);
            if (!ok || n0 == ninf)
                throw DomainError("tree: orientation of '" + v + "' must list its two neighbors");
        }
    }
    for (const auto& [v, pair] : t.orientation)
        if (adj.at(v).size() != 2)
            throw DomainError("tree: orientation on non-degree-2 vertex '" + v + "'");
}

DualTree make_tree(std::vector<std::string> vertices,
                   std::vector<std::pair<std::string, std::string>> edges,
                   std::map<std::string, std::pair<std::string, std::string>> orientation) {
    DualTree t;
    t.vertices = std::move(vertices);
    t.edges = std::move(edges);
    t.orientation = std::move(orientation);
    /* fill default orientations from canonical ranks before validating */
    DualTree bare = t;
    bare.orientation.clear();
    Adjacency adj = adjacency(bare);
    std::map<std::string, int> rank;
    {
        /* canonical_order needs a structurally valid tree; validate the bare
         * structure first by running the checks that don't involve
         * orientation */
        DualTree probe = bare;
        for (const auto& v : probe.vertices)
            if (adj.count(v) && adj.at(v).size() == 2 && !t.orientation.count(v))
                probe.orientation[v] = {adj.at(v)[0], adj.at(v)[1]};
            else if (adj.count(v) && adj.at(v).size() == 2)
                probe.orientation[v] = t.orientation.at(v);
        validate_tree(probe);
        rank = canonical_rank(probe);
    }
    for (const auto& v : t.vertices) {
        if (adj.at(v).size() != 2 || t.orientation.count(v)) continue;
        const auto& nb = adj.at(v);
        if (rank.at(nb[0]) < rank.at(nb[1]))
            t.orientation[v] = {nb[0], nb[1]};
        else
            t.orientation[v] = {nb[1], nb[0]};
    }
    validate_tree(t);
    return t;
}

int degree(const DualTree& t, const std::string& v) {
    int d = 0;
    for (const auto& [a, b] : t.edges)
        if (a == v || b == v) ++d;
    return d;
}

std::vector<std::string> neighbors(const DualTree& t, const std::string& v) {
    std::vector<std::string> out;
    for (const auto& [a, b] : t.edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    return out;
}

int max_degree(const DualTree& t) {
    int m = 0;
    for (const auto& v : t.vertices) m = std::max(m, degree(t, v));
    return m;
}

bool has_edge(const DualTree& t, const std::string& a, const std::string& b) {
    for (const auto& [x, y] : t.edges)
        if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
}

std::string canonical_encoding(const DualTree& t) {
    Adjacency adj = adjacency(t);
    std::vector<std::string> centers = tree_centers(t);
    if (centers.size() == 1) return encode_rooted(centers[0], "", adj);
    std::string e1 = encode_rooted(centers[0], centers[1], adj);
    std::string e2 = encode_rooted(centers[1], centers[0], adj);
    if (shortlex_less(e2, e1)) std::swap(e1, e2);
    return "[" + e1 + e2 + "]";
}

std::vector<std::string> canonical_order(const DualTree& t) {
    Adjacency adj = adjacency(t);
    std::map<std::string, int> idx = input_index(t);
    std::vector<std::string> out;
    order_dfs(canonical_root(t, adj), "", adj, idx, out);
    return out;
}

std::map<std::string, int> canonical_rank(const DualTree& t) {
    std::map<std::string, int> rank;
    std::vector<std::string> order = canonical_order(t);
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
    return rank;
}

DualTree canonical_representative(const DualTree& t) {
    std::vector<std::string> order = canonical_order(t);
    std::map<std::string, std::string> rename;
    std::vector<std::string> new_vertices;
    for (std::size_t i = 0; i < order.size(); ++i) {
        rename[order[i]] = canonical_vertex_name(static_cast<int>(i));
        new_vertices.push_back(rename[order[i]]);
    }
    std::map<std::string, int> rank = canonical_rank(t);
    std::vector<std::pair<std::string, std::string>> new_edges;
    for (const auto& [a, b] : t.edges) {
        if (rank.at(a) < rank.at(b))
            new_edges.emplace_back(rename.at(a), rename.at(b));
        else
            new_edges.emplace_back(rename.at(b), rename.at(a));
    }
    std::sort(new_edges.begin(), new_edges.end());
    return make_tree(new_vertices, new_edges);
}

std::vector<DualTree> enumerate_trees(int max_edges, int max_multiplicity) {
    if (max_edges < 0 || max_edges > 8)
        throw DomainError("enumerate_trees: max_edges must be between 0 and 8");
    if (max_multiplicity != 3 && max_multiplicity != 4)
        throw DomainError("enumerate_trees: max_multiplicity must be 3 or 4");
    std::vector<DualTree> out;
    std::vector<DualTree> level{make_tree({"a"}, {})};
    out.push_back(level[0]);
    for (int e = 1; e <= max_edges; ++e) {
        std::map<std::string, DualTree> next;  // encoding -> representative
        for (const auto& t : level) {
            for (const auto& v : t.vertices) {
                if (degree(t, v) + 1 > max_multiplicity) continue;
                DualTree grown;
                grown.vertices = t.vertices;
                std::string fresh = canonical_vertex_name(static_cast<int>(t.vertices.size()));
                grown.vertices.push_back(fresh);
                grown.edges = t.edges;
                grown.edges.emplace_back(v, fresh);
                DualTree rep = canonical_representative(
                    make_tree(grown.vertices, grown.edges));
                next.try_emplace(canonical_encoding(rep), rep);
            }
        }
        level.clear();
        std::vector<std::string> codes;
        for (const auto& [code, rep] : next) codes.push_back(code);
        std::sort(codes.begin(), codes.end(), shortlex_less);
        for (const auto& code : codes) level.push_back(next.at(code));
        for (const auto& t : level) out.push_back(t);
    }
    return out;
}

namespace {

void automorphism_search(const DualTree& t, std::size_t pos, std::vector<int>& image,
                         std::vector<bool>& used, const std::vector<std::vector<bool>>& adj_m,
                         const std::vector<int>& deg, std::vector<TreeAutomorphism>& out) {
    const std::size_t n = t.vertices.size();
    if (pos == n) {
        TreeAutomorphism g;
        for (std::size_t i = 0; i < n; ++i) g.vertex_map[t.vertices[i]] = t.vertices[image[i]];
        out.push_back(g);
        return;
    }
    for (std::size_t cand = 0; cand < n; ++cand) {
        if (used[cand] || deg[pos] != deg[cand]) continue;
        bool ok = true;
        for (std::size_t prev = 0; prev < pos && ok; ++prev)
            ok = (adj_m[pos][prev] == adj_m[cand][image[prev]]);
        if (!ok) continue;
        image[pos] = static_cast<int>(cand);
        used[cand] = true;
        automorphism_search(t, pos + 1, image, used, adj_m, deg, out);
        used[cand] = false;
    }
}

}  // namespace

std::vector<TreeAutomorphism> automorphism_group(const DualTree& t) {
    validate_tree(t);
    const std::size_t n = t.vertices.size();
    std::map<std::string, int> idx = input_index(t);
    std::vector<std::vector<bool>> adj_m(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : t.edges) {
        adj_m[idx.at(a)][idx.at(b)] = true;
        adj_m[idx.at(b)][idx.at(a)] = true;
    }
    std::vector<int> deg(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (adj_m[i][j]) ++deg[i];
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    std::vector<TreeAutomorphism> out;
    automorphism_search(t, 0, image, used, adj_m, deg, out);
    return out;
}

bool is_automorphism(const DualTree& t, const TreeAutomorphism& g) {
    if (g.vertex_map.size() != t.vertices.size()) return false;
    std::set<std::string> vs(t.vertices.begin(), t.vertices.end());
    std::set<std::string> images;
    for (const auto& [v, w] : g.vertex_map) {
        if (!vs.count(v) || !vs.count(w)) return false;
        if (!images.insert(w).second) return false;
    }
    for (const auto& [a, b] : t.edges)
        if (!has_edge(t, g.vertex_map.at(a), g.vertex_map.at(b))) return false;
    return true;
}

DegreePartition degree_partition(const DualTree& t) {
    DegreePartition out;
    for (const auto& v : canonical_order(t)) {
        switch (degree(t, v)) {
            case 0: break;  // single-vertex tree: smooth-stratum marker
            case 1: out.leaves.push_back(v); break;
            case 2: out.two_nodes.push_back(v); break;
            case 3: out.three_nodes.push_back(v); break;
            default:
                throw MultiplicityError("degree_partition: vertex '" + v +
                                        "' has degree > 3");
        }
    }
    return out;
}

VariableBinding variable_binding(const DualTree& t) {
    DegreePartition parts = degree_partition(t);
    VariableBinding out;
    int i = 0;
    for (const auto& v : parts.leaves) {
        std::string var = "t" + std::to_string(++i);
        out.variables.push_back(var);
        out.var_of_vertex[v] = var;
        out.vertex_of_var[var] = v;
    }
    i = 0;
    for (const auto& v : parts.two_nodes) {
        std::string var = "r" + std::to_string(++i);
        out.variables.push_back(var);
        out.var_of_vertex[v] = var;
        out.vertex_of_var[var] = v;
    }
    return out;
}

SignedPermutation induced_signed_permutation(const DualTree& t, const TreeAutomorphism& g) {
    if (!is_automorphism(t, g))
        throw DomainError("induced_signed_permutation: not an automorphism of the tree");
    VariableBinding binding = variable_binding(t);
    SignedPermutation out;
    for (const auto& [v, var] : binding.var_of_vertex) {
        const std::string& w = g.vertex_map.at(v);
        const std::string& image_var = binding.var_of_vertex.at(w);
        if (degree(t, v) == 1) {
            out.set_image(var, image_var, 1);
            continue;
        }
        const auto& [a0, ainf] = t.orientation.at(v);
        const auto& [b0, binf] = t.orientation.at(w);
        const std::string& ga0 = g.vertex_map.at(a0);
        const std::string& gainf = g.vertex_map.at(ainf);
        if (ga0 == b0 && gainf == binf) {
            out.set_image(var, image_var, 1);
        } else if (ga0 == binf && gainf == b0) {
            out.set_image(var, image_var, -1);
        } else {
            throw InternalError("induced_signed_permutation: orientation images inconsistent");
        }
    }
    return out;
}

DualTree tree_from_name(const std::string& name) {
    if (name == "point") return make_tree({"a"}, {});
    if (name == "edge") return make_tree({"a", "b"}, {{"a", "b"}});
    if (name.rfind("chain", 0) == 0 && name.size() == 6 && name[5] >= '2' && name[5] <= '8') {
        int n = name[5] - '0';
        std::vector<std::string> vs;
        std::vector<std::pair<std::string, std::string>> es;
        for (int i = 0; i <= n; ++i) vs.push_back(canonical_vertex_name(i));
        for (int i = 0; i < n; ++i) es.emplace_back(vs[i], vs[i + 1]);
        return canonical_representative(make_tree(vs, es));
    }
    if (name == "star3")
        return make_tree({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"a", "d"}});
    if (name == "paper-example-4edge")
        return make_tree({"P", "Q", "R", "S", "T"},
                         {{"P", "R"}, {"Q", "R"}, {"R", "S"}, {"S", "T"}});
    if (name == "paper-example-5edge")
        return make_tree({"a", "b", "c", "d", "e", "f"},
                         {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "e"}, {"b", "f"}});
    throw DomainError("unknown tree shorthand '" + name + "'");
}

bool is_tree_shorthand(const std::string& name) {
    static const std::set<std::string> fixed{"point", "edge", "star3", "paper-example-4edge",
                                             "paper-example-5edge"};
    if (fixed.count(name)) return true;
    return name.rfind("chain", 0) == 0 && name.size() == 6 && name[5] >= '2' && name[5] <= '8';
}

const std::vector<std::string>& stratum_names() {
    static const std::vector<std::string> names{"point", "edge", "chain2", "chain3", "star3"};
    return names;
}

std::string stratum_name_of(const DualTree& t) {
    static const std::map<std::string, std::string> by_encoding = [] {
        std::map<std::string, std::string> m;
        for (const auto& name : stratum_names())
            m[canonical_encoding(tree_from_name(name))] = name;
        return m;
    }();
    auto it = by_encoding.find(canonical_encoding(t));
    return it == by_encoding.end() ? std::string() : it->second;
}

}  // namespace chow

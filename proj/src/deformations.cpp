#include "chow/deformations.hpp"

#include <algorithm>
#include <exception>
#include <queue>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chow {

namespace {

struct SearchContext {
    const DualTree* target = nullptr;
    const DualTree* source = nullptr;
    std::size_t n = 0;  // source vertices
    std::size_t k = 0;  // target vertices
    std::vector<std::vector<bool>> target_adj;              // k x k
    std::vector<std::vector<std::size_t>> source_nbrs;      // neighbor indices per source vertex
    std::vector<std::vector<std::size_t>> earlier_nbrs;     // neighbors with smaller index
};

SearchContext make_context(const DualTree& target, const DualTree& source) {
    SearchContext ctx;
    ctx.target = &target;
    ctx.source = &source;
    ctx.n = source.vertices.size();
    ctx.k = target.vertices.size();
    std::map<std::string, std::size_t> tidx, sidx;
    for (std::size_t i = 0; i < ctx.k; ++i) tidx[target.vertices[i]] = i;
    for (std::size_t i = 0; i < ctx.n; ++i) sidx[source.vertices[i]] = i;
    ctx.target_adj.assign(ctx.k, std::vector<bool>(ctx.k, false));
    for (const auto& [a, b] : target.edges) {
        ctx.target_adj[tidx.at(a)][tidx.at(b)] = true;
        ctx.target_adj[tidx.at(b)][tidx.at(a)] = true;
    }
    ctx.source_nbrs.assign(ctx.n, {});
    for (const auto& [a, b] : source.edges) {
        ctx.source_nbrs[sidx.at(a)].push_back(sidx.at(b));
        ctx.source_nbrs[sidx.at(b)].push_back(sidx.at(a));
    }
    ctx.earlier_nbrs.assign(ctx.n, {});
    for (std::size_t v = 0; v < ctx.n; ++v)
        for (std::size_t w : ctx.source_nbrs[v])
            if (w < v) ctx.earlier_nbrs[v].push_back(w);
    return ctx;
}

/* Surjectivity plus fiber connectivity for a fully assigned image vector;
 * edge compatibility is assumed checked along the way. */
bool fibers_ok(const SearchContext& ctx, const std::vector<std::size_t>& image) {
    std::vector<std::vector<std::size_t>> fibers(ctx.k);
    for (std::size_t v = 0; v < ctx.n; ++v) fibers[image[v]].push_back(v);
    for (std::size_t c = 0; c < ctx.k; ++c) {
        if (fibers[c].empty()) return false;  // not surjective
        /* BFS inside the fiber */
        std::set<std::size_t> fiber(fibers[c].begin(), fibers[c].end());
        std::set<std::size_t> seen{fibers[c][0]};
        std::queue<std::size_t> q;
        q.push(fibers[c][0]);
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop();
            for (std::size_t w : ctx.source_nbrs[v])
                if (fiber.count(w) && seen.insert(w).second) q.push(w);
        }
        if (seen.size() != fiber.size()) return false;
    }
    return true;
}

bool compatible_at(const SearchContext& ctx, const std::vector<std::size_t>& image,
                   std::size_t pos) {
    for (std::size_t w : ctx.earlier_nbrs[pos]) {
        std::size_t a = image[pos], b = image[w];
        if (a != b && !ctx.target_adj[a][b]) return false;
    }
    return true;
}

OrderedDeformation build_deformation(const SearchContext& ctx,
                                     const std::vector<std::size_t>& image) {
    OrderedDeformation d;
    d.source = *ctx.source;
    d.target = *ctx.target;
    for (std::size_t v = 0; v < ctx.n; ++v)
        d.vertex_map[ctx.source->vertices[v]] = ctx.target->vertices[image[v]];
    return d;
}

void search(const SearchContext& ctx, std::vector<std::size_t>& image, std::size_t pos,
            std::vector<OrderedDeformation>& out) {
    if (pos == ctx.n) {
        if (fibers_ok(ctx, image)) out.push_back(build_deformation(ctx, image));
        return;
    }
    for (std::size_t c = 0; c < ctx.k; ++c) {
        image[pos] = c;
        if (compatible_at(ctx, image, pos)) search(ctx, image, pos + 1, out);
    }
}

}  // namespace

std::string OrderedDeformation::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& v : source.vertices) {
        if (!first) os << ", ";
        first = false;
        os << v << ":" << vertex_map.at(v);
    }
    os << "}";
    return os.str();
}

bool is_valid_deformation(const DualTree& target, const DualTree& source,
                          const std::map<std::string, std::string>& vertex_map) {
    std::map<std::string, std::size_t> tidx;
    for (std::size_t i = 0; i < target.vertices.size(); ++i) tidx[target.vertices[i]] = i;
    if (vertex_map.size() != source.vertices.size()) return false;
    std::vector<std::size_t> image(source.vertices.size());
    SearchContext ctx = make_context(target, source);
    for (std::size_t v = 0; v < source.vertices.size(); ++v) {
        auto it = vertex_map.find(source.vertices[v]);
        if (it == vertex_map.end() || !tidx.count(it->second)) return false;
        image[v] = tidx.at(it->second);
    }
    for (std::size_t v = 0; v < ctx.n; ++v)
        if (!compatible_at(ctx, image, v)) return false;
    return fibers_ok(ctx, image);
}

std::vector<OrderedDeformation> enumerate_ordered_deformations_serial(const DualTree& target,
                                                                      const DualTree& source) {
    validate_tree(target);
    validate_tree(source);
    SearchContext ctx = make_context(target, source);
    std::vector<OrderedDeformation> out;
    /* plain odometer over every map, no pruning: the reference semantics */
    std::vector<std::size_t> image(ctx.n, 0);
    while (true) {
        bool edges_ok = true;
        for (std::size_t v = 0; v < ctx.n && edges_ok; ++v)
            edges_ok = compatible_at(ctx, image, v);
        if (edges_ok && fibers_ok(ctx, image)) out.push_back(build_deformation(ctx, image));
        std::size_t pos = ctx.n;
        while (pos > 0 && image[pos - 1] + 1 == ctx.k) image[--pos] = 0;
        if (pos == 0) break;
        ++image[pos - 1];
    }
    return out;
}

std::vector<OrderedDeformation> enumerate_ordered_deformations(const DualTree& target,
                                                               const DualTree& source) {
    validate_tree(target);
    validate_tree(source);
    SearchContext ctx = make_context(target, source);
    if (ctx.n < ctx.k) return {};  // no surjection possible

    /* Split the pruned depth-first search over the assignments of the first
     * two source vertices; branch results are concatenated in branch order,
     * so the output is identical to the serial search. */
    const std::size_t depth = std::min<std::size_t>(2, ctx.n);
    std::vector<std::vector<std::size_t>> prefixes;
    {
        std::vector<std::size_t> prefix(depth, 0);
        std::vector<std::size_t> image(ctx.n, 0);
        while (true) {
            bool ok = true;
            for (std::size_t v = 0; v < depth && ok; ++v) {
                image[v] = prefix[v];
                ok = compatible_at(ctx, image, v);
            }
            if (ok) prefixes.push_back(prefix);
            std::size_t pos = depth;
            while (pos > 0 && prefix[pos - 1] + 1 == ctx.k) prefix[--pos] = 0;
            if (pos == 0) break;
            ++prefix[pos - 1];
        }
    }

    std::vector<std::vector<OrderedDeformation>> branch_results(prefixes.size());
    /* exceptions must not escape the parallel region; capture the first and
     * rethrow it on the calling thread */
    std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long b = 0; b < static_cast<long>(prefixes.size()); ++b) {
        try {
            std::vector<std::size_t> image(ctx.n, 0);
            for (std::size_t v = 0; v < depth; ++v) image[v] = prefixes[b][v];
            if (depth == ctx.n) {
                if (fibers_ok(ctx, image))
                    branch_results[b].push_back(build_deformation(ctx, image));
            } else {
                search(ctx, image, depth, branch_results[b]);
            }
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(chow_enumeration_failure)
#endif
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<OrderedDeformation> out;
    for (auto& branch : branch_results)
        for (auto& d : branch) out.push_back(std::move(d));
    return out;
}

namespace {

std::map<std::string, std::string> transform(const OrderedDeformation& d,
                                             const TreeAutomorphism& g, QuotientKind kind) {
    std::map<std::string, std::string> out;
    if (kind == QuotientKind::byGamma) {
        for (const auto& [v, w] : d.vertex_map) out[v] = g.vertex_map.at(w);
    } else {
        for (const auto& [v, w] : d.vertex_map) out[v] = d.vertex_map.at(g.vertex_map.at(v));
    }
    return out;
}

}  // namespace

std::vector<DeformationClass> quotient(const std::vector<OrderedDeformation>& defs,
                                       QuotientKind kind) {
    std::vector<DeformationClass> out;
    if (defs.empty()) return out;
    const std::vector<TreeAutomorphism> group = kind == QuotientKind::byGamma
                                                    ? automorphism_group(defs[0].target)
                                                    : automorphism_group(defs[0].source);
    std::map<std::map<std::string, std::string>, std::size_t> index_of;
    for (std::size_t i = 0; i < defs.size(); ++i) index_of[defs[i].vertex_map] = i;
    std::vector<bool> assigned(defs.size(), false);
    for (std::size_t i = 0; i < defs.size(); ++i) {
        if (assigned[i]) continue;
        std::set<std::size_t> orbit;
        for (const auto& g : group) {
            auto moved = transform(defs[i], g, kind);
            auto it = index_of.find(moved);
            if (it == index_of.end())
                throw DomainError("quotient: deformation list is not closed under the action; "
                                  "pass the complete enumeration");
            orbit.insert(it->second);
        }
        DeformationClass cls;
        cls.kind = kind;
        for (std::size_t j : orbit) {
            assigned[j] = true;
            cls.member_indices.push_back(j);
            cls.members.push_back(defs[j]);
        }
        out.push_back(std::move(cls));
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> persistent_edges(const OrderedDeformation& d) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [p, q] : d.source.edges)
        if (d.vertex_map.at(p) != d.vertex_map.at(q)) out.emplace_back(p, q);
    if (out.size() != d.target.edges.size())
        throw InternalError("persistent_edges: expected exactly one per target edge");
    return out;
}

std::vector<std::pair<std::string, std::string>> contracted_edges(const OrderedDeformation& d) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [p, q] : d.source.edges)
        if (d.vertex_map.at(p) == d.vertex_map.at(q)) out.emplace_back(p, q);
    return out;
}

std::map<std::pair<std::string, std::string>, std::pair<std::string, std::string>>
persistent_edge_over(const OrderedDeformation& d) {
    std::map<std::pair<std::string, std::string>, std::pair<std::string, std::string>> over;
    for (const auto& [p, q] : persistent_edges(d)) {
        const std::string& a = d.vertex_map.at(p);
        const std::string& b = d.vertex_map.at(q);
        /* normalize to the target edge's declared orientation */
        for (const auto& e : d.target.edges) {
            if (e.first == a && e.second == b) {
                if (!over.emplace(e, std::make_pair(p, q)).second)
                    throw InternalError("persistent_edge_over: duplicate edge cover");
            } else if (e.first == b && e.second == a) {
                if (!over.emplace(e, std::make_pair(q, p)).second)
                    throw InternalError("persistent_edge_over: duplicate edge cover");
            }
        }
    }
    if (over.size() != d.target.edges.size())
        throw InternalError("persistent_edge_over: some target edge not covered");
    return over;
}

long stabilizer_size(const OrderedDeformation& d, QuotientKind kind) {
    const std::vector<TreeAutomorphism> group = kind == QuotientKind::byGamma
                                                    ? automorphism_group(d.target)
                                                    : automorphism_group(d.source);
    long count = 0;
    for (const auto& g : group)
        if (transform(d, g, kind) == d.vertex_map) ++count;
    return count;
}

}  // namespace chow

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chow/errors.hpp"
#include "chow/polynomial.hpp"

namespace chow {

/* Dual tree of a nodal rational curve: one vertex per component, one edge
 * per node.  Degree-2 vertices carry an orientation (which neighbor sits at
 * coordinate 0 and which at infinity). */
struct DualTree {
    std::vector<std::string> vertices;  // declaration order
    std::vector<std::pair<std::string, std::string>> edges;
    /* degree-2 vertex -> (neighbor_at_0, neighbor_at_infinity) */
    std::map<std::string, std::pair<std::string, std::string>> orientation;
};

struct TreeAutomorphism {
    std::map<std::string, std::string> vertex_map;

    bool is_identity() const;
    bool operator==(const TreeAutomorphism& o) const { return vertex_map == o.vertex_map; }
    bool operator!=(const TreeAutomorphism& o) const { return !(*this == o); }
    std::string to_string() const;  // "{P:A, Q:B}" style
};

/* (g after h): x -> g(h(x)). */
TreeAutomorphism compose(const TreeAutomorphism& g, const TreeAutomorphism& h);
TreeAutomorphism inverse_of(const TreeAutomorphism& g);

/* Throws DomainError unless the tree is a valid oriented dual tree:
 * nonempty, no duplicates, edges over known vertices, connected, acyclic,
 * orientation exactly on degree-2 vertices listing their two neighbors. */
void validate_tree(const DualTree& t);

/* Builds a validated tree; any degree-2 vertex missing from the supplied
 * orientation gets the default one (neighbor of smaller canonical rank at
 * 0). */
DualTree make_tree(std::vector<std::string> vertices,
                   std::vector<std::pair<std::string, std::string>> edges,
                   std::map<std::string, std::pair<std::string, std::string>> orientation = {});

int degree(const DualTree& t, const std::string& v);
std::vector<std::string> neighbors(const DualTree& t, const std::string& v);
int max_degree(const DualTree& t);
bool has_edge(const DualTree& t, const std::string& a, const std::string& b);

/* Isomorphism-invariant encoding (rooted at the tree center, children
 * ordered shortlex), equal for two trees iff they are isomorphic. */
std::string canonical_encoding(const DualTree& t);

/* Deterministic vertex order: root-first depth-first traversal from the
 * canonical root with children visited in encoding order.  Isomorphic trees
 * get orders matched by some isomorphism. */
std::vector<std::string> canonical_order(const DualTree& t);
std::map<std::string, int> canonical_rank(const DualTree& t);

/* Same tree with vertices renamed a, b, c, ... in canonical order and
 * default orientations. */
DualTree canonical_representative(const DualTree& t);

/* One representative per isomorphism class of trees with at most max_edges
 * edges and every vertex degree <= max_multiplicity, canonically labeled, in
 * deterministic order (edge count, then encoding).  Guards: max_edges <= 8,
 * max_multiplicity in {3, 4}. */
std::vector<DualTree> enumerate_trees(int max_edges, int max_multiplicity);

/* Full automorphism group, identity included, deterministic order. */
std::vector<TreeAutomorphism> automorphism_group(const DualTree& t);

bool is_automorphism(const DualTree& t, const TreeAutomorphism& g);

/* Vertices listed by degree; degree > 3 raises MultiplicityError.  The
 * single degree-0 vertex of the point tree belongs to no class. */
struct DegreePartition {
    std::vector<std::string> leaves;       // degree 1
    std::vector<std::string> two_nodes;    // degree 2
    std::vector<std::string> three_nodes;  // degree 3
};
DegreePartition degree_partition(const DualTree& t);

/* Variable binding: leaves get t1..t_d1 and degree-2 vertices get r1..r_d2,
 * both in canonical vertex order.  Degree > 3 raises MultiplicityError. */
struct VariableBinding {
    std::vector<std::string> variables;               // t's first, then r's
    std::map<std::string, std::string> var_of_vertex;  // deg-1/2 vertices only
    std::map<std::string, std::string> vertex_of_var;
};
VariableBinding variable_binding(const DualTree& t);

/* Signed permutation of the bound variables induced by a tree automorphism:
 * leaf variables permute with sign +1; the variable of a degree-2 vertex
 * picks up sign -1 exactly when the automorphism swaps the vertex's 0 and
 * infinity sides.  DomainError if g is not an automorphism. */
SignedPermutation induced_signed_permutation(const DualTree& t, const TreeAutomorphism& g);

/* Shorthand trees: point, edge, chain2..chain8, star3, paper-example-4edge,
 * paper-example-5edge.  Unknown name raises DomainError. */
DualTree tree_from_name(const std::string& name);
bool is_tree_shorthand(const std::string& name);

/* Name of the isomorphism class among the five strata with <= 3 edges
 * (point/edge/chain2/chain3/star3), or empty string if not one of them. */
std::string stratum_name_of(const DualTree& t);
const std::vector<std::string>& stratum_names();  // the five, by codimension

}  // namespace chow

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chow/dual_tree.hpp"

namespace chow {

/* An ordered deformation d : source -> target (written d: Γ' -> Γ): a
 * surjective vertex map with connected fibers such that endpoints of any
 * source edge map to equal or adjacent target vertices.  It records which
 * nodes of the degenerate curve survive as nodes of the more generic one. */
struct OrderedDeformation {
    DualTree source;  // the more degenerate tree (more edges)
    DualTree target;
    std::map<std::string, std::string> vertex_map;  // vertices(source) -> vertices(target)

    bool operator==(const OrderedDeformation& o) const { return vertex_map == o.vertex_map; }
    bool operator!=(const OrderedDeformation& o) const { return !(*this == o); }
    std::string to_string() const;  // "{P:A, Q:B, ...}"
};

bool is_valid_deformation(const DualTree& target, const DualTree& source,
                          const std::map<std::string, std::string>& vertex_map);

/* All ordered deformations source -> target in lexicographic order of the
 * image sequence (source vertices in declaration order, images ordered by
 * target declaration order).  Empty when none exist.  The default variant
 * prunes with edge compatibility and splits the search across OpenMP
 * threads; the serial variant is an unpruned reference that walks every map
 * and must produce the identical list. */
std::vector<OrderedDeformation> enumerate_ordered_deformations(const DualTree& target,
                                                               const DualTree& source);
std::vector<OrderedDeformation> enumerate_ordered_deformations_serial(const DualTree& target,
                                                                      const DualTree& source);

enum class QuotientKind {
    byGamma,       // postcomposition with automorphisms of the target
    byGammaPrime,  // precomposition with automorphisms of the source
};

/* One orbit of the chosen group action on a complete deformation list. */
struct DeformationClass {
    std::vector<std::size_t> member_indices;  // into the enumerated list, ascending
    std::vector<OrderedDeformation> members;  // aligned with member_indices
    QuotientKind kind;
};

/* Orbit decomposition; classes ordered by smallest member index.  The input
 * must be the complete enumeration for its tree pair (DomainError when an
 * orbit leaves the list). */
std::vector<DeformationClass> quotient(const std::vector<OrderedDeformation>& defs,
                                       QuotientKind kind);

/* Source edges whose endpoints map to distinct (hence adjacent) target
 * vertices; exactly one per target edge.  A count mismatch with the target
 * edge number raises InternalError. */
std::vector<std::pair<std::string, std::string>> persistent_edges(const OrderedDeformation& d);
std::vector<std::pair<std::string, std::string>> contracted_edges(const OrderedDeformation& d);

/* The persistent source edge lying over each target edge, keyed by the
 * target edge normalized to declaration orientation.  InternalError if some
 * target edge has none or several. */
std::map<std::pair<std::string, std::string>, std::pair<std::string, std::string>>
persistent_edge_over(const OrderedDeformation& d);

/* Number of group elements fixing d under the action of the given kind. */
long stabilizer_size(const OrderedDeformation& d, QuotientKind kind);

}  // namespace chow

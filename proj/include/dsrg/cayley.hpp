#pragma once

#include <memory>
#include <vector>

#include "dsrg/digraph.hpp"
#include "dsrg/group.hpp"
#include "dsrg/matrix.hpp"

namespace dsrg {

// Cayley graph C(G,S): vertex i is group element i, arc x -> y iff
// x^-1 y in S.  The group is held by shared pointer so graphs can outlive
// the builder scope.
struct CayleyGraph {
    std::shared_ptr<const FiniteGroup> group;
    Subset connection;
    Digraph digraph;
};

CayleyGraph cayley_graph(std::shared_ptr<const FiniteGroup> g, const Subset& s);

// Cayley coset graph C(G,H,HSH) on the left cosets [G:H], arc xH -> yH iff
// x^-1 y in HSH.  Representative-independence is asserted exhaustively.
// When e lies in HSH every vertex carries a loop; such graphs are not
// Digraphs, so the adjacency is exposed as a raw matrix with a loop flag,
// and as_digraph() refuses loopy instances.
struct CosetGraph {
    std::shared_ptr<const FiniteGroup> group;
    Subset subgroup;
    Subset connection;  // the original S
    Subset hsh;
    std::vector<std::vector<int>> cosets;
    DenseIntMatrix adjacency;
    bool has_loops;

    Digraph as_digraph() const;  // throws PreconditionError when has_loops
};

CosetGraph cayley_coset_graph(std::shared_ptr<const FiniteGroup> g, const Subset& h,
                              const Subset& s, bool allow_loops = false);

}  // namespace dsrg

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dsrg/bigint.hpp"
#include "dsrg/cayley.hpp"
#include "dsrg/digraph.hpp"
#include "dsrg/params.hpp"

namespace dsrg {

// Partition of the vertices by equal out-neighbour (or in-neighbour) sets.
struct NeighborPartition {
    bool out;
    std::vector<std::vector<int>> classes;  // ordered by least vertex
    std::vector<int> class_of;
};

NeighborPartition pout_partition(const Digraph& d);
NeighborPartition pin_partition(const Digraph& d);

// Class-size bounds for verified DSRGs:
//   every class size <= min(k-lambda, n-2k+t);
//   for lambda > 0, |S_i|+|S_j| <= max(k, n-2k+2*beta),
//   beta = min(k-lambda, mu, n-2k+t).
// Violations throw InternalCheckError; both bounds have sound proofs, so a
// violation means a broken verifier.
struct BoundReport {
    std::int64_t class_cap;       // min(k-lambda, n-2k+t)
    std::int64_t max_class;
    bool pair_applicable;         // lambda > 0 and >= 2 classes
    std::int64_t pair_cap;        // max(k, n-2k+2*beta)
    std::int64_t max_pair_sum;
};
BoundReport bounds_check(const ParamTuple& p, const NeighborPartition& part);

// The stabilizer-coset quotient collapses each class a_i G_S (out side; the
// in side uses G_{S^-1}) to one vertex, with an arc between classes when the
// bipartite arc pattern between them is complete.  This is well defined only
// when every pattern is empty-or-complete and every parameter is divisible
// by the stabilizer order; genuine DSRGs exist where both fail, so the
// failures are reported as QuotientError rather than asserted away.
struct QuotientError : std::runtime_error {
    enum class Kind { NonDivisible, NonUniform };
    Kind kind;
    QuotientError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

struct QuotientResult {
    Digraph graph;
    ParamTuple tuple;       // the divided tuple, re-verified
    Subset stabilizer;
};
QuotientResult quotient_graph(const CayleyGraph& c, bool out_side);

// Stabilizer structure of a verified directed strongly regular Cayley graph.
// Facts with sound proofs are asserted (InternalCheckError on failure):
//   - P_out classes are exactly the left cosets of G_S, P_in of G_{S^-1};
//   - |G_S|, |G_{S^-1}| <= min(k-lambda, n-2k+t);
//   - t != mu forces both stabilizers trivial.
// The classical claims "|G_S| divides gcd(n,k,mu,lambda,t)" and "gcd = 1
// forces a trivial stabilizer" fail on real instances (C(S3, {a, a x}) has
// |G_S| = 2 against mu = 1), so they are evaluated and reported, not
// asserted.
struct StabilizerReport {
    ParamTuple tuple;
    Subset g_s;
    Subset g_s_inv;
    std::int64_t gcd_all;
    bool gcd_divisibility_out;
    bool gcd_divisibility_in;
    bool gcd1_triviality_out;  // gcd = 1 implies |G_S| = 1 on this instance
    bool gcd1_triviality_in;
};
StabilizerReport stabilizer_facts(const CayleyGraph& c);

// Upper bound on |Aut|: an automorphism permutes the q = n/|G_S| stabilizer
// cosets and acts within them, giving q! (|G_S|!)^q; likewise on the in
// side; the bound is the smaller of the two.
BigUint aut_bound(const CayleyGraph& c);

// Exact |Aut(D)| by pruned permutation search; capped at 10 vertices.
std::int64_t brute_force_aut(const Digraph& d);

}  // namespace dsrg

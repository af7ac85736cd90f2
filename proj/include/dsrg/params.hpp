#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dsrg {

enum class GraphClass { Proper, Srg, Tournament };

// The five parameters (n, k, mu, lambda, t) of a directed strongly regular
// graph: k-regular on n vertices, every vertex on t 2-cycles, and the number
// of length-2 paths x->..->y is lambda along an arc and mu along a non-arc.
struct ParamTuple {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t mu = 0;
    std::int64_t lambda = 0;
    std::int64_t t = 0;

    // t = k collapses to an undirected strongly regular graph, t = 0 to a
    // doubly regular tournament; 0 < t < k is the genuinely directed case.
    GraphClass cls() const {
        if (t == k) return GraphClass::Srg;
        if (t == 0) return GraphClass::Tournament;
        return GraphClass::Proper;
    }
    bool proper() const { return cls() == GraphClass::Proper; }

    bool operator==(const ParamTuple&) const = default;
    std::string str() const;
};

std::string to_string(GraphClass c);

// Integer eigenvalues k > rho > sigma with multiplicities 1, r, s.
// d = rho - sigma, d^2 = (mu-lambda)^2 + 4(t-mu).
struct SpectrumTriple {
    std::int64_t k, rho, sigma;
    std::int64_t r, s;  // multiplicities of rho, sigma; k is simple
    std::int64_t d;
};

struct FeasibilityReport {
    bool applicable = true;  // false when t = 0 or t = k
    bool pass = false;
    std::vector<std::string> violations;
};

// Feasibility conditions for a proper tuple.  Tuples with t in {0, k} get
// applicable = false rather than an error.  The divisibility/parity/magnitude
// conditions on (2k - (mu-lambda)(n-1))/d are exactly "r and s of the
// eigenvalue multiplicity formula are nonnegative integers"; both forms are
// checked and must agree.
FeasibilityReport check_feasible(const ParamTuple& p);

// Eigenvalues and multiplicities.  Defined whenever the arithmetic works out
// (d^2 a positive perfect square, integral nonnegative multiplicities); this
// covers SRG-flagged tuples with integer spectrum too.  Throws
// PreconditionError otherwise.
SpectrumTriple spectrum(const ParamTuple& p);

// Parameters of the complementary digraph:
// (n, (n-2k)+(k-1), (n-2k)+lambda, (n-2k)+(mu-2), (n-2k)+(t-1)).
// Note mu' is built from lambda and lambda' from mu.  Self-inverse.
ParamTuple complement_params(const ParamTuple& p);

// For tuples with t = mu and 4k = n + 2lambda + 2mu, the parameters fall into
// four one-parameter classes (free parameter n_r, multiplier m):
//   R1: (2nm, nm, (n/2+1)m, (n/2-1)m, (n/2+1)m)      4 | n
//   R2: (2nm, nm, (n+1)/2 m, (n-1)/2 m, (n+1)/2 m)    n odd
//   R3: (2nm, (n-1)m, (n-1)/2 m, (n-3)/2 m, (n-1)/2 m) n odd
//   R4: (2nm, (n-2)m, (n/2-1)m, (n/2-3)m, (n/2-1)m)   4 | n
// The free parameter is named n_r to avoid clashing with the vertex count.
struct BalancedClass {
    int which;  // 1..4
    std::int64_t n_r;
    std::int64_t m;
};
std::optional<BalancedClass> classify_balanced(const ParamTuple& p);
ParamTuple balanced_tuple(const BalancedClass& c);  // reconstruction

// All proper tuples with n <= n_max passing check_feasible, lexicographic.
std::vector<ParamTuple> enumerate_feasible(std::int64_t n_max);

// Parameter map of the Kronecker composition B = (J-A)(x)A + A(x)(J-A):
// (n^2, 2k(n-k), 2(k^2-2*mu*lambda), 2(k^2-lambda^2-mu^2), 2(k^2-2*mu*lambda)).
// Requires t = mu and 4k = n + 2lambda + 2mu.
ParamTuple product_params(const ParamTuple& p);

}  // namespace dsrg

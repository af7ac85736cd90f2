#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dsrg/cayley.hpp"
#include "dsrg/params.hpp"

namespace dsrg {

// A one-call family builder result: the graph, the closed-form expected
// tuple (computed before the graph is built), and the verified tuple.
// Builders throw InternalCheckError when verification does not reproduce the
// expected tuple exactly; that is a construction bug, never a warning.
struct FamilyResult {
    CayleyGraph graph;
    ParamTuple expected;
    std::string describe() const;
};

// C(C_p x| C_n, A' x B) with A' = {a^l : l in H}: a (pn, vn, nv^2/(p-1),
// nv(v-1)/(p-1), nv^2/(p-1)) DSRG.  Needs p an odd prime with a primitive
// root acting, (p-1) | n, H a nonempty subset of {1..p-1}.  |H| = p-1 is
// allowed and flagged SRG by the tuple itself.
FamilyResult family_39(int p, int n, const std::vector<int>& H);

// C(C_p x| C_n, (A'+e)xB \ e): a (pn, n(v+1)-1, nv(v+1)/(p-1),
// n-2+nv^2/(p-1), n-1+nv^2/(p-1)) DSRG; always t = lambda+1.
FamilyResult family_310(int p, int n, const std::vector<int>& H);

// Cayley graphs of A x| C_q where beta has the q-orbit condition and A' is a
// set of orbit representatives.  with_identity = false gives the
// (mq, m-1, (m-1)/q, (m-1)/q - 1, (m-1)/q) family, true gives
// (mq, m+q-2, (m-1)/q + 1, (m-1)/q + q-2, (m-1)/q + q-1).
FamilyResult family_311(const FiniteGroup& a, const std::vector<int>& beta, int q,
                        bool with_identity);

// Convenience: cyclic A = C_m with the power map a -> a^s.
FamilyResult family_311_cyclic(int m, std::int64_t s, int q, bool with_identity);

// C((C_p x| C_n) x| C_p, A' x B) with A' = {a^l x^i : gcd(l,p)=1}: a
// (p^2 n, p(p-1)n, n((p-1)^2+1), n((p-1)^3-1)/(p-1), n((p-1)^2+1)) DSRG.
FamilyResult family_314(int p, int n, std::int64_t s);

// C(D_n, {b..b^(n/2-1), a, ab, .., ab^(n/2-1)}): a
// (2n, n-1, n/2-1, n/2-1, n/2) DSRG for even n >= 4.
FamilyResult family_dihedral(int n);

enum class ProductVariant { T24, T25, T26 };

// The Kronecker-composition pipeline: builds a (2n, ...) base DSRG, applies
// product_theorem21, and checks the closed-form (4n^2, ...) tuple:
//   T24 (odd n >= 3):  base (2n, n-1, (n-1)/2, (n-3)/2, (n-1)/2), the
//                      q = 2 orbit family on C_n under inversion
//                                                  -> (4n^2, 2n^2-2, n^2-1, n^2-3, n^2-1)
//   T25 (odd n >= 3):  complement of the T24 base  -> (4n^2, 2n^2, n^2+1, n^2-1, n^2+1)
//   T26 (n = 0 mod 4): complement of the dihedral family base
//                                                  -> (4n^2, 2n^2, n^2+4, n^2-4, n^2+4)
struct PipelineResult {
    Digraph graph;
    ParamTuple expected;
};
PipelineResult pipeline_24_25_26(int n, ProductVariant variant);

}  // namespace dsrg

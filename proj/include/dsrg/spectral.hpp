#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dsrg/digraph.hpp"
#include "dsrg/group.hpp"
#include "dsrg/params.hpp"

namespace dsrg {

// Root-of-unity data attached to C(C_n x| C_m, A' x C_m) with action
// multiplier k and exponent set H:
//   E_u(h) = sum over a in H of exp(2 pi i u a k^h / n)
//   S_u    = sum over h of E_u(h)
// The starred variant adjoins exponent 0 to H (connection set
// (A'+e) x C_m \ e); then S*_0 = (v+1
// )m and the graph's nontrivial eigenvalues are S*_u - 1.
struct SpectralProfile {
    int n, m;
    std::int64_t k;
    std::vector<int> exponents;  // H, without the starred 0
    bool starred;
    int v;  // |H|

    std::vector<std::complex<double>> s;        // S_u, u = 0..n-1
    std::vector<std::int64_t> s_int;            // rounded values
    std::vector<bool> s_is_int;                 // |residual| <= tol
    std::vector<std::vector<std::complex<double>>> e;  // n x m table
    std::vector<std::vector<bool>> e_zero;

    static constexpr double kTol = 1e-9;
};

SpectralProfile profile(const SemidirectSpec& spec, const std::vector<int>& H, bool starred);

// Eigenvalue multiset from the factored characteristic polynomial:
// unstarred: {vm} u {0^(n(m-1))} u {S_u : u >= 1};
// starred:   {(v+1)m - 1} u {-1^(n(m-1))} u {S*_u - 1 : u >= 1}.
// Throws PreconditionError when some S_u fails integer classification.
std::map<std::int64_t, std::int64_t> charpoly_factors(const SpectralProfile& p);

struct Verdict {
    bool yes = false;
    std::int64_t value = 0;                // sigma (522/523) or rho (526)
    std::optional<ParamTuple> implied;     // on yes
    int witness_u = -1;                    // offending u on no
    std::string why;
};

// DSRG with t = mu and vm/(mu-lambda) = n-1 iff S_1 = ... = S_{n-1} are one
// negative integer sigma.  On yes the implied tuple is
// (nm, vm, mu, mu+sigma, mu) with mu = v(vm-sigma)/n.
Verdict criterion_522(const SpectralProfile& p);

// DSRG with given multiplicity s and sigma < 0 iff exactly s of the S_u
// equal sigma, the rest are 0, and every zero S_u has an all-zero E_u row.
Verdict criterion_523(const SpectralProfile& p, std::int64_t s_mult, std::int64_t sigma);

// Starred criterion: DSRG with given r and rho iff exactly r of the S*_u
// equal 1+rho, the rest are 0 with all-zero E*_u rows.  On yes the implied
// tuple has k = (v+1)m - 1, t = lambda + 1:
// mu = (k(k+1-rho) - rho)/(nm), lambda = mu+rho-1, t = mu+rho.
Verdict criterion_526(const SpectralProfile& p, std::int64_t r_mult, std::int64_t rho);

// Exact annihilation check (A - rho I)(A - sigma I) = mu J over the integers.
bool minpoly_check(const Digraph& d, std::int64_t rho, std::int64_t sigma, std::int64_t mu);

}  // namespace dsrg

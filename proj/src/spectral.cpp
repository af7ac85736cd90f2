#include "dsrg/spectral.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "dsrg/errors.hpp"

namespace dsrg {

SpectralProfile profile(const SemidirectSpec& spec, const std::vector<int>& H, bool starred) {
    int n = spec.n, m = spec.m;
    if (n < 1 || m < 1) throw PreconditionError("profile: n, m >= 1 required");
    std::int64_t k = ((spec.k % n) + n) % n;
    if (std::gcd(k, static_cast<std::int64_t>(n)) != 1)
        throw PreconditionError("profile: gcd(k,n) = 1 required");
    std::vector<int> h = H;
    for (int a : h)
        if (a < 1 || a > n - 1)
            throw PreconditionError("profile: H must lie in {1..n-1}");

    SpectralProfile p;
    p.n = n;
    p.m = m;
    p.k = k;
    p.exponents = h;
    p.starred = starred;
    p.v = static_cast<int>(h.size());
    if (starred) h.push_back(0);

    // k^h mod n per column
    std::vector<std::int64_t> kp(m, 1);
    for (int j = 1; j < m; ++j) kp[j] = kp[j - 1] * k % n;

    p.e.assign(n, std::vector<std::complex<double>>(m));
    p.e_zero.assign(n, std::vector<bool>(m));
    p.s.assign(n, {});
    p.s_int.assign(n, 0);
    p.s_is_int.assign(n, false);
    const double tau = 2.0 * std::numbers::pi;
    for (int u = 0; u < n; ++u) {
        std::complex<double> su = 0.0;
        for (int hcol = 0; hcol < m; ++hcol) {
            std::complex<double> euh = 0.0;
            for (int a : h) {
                // exponent reduced mod n exactly before touching doubles
                std::int64_t ex = (static_cast<std::int64_t>(u) * a % n) * kp[hcol] % n;
                double ang = tau * static_cast<double>(ex) / n;
                euh += std::complex<double>(std::cos(ang), std::sin(ang));
            }
            p.e[u][hcol] = euh;
            p.e_zero[u][hcol] = std::abs(euh) <= SpectralProfile::kTol;
            su += euh;
        }
        p.s[u] = su;
        double re = std::round(su.real());
        p.s_is_int[u] = std::abs(su.imag()) <= SpectralProfile::kTol &&
                        std::abs(su.real() - re) <= SpectralProfile::kTol;
        p.s_int[u] = static_cast<std::int64_t>(re);
    }
    return p;
}

std::map<std::int64_t, std::int64_t> charpoly_factors(const SpectralProfile& p) {
    for (int u = 0; u < p.n; ++u)
        if (!p.s_is_int[u])
            throw PreconditionError("charpoly_factors: S_" + std::to_string(u) +
                                    " is not an integer");
    std::map<std::int64_t, std::int64_t> mult;
    std::int64_t shift = p.starred ? -1 : 0;
    mult[p.s_int[0] + shift] += 1;  // S_0 = vm (or (v+1)m starred)
    if (p.m > 1) mult[shift] += static_cast<std::int64_t>(p.n) * (p.m - 1);
    for (int u = 1; u < p.n; ++u) mult[p.s_int[u] + shift] += 1;
    return mult;
}

namespace {

bool all_integer(const SpectralProfile& p, Verdict& v) {
    for (int u = 1; u < p.n; ++u)
        if (!p.s_is_int[u]) {
            v.witness_u = u;
            v.why = "S_" + std::to_string(u) + " is not an integer";
            return false;
        }
    return true;
}

bool zero_rows_ok(const SpectralProfile& p, Verdict& v) {
    for (int u = 1; u < p.n; ++u) {
        if (p.s_int[u] != 0 || !p.s_is_int[u]) continue;
        for (int h = 0; h < p.m; ++h)
            if (!p.e_zero[u][h]) {
                v.witness_u = u;
                v.why = "S_" + std::to_string(u) + " = 0 but E_" + std::to_string(u) + "(" +
                        std::to_string(h) + ") != 0";
                return false;
            }
    }
    return true;
}

}  // namespace

Verdict criterion_522(const SpectralProfile& p) {
    if (p.starred) throw PreconditionError("criterion_522: unstarred profile required");
    Verdict v;
    if (!all_integer(p, v)) return v;
    if (p.n < 2) {
        v.why = "no nontrivial S_u";
        return v;
    }
    std::int64_t sigma = p.s_int[1];
    for (int u = 2; u < p.n; ++u)
        if (p.s_int[u] != sigma) {
            v.witness_u = u;
            v.why = "S_u values differ";
            return v;
        }
    if (sigma >= 0) {
        v.why = "common value is not negative";
        return v;
    }
    std::int64_t nm = static_cast<std::int64_t>(p.n) * p.m;
    std::int64_t vm = static_cast<std::int64_t>(p.v) * p.m;
    std::int64_t num = p.v * (vm - sigma);
    if (num % p.n != 0)
        throw InternalCheckError("criterion_522: mu = v(vm-sigma)/n is not integral");
    std::int64_t mu = num / p.n;
    v.yes = true;
    v.value = sigma;
    v.implied = ParamTuple{nm, vm, mu, mu + sigma, mu};
    return v;
}

Verdict criterion_523(const SpectralProfile& p, std::int64_t s_mult, std::int64_t sigma) {
    if (p.starred) throw PreconditionError("criterion_523: unstarred profile required");
    if (sigma >= 0) throw PreconditionError("criterion_523: sigma < 0 required");
    Verdict v;
    if (!all_integer(p, v)) return v;
    std::int64_t hits = 0;
    for (int u = 1; u < p.n; ++u) {
        if (p.s_int[u] == sigma) {
            ++hits;
        } else if (p.s_int[u] != 0) {
            v.witness_u = u;
            v.why = "S_u is neither sigma nor 0";
            return v;
        }
    }
    if (hits != s_mult) {
        v.why = "sigma multiplicity " + std::to_string(hits) + " != s = " +
                std::to_string(s_mult);
        return v;
    }
    if (!zero_rows_ok(p, v)) return v;
    std::int64_t nm = static_cast<std::int64_t>(p.n) * p.m;
    std::int64_t vm = static_cast<std::int64_t>(p.v) * p.m;
    std::int64_t num = p.v * (vm - sigma);
    if (num % p.n != 0)
        throw InternalCheckError("criterion_523: mu = v(vm-sigma)/n is not integral");
    std::int64_t mu = num / p.n;
    v.yes = true;
    v.value = sigma;
    v.implied = ParamTuple{nm, vm, mu, mu + sigma, mu};
    return v;
}

Verdict criterion_526(const SpectralProfile& p, std::int64_t r_mult, std::int64_t rho) {
    if (!p.starred) throw PreconditionError("criterion_526: starred profile required");
    if (rho < 0) throw PreconditionError("criterion_526: rho >= 0 required (sigma is -1)");
    Verdict v;
    if (!all_integer(p, v)) return v;
    std::int64_t target = 1 + rho;
    std::int64_t hits = 0;
    for (int u = 1; u < p.n; ++u) {
        if (p.s_int[u] == target && target != 0) {
            ++hits;
        } else if (p.s_int[u] != 0) {
            v.witness_u = u;
            v.why = "S*_u is neither 1+rho nor 0";
            return v;
        }
    }
    if (hits != r_mult) {
        v.why = "1+rho multiplicity " + std::to_string(hits) + " != r = " +
                std::to_string(r_mult);
        return v;
    }
    if (!zero_rows_ok(p, v)) return v;
    std::int64_t nm = static_cast<std::int64_t>(p.n) * p.m;
    std::int64_t k = (static_cast<std::int64_t>(p.v) + 1) * p.m - 1;
    std::int64_t num = k * (k + 1 - rho) - rho;
    if (num % nm != 0)
        throw InternalCheckError("criterion_526: mu = (k(k+1-rho)-rho)/(nm) is not integral");
    std::int64_t mu = num / nm;
    v.yes = true;
    v.value = rho;
    v.implied = ParamTuple{nm, k, mu, mu + rho - 1, mu + rho};
    return v;
}

bool minpoly_check(const Digraph& d, std::int64_t rho, std::int64_t sigma, std::int64_t mu) {
    const DenseIntMatrix& a = d.adjacency();
    int n = a.order();
    DenseIntMatrix lhs = a * a - a.scaled(rho + sigma) +
                         DenseIntMatrix::identity(n).scaled(rho * sigma);
    return lhs == DenseIntMatrix::ones(n).scaled(mu);
}

}  // namespace dsrg

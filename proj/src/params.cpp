#include "dsrg/params.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

#include "dsrg/checked.hpp"
#include "dsrg/errors.hpp"

namespace dsrg {

std::string to_string(GraphClass c) {
    switch (c) {
        case GraphClass::Proper: return "proper";
        case GraphClass::Srg: return "SRG";
        case GraphClass::Tournament: return "tournament";
    }
    return "?";
}

std::string ParamTuple::str() const {
    return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(mu) +
           "," + std::to_string(lambda) + "," + std::to_string(t) + ")";
}

FeasibilityReport check_feasible(const ParamTuple& p) {
    FeasibilityReport rep;
    if (p.t == 0 || p.t == p.k) {
        rep.applicable = false;
        return rep;
    }
    auto fail = [&rep](const std::string& s) { rep.violations.push_back(s); };

    if (!(0 < p.t && p.t < p.k && p.k < p.n)) fail("order: 0<t<k<n");
    if (!(0 <= p.lambda && p.lambda < p.t)) fail("0<=lambda<t");
    if (!(0 < p.mu && p.mu <= p.t)) fail("0<mu<=t");
    if (checked_mul(p.k, p.k + p.mu - p.lambda) != p.t + (p.n - 1) * p.mu)
        fail("k(k+mu-lambda) = t+(n-1)mu");

    std::int64_t diff = p.mu - p.lambda;
    std::int64_t d2 = checked_add(checked_mul(diff, diff), 4 * (p.t - p.mu));
    std::int64_t d = 0;
    if (d2 <= 0 || !is_perfect_square(d2, &d)) {
        fail("(mu-lambda)^2+4(t-mu) = d^2 with d a positive integer");
    } else {
        std::int64_t q = checked_sub(2 * p.k, checked_mul(diff, p.n - 1));
        if (q % d != 0) {
            fail("d | 2k-(mu-lambda)(n-1)");
        } else {
            q /= d;
            if ((q - (p.n - 1)) % 2 != 0) fail("(2k-(mu-lambda)(n-1))/d = n-1 (mod 2)");
            if (std::llabs(q) > p.n - 1) fail("|(2k-(mu-lambda)(n-1))/d| <= n-1");
        }
        // multiplicities of Eq. (1) must be nonnegative integers
        std::int64_t rho = -diff + d, sigma = -diff - d;
        if (rho % 2 != 0 || sigma % 2 != 0) {
            fail("rho, sigma integers");
        } else {
            rho /= 2;
            sigma /= 2;
            std::int64_t rnum = -(p.k + checked_mul(sigma, p.n - 1));
            std::int64_t snum = p.k + checked_mul(rho, p.n - 1);
            if (rnum % d != 0 || snum % d != 0 || rnum / d < 0 || snum / d < 0)
                fail("multiplicities r,s nonnegative integers");
        }
    }
    if (!(-2 * (p.k - p.t - 1) <= diff && diff <= 2 * (p.k - p.t)))
        fail("-2(k-t-1) <= mu-lambda <= 2(k-t)");

    rep.pass = rep.violations.empty();
    return rep;
}

SpectrumTriple spectrum(const ParamTuple& p) {
    std::int64_t diff = p.mu - p.lambda;
    std::int64_t d2 = checked_add(checked_mul(diff, diff), 4 * (p.t - p.mu));
    std::int64_t d = 0;
    if (d2 <= 0 || !is_perfect_square(d2, &d))
        throw PreconditionError("spectrum: d^2 = " + std::to_string(d2) +
                                " is not a positive perfect square for " + p.str());
    std::int64_t rho = -diff + d, sigma = -diff - d;
    if (rho % 2 != 0 || sigma % 2 != 0)
        throw PreconditionError("spectrum: non-integer eigenvalues for " + p.str());
    rho /= 2;
    sigma /= 2;
    std::int64_t rnum = -(p.k + checked_mul(sigma, p.n - 1));
    std::int64_t snum = p.k + checked_mul(rho, p.n - 1);
    if (rnum % d != 0 || snum % d != 0 || rnum / d < 0 || snum / d < 0)
        throw PreconditionError("spectrum: non-integral multiplicities for " + p.str());
    SpectrumTriple s{p.k, rho, sigma, rnum / d, snum / d, d};
    // zero trace, exact
    if (1 + s.r + s.s != p.n || p.k + s.rho * s.r + s.sigma * s.s != 0)
        throw InternalCheckError("spectrum: trace identity failed for " + p.str());
    return s;
}

ParamTuple complement_params(const ParamTuple& p) {
    std::int64_t w = p.n - 2 * p.k;
    ParamTuple c{p.n, w + (p.k - 1), w + p.lambda, w + (p.mu - 2), w + (p.t - 1)};
    if (c.k < 0 || c.mu < 0 || c.lambda < 0 || c.t < 0)
        throw PreconditionError("complement_params: negative field from " + p.str());
    return c;
}

ParamTuple balanced_tuple(const BalancedClass& c) {
    std::int64_t n = c.n_r, m = c.m;
    switch (c.which) {
        case 1: return {2 * n * m, n * m, (n / 2 + 1) * m, (n / 2 - 1) * m, (n / 2 + 1) * m};
        case 2: return {2 * n * m, n * m, (n + 1) / 2 * m, (n - 1) / 2 * m, (n + 1) / 2 * m};
        case 3: return {2 * n * m, (n - 1) * m, (n - 1) / 2 * m, (n - 3) / 2 * m, (n - 1) / 2 * m};
        case 4: return {2 * n * m, (n - 2) * m, (n / 2 - 1) * m, (n / 2 - 3) * m, (n / 2 - 1) * m};
    }
    throw PreconditionError("balanced_tuple: class out of range");
}

std::optional<BalancedClass> classify_balanced(const ParamTuple& p) {
    if (p.t != p.mu || 4 * p.k != p.n + 2 * p.lambda + 2 * p.mu) return std::nullopt;
    std::int64_t diff = p.mu - p.lambda;
    if (diff <= 0) return std::nullopt;
    auto try_class = [&p](int which, std::int64_t m) -> std::optional<BalancedClass> {
        if (m <= 0) return std::nullopt;
        // n_r from the class's n = 2*n_r*m linkage
        if (p.n % (2 * m) != 0) return std::nullopt;
        BalancedClass c{which, p.n / (2 * m), m};
        if (which == 1 || which == 4) {
            if (c.n_r % 4 != 0) return std::nullopt;
        } else {
            if (c.n_r % 2 == 0) return std::nullopt;
        }
        ParamTuple q = balanced_tuple(c);
        if (q == p) return c;
        return std::nullopt;
    };
    // R1/R4 have mu-lambda = 2m, R2/R3 have mu-lambda = m.
    if (diff % 2 == 0) {
        if (auto c = try_class(1, diff / 2)) return c;
        if (auto c = try_class(4, diff / 2)) return c;
    }
    if (auto c = try_class(2, diff)) return c;
    if (auto c = try_class(3, diff)) return c;
    return std::nullopt;
}

std::vector<ParamTuple> enumerate_feasible(std::int64_t n_max) {
    if (n_max < 1) throw PreconditionError("enumerate_feasible: n_max >= 1 required");
    std::vector<ParamTuple> out;
    for (std::int64_t n = 2; n <= n_max; ++n) {
        for (std::int64_t k = 1; k < n; ++k) {
            for (std::int64_t t = 1; t < k; ++t) {
                for (std::int64_t lambda = 0; lambda < t; ++lambda) {
                    // k(k+mu-lambda) = t+(n-1)mu pins mu unless k = n-1.
                    std::int64_t coeff = k - (n - 1);
                    std::int64_t rhs = t - k * k + k * lambda;
                    std::int64_t lo = 1, hi = t;
                    if (coeff != 0) {
                        if (rhs % coeff != 0) continue;
                        lo = hi = rhs / coeff;
                        if (lo < 1 || lo > t) continue;
                    }
                    for (std::int64_t mu = lo; mu <= hi; ++mu) {
                        ParamTuple p{n, k, mu, lambda, t};
                        if (check_feasible(p).pass) out.push_back(p);
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const ParamTuple& a, const ParamTuple& b) {
        return std::tie(a.n, a.k, a.mu, a.lambda, a.t) < std::tie(b.n, b.k, b.mu, b.lambda, b.t);
    });
    return out;
}

ParamTuple product_params(const ParamTuple& p) {
    if (p.t != p.mu)
        throw PreconditionError("product_params: t = mu required, got " + p.str());
    if (4 * p.k != p.n + 2 * p.lambda + 2 * p.mu)
        throw PreconditionError("product_params: 4k = n+2lambda+2mu required, got " + p.str());
    std::int64_t k2 = checked_mul(p.k, p.k);
    ParamTuple q;
    q.n = checked_mul(p.n, p.n);
    q.k = checked_mul(2 * p.k, p.n - p.k);
    q.mu = 2 * checked_sub(k2, 2 * checked_mul(p.mu, p.lambda));
    q.lambda = 2 * (k2 - checked_mul(p.lambda, p.lambda) - checked_mul(p.mu, p.mu));
    q.t = q.mu;
    return q;
}

}  // namespace dsrg

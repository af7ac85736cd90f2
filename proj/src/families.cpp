#include "dsrg/families.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

#include "dsrg/errors.hpp"

namespace dsrg {

std::string FamilyResult::describe() const {
    return expected.str() + " " + to_string(expected.cls()) + " on " +
           graph.group->description();
}

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Build, verify, compare with the closed form.
FamilyResult finish(CayleyGraph graph, const ParamTuple& expected, const char* who) {
    VerifyOutcome v = verify_dsrg(graph.digraph);
    if (!v.ok())
        throw InternalCheckError(std::string(who) + ": output failed verification: " +
                                 v.describe());
    if (*v.tuple != expected)
        throw InternalCheckError(std::string(who) + ": verified " + v.tuple->str() +
                                 " but the formula gives " + expected.str());
    return FamilyResult{std::move(graph), expected};
}

std::vector<int> checked_exponent_set(const std::vector<int>& H, int p, const char* who) {
    std::vector<int> h = H;
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    if (h.empty()) throw PreconditionError(std::string(who) + ": H must be nonempty");
    for (int l : h)
        if (l < 1 || l > p - 1)
            throw PreconditionError(std::string(who) + ": H must lie in {1..p-1}");
    return h;
}

Subset product_set(const FiniteGroup& g, int na, const std::vector<int>& a_part,
                   bool full_b, bool drop_identity) {
    // elements (a, b) have index a + na * b
    std::vector<int> elems;
    int nb = g.order() / na;
    for (int b = 0; b < (full_b ? nb : 1); ++b)
        for (int a : a_part) elems.push_back(a + na * b);
    if (drop_identity)
        elems.erase(std::remove(elems.begin(), elems.end(), g.identity()), elems.end());
    return Subset(g, std::move(elems));
}

}  // namespace

FamilyResult family_39(int p, int n, const std::vector<int>& H) {
    if (!is_prime(p) || p == 2) throw PreconditionError("family_39: p must be an odd prime");
    if (n < 1 || n % (p - 1) != 0) throw PreconditionError("family_39: (p-1) | n required");
    auto h = checked_exponent_set(H, p, "family_39");
    auto m = primitive_root(p);
    if (!m) throw PreconditionError("family_39: no primitive root mod p");
    std::int64_t v = static_cast<std::int64_t>(h.size());
    ParamTuple expected{static_cast<std::int64_t>(p) * n, v * n, n * v * v / (p - 1),
                        n * v * (v - 1) / (p - 1), n * v * v / (p - 1)};
    auto g = std::make_shared<const FiniteGroup>(
        semidirect_cyclic({p, n, *m}, "a", "x"));
    Subset s = product_set(*g, p, h, true, false);
    return finish(cayley_graph(g, s), expected, "family_39");
}

FamilyResult family_310(int p, int n, const std::vector<int>& H) {
    if (!is_prime(p) || p == 2) throw PreconditionError("family_310: p must be an odd prime");
    if (n < 1 || n % (p - 1) != 0) throw PreconditionError("family_310: (p-1) | n required");
    auto h = checked_exponent_set(H, p, "family_310");
    auto m = primitive_root(p);
    if (!m) throw PreconditionError("family_310: no primitive root mod p");
    std::int64_t v = static_cast<std::int64_t>(h.size());
    std::int64_t w = n * v * v / (p - 1);
    ParamTuple expected{static_cast<std::int64_t>(p) * n, n * (v + 1) - 1,
                        n * v * (v + 1) / (p - 1), n - 2 + w, n - 1 + w};
    auto g = std::make_shared<const FiniteGroup>(
        semidirect_cyclic({p, n, *m}, "a", "x"));
    auto h0 = h;
    h0.push_back(0);
    Subset s = product_set(*g, p, h0, true, true);
    return finish(cayley_graph(g, s), expected, "family_310");
}

FamilyResult family_311(const FiniteGroup& a, const std::vector<int>& beta, int q,
                        bool with_identity) {
    OrbitCheck orbits = q_orbit_check(a, beta, q);
    if (!orbits.ok)
        throw PreconditionError("family_311: beta does not satisfy the q-orbit condition");
    std::int64_t m = a.order();
    ParamTuple expected;
    if (with_identity) {
        std::int64_t w = (m - 1) / q;
        expected = {m * q, m + q - 2, w + 1, w + q - 2, w + q - 1};
    } else {
        std::int64_t w = (m - 1) / q;
        expected = {m * q, m - 1, w, w - 1, w};
    }
    auto g = std::make_shared<const FiniteGroup>(semidirect_product(
        a, cyclic(q, "x"), [&beta, &a](int j, int i) {
            int r = i;
            for (int step = 0; step < j; ++step) r = beta[r];
            (void)a;
            return r;
        }));
    std::vector<int> reps = orbit_representatives(a, orbits.orbits).elems();
    if (with_identity) reps.push_back(a.identity());
    Subset s = product_set(*g, a.order(), reps, true, with_identity);
    return finish(cayley_graph(g, s), expected, "family_311");
}

FamilyResult family_311_cyclic(int m, std::int64_t s, int q, bool with_identity) {
    FiniteGroup a = cyclic(m, "a");
    return family_311(a, power_map(a, s), q, with_identity);
}

FamilyResult family_314(int p, int n, std::int64_t s) {
    if (!is_prime(p)) throw PreconditionError("family_314: p must be prime");
    if (n < 1 || (p > 2 && n % (p - 1) != 0))
        throw PreconditionError("family_314: (p-1) | n required");
    if (multiplicative_order(s, p) != p - 1)
        throw PreconditionError("family_314: s must be a primitive root mod p");
    std::int64_t pm1 = p - 1;
    ParamTuple expected{static_cast<std::int64_t>(p) * p * n, p * pm1 * n,
                        n * (pm1 * pm1 + 1), n * (pm1 * pm1 * pm1 - 1) / pm1,
                        n * (pm1 * pm1 + 1)};
    auto g = std::make_shared<const FiniteGroup>(nested_semidirect_314(p, n, s));
    // A' = {a^l x^i : gcd(l,p) = 1}; S = A' x B over the outer C_p.
    // Element (a^l x^i, y^u) has index l + p*(i + n*u).
    std::vector<int> elems;
    for (int u = 0; u < p; ++u)
        for (int i = 0; i < n; ++i)
            for (int l = 1; l < p; ++l) elems.push_back(l + p * (i + n * u));
    Subset conn(*g, std::move(elems));
    return finish(cayley_graph(g, conn), expected, "family_314");
}

FamilyResult family_dihedral(int n) {
    if (n < 4 || n % 2 != 0)
        throw PreconditionError("family_dihedral: even n >= 4 required");
    ParamTuple expected{2 * static_cast<std::int64_t>(n), n - 1, n / 2 - 1, n / 2 - 1, n / 2};
    auto g = std::make_shared<const FiniteGroup>(dihedral(n));
    // S-hat = {b, .., b^(n/2-1)} U {a b^j : 0 <= j <= n/2-1}; a b^j = b^-j a,
    // so the reflection part has indices (n-j mod n) + n.
    std::vector<int> elems;
    for (int i = 1; i < n / 2; ++i) elems.push_back(i);
    for (int j = 0; j < n / 2; ++j) elems.push_back((n - j) % n + n);
    Subset s(*g, std::move(elems));
    return finish(cayley_graph(g, s), expected, "family_dihedral");
}

PipelineResult pipeline_24_25_26(int n, ProductVariant variant) {
    if (variant == ProductVariant::T26) {
        if (n % 4 != 0) throw PreconditionError("pipeline: T26 needs 4 | n");
        FamilyResult base = family_dihedral(n);
        Digraph compl_base = complement_graph(base.graph.digraph);
        ParamTuple expected{4LL * n * n, 2LL * n * n, 1LL * n * n + 4, 1LL * n * n - 4,
                            1LL * n * n + 4};
        Digraph out = product_theorem21(compl_base);
        VerifyOutcome v = verify_dsrg(out);
        if (!v.ok() || *v.tuple != expected)
            throw InternalCheckError("pipeline T26: verification mismatch: " + v.describe());
        return {std::move(out), expected};
    }
    if (n < 3 || n % 2 == 0) throw PreconditionError("pipeline: T24/T25 need odd n >= 3");
    // the (2n, n-1, (n-1)/2, (n-3)/2, (n-1)/2) base is the q = 2 orbit family
    // on C_n under inversion, which exists for every odd n
    FamilyResult base = family_311_cyclic(n, n - 1, 2, false);
    Digraph base_graph = base.graph.digraph;
    ParamTuple expected;
    if (variant == ProductVariant::T24) {
        expected = {4LL * n * n, 2LL * n * n - 2, 1LL * n * n - 1, 1LL * n * n - 3,
                    1LL * n * n - 1};
    } else {
        base_graph = complement_graph(base_graph);
        expected = {4LL * n * n, 2LL * n * n, 1LL * n * n + 1, 1LL * n * n - 1,
                    1LL * n * n + 1};
    }
    Digraph out = product_theorem21(base_graph);
    VerifyOutcome v = verify_dsrg(out);
    if (!v.ok() || *v.tuple != expected)
        throw InternalCheckError("pipeline: verification mismatch: " + v.describe());
    return {std::move(out), expected};
}

}  // namespace dsrg

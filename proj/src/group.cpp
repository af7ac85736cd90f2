#include "dsrg/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "dsrg/errors.hpp"

namespace dsrg {

FiniteGroup::FiniteGroup(std::vector<int> table, std::vector<std::string> names,
                         std::string description)
    : n_(static_cast<int>(names.size())),
      table_(std::move(table)),
      names_(std::move(names)),
      desc_(std::move(description)) {
    if (n_ <= 0 || table_.size() != static_cast<std::size_t>(n_) * n_)
        throw PreconditionError("group: table size mismatch");
    inverse_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (op(a, b) == 0) inverse_[a] = b;
    validate();
}

void FiniteGroup::validate() const {
    for (int a = 0; a < n_; ++a) {
        if (op(0, a) != a || op(a, 0) != a)
            throw InternalCheckError(desc_ + ": index 0 is not an identity");
        if (inverse_[a] < 0 || op(inverse_[a], a) != 0)
            throw InternalCheckError(desc_ + ": element " + names_[a] + " has no inverse");
        for (int b = 0; b < n_; ++b) {
            int v = op(a, b);
            if (v < 0 || v >= n_)
                throw InternalCheckError(desc_ + ": table entry out of range");
        }
    }
    if (n_ <= 512) {
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    if (op(op(a, b), c) != op(a, op(b, c)))
                        throw InternalCheckError(desc_ + ": associativity fails at (" +
                                                 names_[a] + "," + names_[b] + "," +
                                                 names_[c] + ")");
    } else {
        std::mt19937 rng(0xd5f6);
        std::uniform_int_distribution<int> pick(0, n_ - 1);
        for (int trial = 0; trial < 20000; ++trial) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (op(op(a, b), c) != op(a, op(b, c)))
                throw InternalCheckError(desc_ + ": associativity fails (sampled)");
        }
    }
}

int FiniteGroup::power(int a, std::int64_t e) const {
    if (e < 0) return power(inv(a), -e);
    int r = 0;
    while (e-- > 0) r = op(r, a);
    return r;
}

Subset::Subset(const FiniteGroup& g, std::vector<int> elems)
    : group_(&g), elems_(std::move(elems)), mask_(g.order(), 0) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    for (int x : elems_) {
        if (x < 0 || x >= g.order())
            throw PreconditionError("subset: element out of range");
        mask_[x] = 1;
    }
}

Subset Subset::inverses() const {
    std::vector<int> inv;
    inv.reserve(elems_.size());
    for (int x : elems_) inv.push_back(group_->inv(x));
    return Subset(*group_, std::move(inv));
}

std::string Subset::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) s += ", ";
        s += group_->name(elems_[i]);
    }
    return s + "}";
}

namespace {

std::string pow_name(const std::string& letter, int e) {
    if (e == 0) return "";
    if (e == 1) return letter;
    return letter + "^" + std::to_string(e);
}

std::string joined_name(std::initializer_list<std::string> parts) {
    std::string s;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (!s.empty()) s += " ";
        s += p;
    }
    return s.empty() ? "e" : s;
}

}  // namespace

FiniteGroup cyclic(int n, const std::string& letter) {
    if (n < 1) throw PreconditionError("cyclic: n >= 1 required");
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    std::vector<std::string> names;
    names.reserve(n);
    for (int a = 0; a < n; ++a) names.push_back(a == 0 ? "e" : pow_name(letter, a));
    return FiniteGroup(std::move(table), std::move(names), "C_" + std::to_string(n));
}

FiniteGroup semidirect_product(const FiniteGroup& a, const FiniteGroup& b,
                               const std::function<int(int, int)>& action) {
    int na = a.order(), nb = b.order(), n = na * nb;
    // verify: each action(b,.) is an automorphism of A, and the assignment is
    // a homomorphism B -> Aut A
    for (int y = 0; y < nb; ++y) {
        std::vector<char> seen(na, 0);
        for (int x = 0; x < na; ++x) {
            int fx = action(y, x);
            if (fx < 0 || fx >= na || seen[fx])
                throw PreconditionError("semidirect: action is not a bijection");
            seen[fx] = 1;
        }
        for (int x1 = 0; x1 < na; ++x1)
            for (int x2 = 0; x2 < na; ++x2)
                if (action(y, a.op(x1, x2)) != a.op(action(y, x1), action(y, x2)))
                    throw PreconditionError("semidirect: action is not an automorphism");
    }
    for (int y1 = 0; y1 < nb; ++y1)
        for (int y2 = 0; y2 < nb; ++y2)
            for (int x = 0; x < na; ++x)
                if (action(b.op(y1, y2), x) != action(y1, action(y2, x)))
                    throw PreconditionError("semidirect: action is not a homomorphism");

    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int i1 = 0; i1 < na; ++i1)
        for (int j1 = 0; j1 < nb; ++j1)
            for (int i2 = 0; i2 < na; ++i2)
                for (int j2 = 0; j2 < nb; ++j2) {
                    int lhs = i1 + na * j1, rhs = i2 + na * j2;
                    int prod = a.op(i1, action(j1, i2)) + na * b.op(j1, j2);
                    table[static_cast<std::size_t>(lhs) * n + rhs] = prod;
                }
    std::vector<std::string> names;
    names.reserve(n);
    for (int j = 0; j < nb; ++j)
        for (int i = 0; i < na; ++i)
            names.push_back(joined_name({a.name(i) == "e" ? "" : a.name(i),
                                         b.name(j) == "e" ? "" : b.name(j)}));
    return FiniteGroup(std::move(table), std::move(names),
                       a.description() + " x| " + b.description());
}

FiniteGroup semidirect_cyclic(const SemidirectSpec& spec, const std::string& normal_letter,
                              const std::string& acting_letter) {
    if (spec.n < 1 || spec.m < 1) throw PreconditionError("semidirect: n,m >= 1 required");
    std::int64_t k = ((spec.k % spec.n) + spec.n) % spec.n;
    if (std::gcd(k, static_cast<std::int64_t>(spec.n)) != 1)
        throw PreconditionError("semidirect: gcd(k,n) = 1 required");
    std::int64_t km = 1;
    for (int i = 0; i < spec.m; ++i) km = km * k % spec.n;
    if (km != 1 % spec.n)
        throw PreconditionError("semidirect: k^m = 1 (mod n) required");
    FiniteGroup a = cyclic(spec.n, normal_letter);
    FiniteGroup b = cyclic(spec.m, acting_letter);
    // powers of k mod n per acting exponent
    std::vector<std::int64_t> kp(spec.m, 1);
    for (int j = 1; j < spec.m; ++j) kp[j] = kp[j - 1] * k % spec.n;
    auto action = [&a, kp](int j, int i) {
        return static_cast<int>((kp[j] * i) % a.order());
    };
    return semidirect_product(a, b, action);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    return semidirect_product(a, b, [](int, int x) { return x; });
}

FiniteGroup dihedral(int n) {
    if (n < 2) throw PreconditionError("dihedral: n >= 2 required");
    return semidirect_cyclic({n, 2, n - 1}, "b", "a");
}

FiniteGroup nested_semidirect_314(int p, int n, std::int64_t s) {
    if (p < 2) throw PreconditionError("nested_semidirect_314: p >= 2 required");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw PreconditionError("nested_semidirect_314: p must be prime");
    s = ((s % p) + p) % p;
    if (s == 0) throw PreconditionError("nested_semidirect_314: gcd(s,p) = 1 required");
    if (s == 1) throw PreconditionError("nested_semidirect_314: s != 1 (mod p) required");
    std::int64_t sn = 1;
    for (int i = 0; i < n; ++i) sn = sn * s % p;
    if (sn != 1) throw PreconditionError("nested_semidirect_314: s^n = 1 (mod p) required");

    int order = p * n * p;
    std::vector<std::int64_t> sp(n, 1);  // s^i mod p
    for (int i = 1; i < n; ++i) sp[i] = sp[i - 1] * s % p;
    auto idx = [p, n](int l, int i, int u) { return l + p * (i + n * u); };
    std::vector<int> table(static_cast<std::size_t>(order) * order);
    for (int l1 = 0; l1 < p; ++l1)
        for (int i1 = 0; i1 < n; ++i1)
            for (int u1 = 0; u1 < p; ++u1)
                for (int l2 = 0; l2 < p; ++l2)
                    for (int i2 = 0; i2 < n; ++i2)
                        for (int u2 = 0; u2 < p; ++u2) {
                            // conjugation by a^u1 inside the inner factor:
                            // a^l2 x^i2 -> a^(l2 - u1 + u1 s^i2) x^i2
                            std::int64_t lt =
                                ((l2 - u1 + u1 * sp[i2]) % p + p) % p;
                            int l = static_cast<int>((l1 + lt * sp[i1]) % p);
                            int i = (i1 + i2) % n;
                            int u = (u1 + u2) % p;
                            table[static_cast<std::size_t>(idx(l1, i1, u1)) * order +
                                  idx(l2, i2, u2)] = idx(l, i, u);
                        }
    std::vector<std::string> names;
    names.reserve(order);
    for (int u = 0; u < p; ++u)
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < p; ++l)
                names.push_back(
                    joined_name({pow_name("a", l), pow_name("x", i), pow_name("y", u)}));
    return FiniteGroup(std::move(table), std::move(names),
                       "D_{" + std::to_string(p) + "," + std::to_string(n) + "," +
                           std::to_string(s) + "} x| C_" + std::to_string(p));
}

std::int64_t multiplicative_order(std::int64_t s, std::int64_t n) {
    if (n < 1) throw PreconditionError("multiplicative_order: n >= 1 required");
    s = ((s % n) + n) % n;
    if (std::gcd(s, n) != 1)
        throw PreconditionError("multiplicative_order: gcd(s,n) = 1 required");
    if (n == 1) return 1;
    std::int64_t x = s % n, k = 1;
    while (x != 1) {
        x = x * s % n;
        ++k;
    }
    return k;
}

std::optional<std::int64_t> primitive_root(std::int64_t p) {
    if (p < 2) throw PreconditionError("primitive_root: p >= 2 required");
    std::int64_t phi = 0;
    for (std::int64_t a = 1; a < p; ++a)
        if (std::gcd(a, p) == 1) ++phi;
    if (p == 2) return 1;
    for (std::int64_t s = 2; s < p; ++s) {
        if (std::gcd(s, p) != 1) continue;
        if (multiplicative_order(s, p) == phi) return s;
    }
    return std::nullopt;
}

std::vector<int> power_map(const FiniteGroup& g, std::int64_t s) {
    std::vector<int> beta(g.order());
    for (int x = 0; x < g.order(); ++x) beta[x] = g.power(x, s);
    return beta;
}

OrbitCheck q_orbit_check(const FiniteGroup& g, const std::vector<int>& beta, int q) {
    int n = g.order();
    if (static_cast<int>(beta.size()) != n)
        throw PreconditionError("q_orbit_check: map size != group order");
    std::vector<char> seen(n, 0);
    for (int x = 0; x < n; ++x) {
        if (beta[x] < 0 || beta[x] >= n || seen[beta[x]])
            throw PreconditionError("q_orbit_check: beta is not a bijection");
        seen[beta[x]] = 1;
    }
    if (beta[0] != 0) throw PreconditionError("q_orbit_check: beta does not fix e");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (beta[g.op(x, y)] != g.op(beta[x], beta[y]))
                throw PreconditionError("q_orbit_check: beta is not a homomorphism");

    OrbitCheck res;
    res.ok = true;
    std::vector<char> done(n, 0);
    done[0] = 1;
    for (int x = 1; x < n; ++x) {
        if (done[x]) continue;
        std::vector<int> orb{x};
        done[x] = 1;
        for (int y = beta[x]; y != x; y = beta[y]) {
            orb.push_back(y);
            done[y] = 1;
        }
        if (static_cast<int>(orb.size()) != q) res.ok = false;
        res.orbits.push_back(std::move(orb));
    }
    return res;
}

Subset orbit_representatives(const FiniteGroup& g,
                             const std::vector<std::vector<int>>& orbits) {
    std::vector<int> reps;
    reps.reserve(orbits.size());
    for (const auto& orb : orbits)
        reps.push_back(*std::min_element(orb.begin(), orb.end()));
    return Subset(g, std::move(reps));
}

bool is_subgroup(const FiniteGroup& g, const Subset& h) {
    if (h.size() == 0 || !h.contains(g.identity())) return false;
    for (int a : h.elems())
        for (int b : h.elems())
            if (!h.contains(g.op(a, b))) return false;
    return true;
}

Subset cyclic_subgroup(const FiniteGroup& g, int x) {
    std::vector<int> elems{g.identity()};
    for (int y = x; y != g.identity(); y = g.op(y, x)) elems.push_back(y);
    return Subset(g, std::move(elems));
}

std::vector<Subset> all_subgroups(const FiniteGroup& g) {
    int n = g.order();
    if (n > 16) throw PreconditionError("all_subgroups: order > 16");
    std::vector<Subset> subs;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!(mask & 1)) continue;  // must contain e
        std::vector<int> elems;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) elems.push_back(i);
        Subset h(g, elems);
        if (is_subgroup(g, h)) subs.push_back(std::move(h));
    }
    return subs;
}

std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const Subset& h) {
    if (!is_subgroup(g, h)) throw PreconditionError("left_cosets: H is not a subgroup");
    int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> cosets;
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        std::vector<int> c;
        c.reserve(h.size());
        for (int y : h.elems()) c.push_back(g.op(x, y));
        std::sort(c.begin(), c.end());
        for (int y : c) seen[y] = 1;
        cosets.push_back(std::move(c));
    }
    return cosets;  // ordered by least representative because x scans upward
}

Subset set_stabilizer(const FiniteGroup& g, const Subset& s) {
    std::vector<int> stab;
    for (int x = 0; x < g.order(); ++x) {
        bool keeps = true;
        for (int y : s.elems())
            if (!s.contains(g.op(x, y))) {
                keeps = false;
                break;
            }
        if (keeps) stab.push_back(x);
    }
    return Subset(g, std::move(stab));
}

Subset double_coset(const FiniteGroup& g, const Subset& h, const Subset& s) {
    std::vector<int> out;
    for (int h1 : h.elems())
        for (int x : s.elems())
            for (int h2 : h.elems()) out.push_back(g.op(g.op(h1, x), h2));
    return Subset(g, std::move(out));
}

}  // namespace dsrg

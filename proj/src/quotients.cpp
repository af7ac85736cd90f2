#include "dsrg/quotients.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dsrg/errors.hpp"

namespace dsrg {

namespace {

NeighborPartition partition_by(const Digraph& d, bool out) {
    int n = d.order();
    std::map<std::vector<std::int64_t>, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) {
        std::vector<std::int64_t> key(n);
        for (int w = 0; w < n; ++w)
            key[w] = out ? d.adjacency().at(v, w) : d.adjacency().at(w, v);
        groups[std::move(key)].push_back(v);
    }
    NeighborPartition p;
    p.out = out;
    p.class_of.assign(n, -1);
    std::vector<std::vector<int>> classes;
    classes.reserve(groups.size());
    for (auto& [key, verts] : groups) classes.push_back(std::move(verts));
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int v : classes[c]) p.class_of[v] = static_cast<int>(c);
    p.classes = std::move(classes);
    return p;
}

ParamTuple require_dsrg(const Digraph& d, const char* who) {
    VerifyOutcome v = verify_dsrg(d);
    if (!v.ok())
        throw PreconditionError(std::string(who) + ": not a DSRG (" + v.reason + ")");
    return *v.tuple;
}

}  // namespace

NeighborPartition pout_partition(const Digraph& d) { return partition_by(d, true); }
NeighborPartition pin_partition(const Digraph& d) { return partition_by(d, false); }

BoundReport bounds_check(const ParamTuple& p, const NeighborPartition& part) {
    BoundReport rep{};
    rep.class_cap = std::min(p.k - p.lambda, p.n - 2 * p.k + p.t);
    rep.max_class = 0;
    for (const auto& c : part.classes)
        rep.max_class = std::max<std::int64_t>(rep.max_class, c.size());
    if (rep.max_class > rep.class_cap)
        throw InternalCheckError("bounds_check: class of size " +
                                 std::to_string(rep.max_class) + " exceeds min(k-lambda, n-2k+t) = " +
                                 std::to_string(rep.class_cap) + " for " + p.str());
    rep.pair_applicable = p.lambda > 0 && part.classes.size() >= 2;
    if (rep.pair_applicable) {
        std::int64_t beta =
            std::min({p.k - p.lambda, p.mu, p.n - 2 * p.k + p.t});
        rep.pair_cap = std::max(p.k, p.n - 2 * p.k + 2 * beta);
        std::vector<std::int64_t> sizes;
        sizes.reserve(part.classes.size());
        for (const auto& c : part.classes) sizes.push_back(static_cast<std::int64_t>(c.size()));
        std::sort(sizes.rbegin(), sizes.rend());
        rep.max_pair_sum = sizes[0] + sizes[1];
        if (rep.max_pair_sum > rep.pair_cap)
            throw InternalCheckError("bounds_check: class pair sum " +
                                     std::to_string(rep.max_pair_sum) +
                                     " exceeds max(k, n-2k+2beta) = " +
                                     std::to_string(rep.pair_cap) + " for " + p.str());
    }
    return rep;
}

QuotientResult quotient_graph(const CayleyGraph& c, bool out_side) {
    ParamTuple p = require_dsrg(c.digraph, "quotient_graph");
    const FiniteGroup& g = *c.group;
    Subset stab_set = out_side ? c.connection : c.connection.inverses();
    Subset stab = set_stabilizer(g, stab_set);
    std::int64_t cs = stab.size();
    for (std::int64_t field : {p.n, p.k, p.mu, p.lambda, p.t})
        if (field % cs != 0)
            throw QuotientError(QuotientError::Kind::NonDivisible,
                                "quotient_graph: parameter " + std::to_string(field) +
                                    " of " + p.str() + " is not divisible by |stabilizer| = " +
                                    std::to_string(cs));
    auto cosets = left_cosets(g, stab);
    int q = static_cast<int>(cosets.size());
    const DenseIntMatrix& a = c.digraph.adjacency();
    DenseIntMatrix quot(q);
    for (int ci = 0; ci < q; ++ci)
        for (int cj = 0; cj < q; ++cj) {
            std::int64_t arcs = 0;
            for (int x : cosets[ci])
                for (int y : cosets[cj]) arcs += a.at(x, y);
            std::int64_t full = static_cast<std::int64_t>(cosets[ci].size()) *
                                static_cast<std::int64_t>(cosets[cj].size());
            if (arcs != 0 && arcs != full)
                throw QuotientError(
                    QuotientError::Kind::NonUniform,
                    "quotient_graph: arc pattern between cosets " + g.name(cosets[ci][0]) +
                        "K and " + g.name(cosets[cj][0]) + "K is neither empty nor complete (" +
                        std::to_string(arcs) + "/" + std::to_string(full) +
                        " arcs); the quotient digraph is not well defined here");
            if (arcs == full && ci != cj) quot.at(ci, cj) = 1;
            if (arcs != 0 && ci == cj)
                throw InternalCheckError("quotient_graph: arcs inside a stabilizer coset");
        }
    std::vector<std::string> labels;
    labels.reserve(q);
    for (const auto& cst : cosets) labels.push_back(g.name(cst[0]) + "K");
    Digraph qd(std::move(quot), std::move(labels));
    ParamTuple expect{p.n / cs, p.k / cs, p.mu / cs, p.lambda / cs, p.t / cs};
    VerifyOutcome v = verify_dsrg(qd);
    if (!v.ok() || *v.tuple != expect)
        throw InternalCheckError("quotient_graph: quotient verified as " + v.describe() +
                                 ", expected " + expect.str());
    return QuotientResult{std::move(qd), expect, std::move(stab)};
}

StabilizerReport stabilizer_facts(const CayleyGraph& c) {
    ParamTuple p = require_dsrg(c.digraph, "stabilizer_facts");
    const FiniteGroup& g = *c.group;
    StabilizerReport rep{p,
                         set_stabilizer(g, c.connection),
                         set_stabilizer(g, c.connection.inverses()),
                         0,
                         false,
                         false,
                         false,
                         false};

    // P_out classes are the left cosets of G_S (and P_in of G_{S^-1});
    // this is sound: x,y share an out-set iff x^-1 y stabilizes S.
    for (bool out : {true, false}) {
        const Subset& stab = out ? rep.g_s : rep.g_s_inv;
        NeighborPartition part = out ? pout_partition(c.digraph) : pin_partition(c.digraph);
        if (part.classes != left_cosets(g, stab))
            throw InternalCheckError(
                "stabilizer_facts: neighbour classes differ from stabilizer cosets");
        bounds_check(p, part);  // class size bound, subsumes fact (b)
    }
    if (p.t != p.mu && (rep.g_s.size() != 1 || rep.g_s_inv.size() != 1))
        throw InternalCheckError(
            "stabilizer_facts: t != mu but a stabilizer is nontrivial for " + p.str());

    rep.gcd_all = std::gcd(std::gcd(p.n, p.k), std::gcd(p.mu, std::gcd(p.lambda, p.t)));
    auto divides_all = [&p](std::int64_t s) {
        return p.n % s == 0 && p.k % s == 0 && p.mu % s == 0 && p.lambda % s == 0 &&
               p.t % s == 0;
    };
    rep.gcd_divisibility_out = divides_all(rep.g_s.size());
    rep.gcd_divisibility_in = divides_all(rep.g_s_inv.size());
    rep.gcd1_triviality_out = rep.gcd_all != 1 || rep.g_s.size() == 1;
    rep.gcd1_triviality_in = rep.gcd_all != 1 || rep.g_s_inv.size() == 1;
    return rep;
}

BigUint aut_bound(const CayleyGraph& c) {
    require_dsrg(c.digraph, "aut_bound");
    const FiniteGroup& g = *c.group;
    std::int64_t n = g.order();
    auto side = [n](std::int64_t stab_order) {
        std::int64_t q = n / stab_order;
        return BigUint::factorial(static_cast<std::uint64_t>(q)) *
               BigUint::factorial(static_cast<std::uint64_t>(stab_order))
                   .pow(static_cast<std::uint64_t>(q));
    };
    BigUint out = side(set_stabilizer(g, c.connection).size());
    BigUint in = side(set_stabilizer(g, c.connection.inverses()).size());
    return out <= in ? out : in;
}

std::int64_t brute_force_aut(const Digraph& d) {
    if (d.order() > 10)
        throw PreconditionError("brute_force_aut: order > 10");
    const DenseIntMatrix& a = d.adjacency();
    // image extension with degree prescreen and partial-adjacency pruning
    struct Counter {
        const DenseIntMatrix& a;
        std::vector<std::int64_t> rows, cols;
        std::int64_t count = 0;
        std::vector<int> img;
        std::vector<char> used;
        void run(int v) {
            int n = a.order();
            if (v == n) {
                ++count;
                return;
            }
            for (int w = 0; w < n; ++w) {
                if (used[w] || rows[v] != rows[w] || cols[v] != cols[w]) continue;
                bool ok = true;
                for (int u = 0; u < v && ok; ++u)
                    ok = a.at(u, v) == a.at(img[u], w) && a.at(v, u) == a.at(w, img[u]);
                if (!ok) continue;
                img[v] = w;
                used[w] = 1;
                run(v + 1);
                used[w] = 0;
            }
        }
    } counter{a, a.row_sums(), a.col_sums(), 0, std::vector<int>(d.order(), -1),
              std::vector<char>(d.order(), 0)};
    counter.run(0);
    return counter.count;
}

}  // namespace dsrg

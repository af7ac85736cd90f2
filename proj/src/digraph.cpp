#include "dsrg/digraph.hpp"

#include "dsrg/errors.hpp"

namespace dsrg {

Digraph::Digraph(DenseIntMatrix adj, std::vector<std::string> labels)
    : adj_(std::move(adj)), labels_(std::move(labels)) {
    int n = adj_.order();
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
        throw PreconditionError("digraph: label count != order");
    for (int i = 0; i < n; ++i) {
        if (adj_.at(i, i) != 0)
            throw PreconditionError("digraph: loop at vertex " + std::to_string(i));
        for (int j = 0; j < n; ++j) {
            std::int64_t v = adj_.at(i, j);
            if (v != 0 && v != 1)
                throw PreconditionError("digraph: entry not 0/1 at (" + std::to_string(i) +
                                        "," + std::to_string(j) + ")");
        }
    }
}

std::string Digraph::label(int v) const {
    if (!labels_.empty()) return labels_[v];
    return std::to_string(v);
}

std::int64_t Digraph::arc_count() const {
    std::int64_t c = 0;
    for (auto s : adj_.row_sums()) c += s;
    return c;
}

std::string VerifyOutcome::describe() const {
    if (ok()) return tuple->str() + " " + to_string(tuple->cls());
    std::string s = "NotDSRG: " + reason;
    if (i >= 0) s += " at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    return s;
}

VerifyOutcome verify_dsrg(const Digraph& d) {
    const DenseIntMatrix& a = d.adjacency();
    int n = a.order();
    VerifyOutcome out;
    if (n == 0) {
        out.reason = "empty graph";
        return out;
    }
    auto rows = a.row_sums();
    std::int64_t k = rows[0];
    for (int i = 0; i < n; ++i)
        if (rows[i] != k) {
            out.reason = "not out-regular (row sum " + std::to_string(rows[i]) +
                         " != " + std::to_string(k) + ")";
            out.i = i;
            return out;
        }
    auto cols = a.col_sums();
    for (int j = 0; j < n; ++j)
        if (cols[j] != k) {
            out.reason = "not in-regular (column sum " + std::to_string(cols[j]) +
                         " != " + std::to_string(k) + ")";
            out.j = j;
            return out;
        }

    DenseIntMatrix a2 = a * a;
    std::int64_t t = a2.at(0, 0);
    for (int i = 0; i < n; ++i)
        if (a2.at(i, i) != t) {
            out.reason = "t-class non-constant (" + std::to_string(a2.at(i, i)) +
                         " != " + std::to_string(t) + ")";
            out.i = out.j = i;
            return out;
        }

    std::int64_t lambda = -1, mu = -1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            std::int64_t v = a2.at(i, j);
            if (a.at(i, j) == 1) {
                if (lambda < 0) lambda = v;
                if (v != lambda) {
                    out.reason = "lambda-class non-constant (" + std::to_string(v) +
                                 " != " + std::to_string(lambda) + ")";
                    out.i = i;
                    out.j = j;
                    return out;
                }
            }
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || a.at(i, j) == 1) continue;
            std::int64_t v = a2.at(i, j);
            if (mu < 0) mu = v;
            if (v != mu) {
                out.reason = "mu-class non-constant (" + std::to_string(v) +
                             " != " + std::to_string(mu) + ")";
                out.i = i;
                out.j = j;
                return out;
            }
        }
    if (lambda < 0) lambda = 0;  // no arcs
    if (mu < 0) mu = t;          // complete digraph
    out.tuple = ParamTuple{n, k, mu, lambda, t};
    return out;
}

Digraph complement_graph(const Digraph& d) {
    int n = d.order();
    DenseIntMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) c.at(i, j) = 1 - d.adjacency().at(i, j);
    return Digraph(std::move(c), d.labels());
}

std::int64_t count_paths2(const DenseIntMatrix& adj, int x, int y) {
    int n = adj.order();
    if (x < 0 || x >= n || y < 0 || y >= n)
        throw PreconditionError("count_paths2: vertex out of range");
    std::int64_t c = 0;
    for (int z = 0; z < n; ++z)
        if (adj.at(x, z) != 0 && adj.at(z, y) != 0) ++c;
    return c;
}

std::int64_t count_paths2(const Digraph& d, int x, int y) {
    return count_paths2(d.adjacency(), x, y);
}

namespace {

ParamTuple require_verified(const Digraph& d, const char* who) {
    VerifyOutcome v = verify_dsrg(d);
    if (!v.ok())
        throw PreconditionError(std::string(who) + ": input is not a DSRG (" + v.reason + ")");
    return *v.tuple;
}

std::vector<std::string> expanded_labels(const Digraph& d, int m) {
    std::vector<std::string> lab;
    lab.reserve(static_cast<std::size_t>(d.order()) * m);
    for (int i = 0; i < d.order(); ++i)
        for (int c = 0; c < m; ++c) lab.push_back(d.label(i) + ":" + std::to_string(c));
    return lab;
}

}  // namespace

Digraph expand_t_mu(const Digraph& d, int m) {
    if (m < 1) throw PreconditionError("expand_t_mu: m >= 1 required");
    ParamTuple p = require_verified(d, "expand_t_mu");
    if (p.t != p.mu)
        throw PreconditionError("expand_t_mu: t = mu required, got " + p.str());
    return Digraph(kronecker(d.adjacency(), DenseIntMatrix::ones(m)), expanded_labels(d, m));
}

Digraph expand_t_lambda1(const Digraph& d, int m) {
    if (m < 1) throw PreconditionError("expand_t_lambda1: m >= 1 required");
    ParamTuple p = require_verified(d, "expand_t_lambda1");
    if (p.t != p.lambda + 1)
        throw PreconditionError("expand_t_lambda1: t = lambda+1 required, got " + p.str());
    int n = d.order();
    DenseIntMatrix blocks = kronecker(d.adjacency(), DenseIntMatrix::ones(m)) +
                            kronecker(DenseIntMatrix::identity(n),
                                      DenseIntMatrix::ones(m) - DenseIntMatrix::identity(m));
    return Digraph(std::move(blocks), expanded_labels(d, m));
}

Digraph product_theorem21(const Digraph& d) {
    ParamTuple p = require_verified(d, "product_theorem21");
    if (p.t != p.mu)
        throw PreconditionError("product_theorem21: t = mu required, got " + p.str());
    if (4 * p.k != p.n + 2 * p.lambda + 2 * p.mu)
        throw PreconditionError("product_theorem21: 4k = n+2lambda+2mu required, got " + p.str());
    int n = d.order();
    DenseIntMatrix ja = DenseIntMatrix::ones(n) - d.adjacency();  // diagonal entries are 1
    DenseIntMatrix b =
        kronecker(ja, d.adjacency()) + kronecker(d.adjacency(), ja);
    std::vector<std::string> lab;
    lab.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) lab.push_back(d.label(i) + "|" + d.label(j));
    return Digraph(std::move(b), std::move(lab));
}

}  // namespace dsrg

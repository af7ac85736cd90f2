#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsrg/matrix.hpp"
#include "dsrg/params.hpp"

namespace dsrg {

// Loopless digraph as an exact 0/1 adjacency matrix, optionally with vertex
// labels (group element names survive into diagnostics and exports).
class Digraph {
  public:
    explicit Digraph(DenseIntMatrix adj, std::vector<std::string> labels = {});

    int order() const { return adj_.order(); }
    bool arc(int i, int j) const { return adj_.at(i, j) != 0; }
    const DenseIntMatrix& adjacency() const { return adj_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int v) const;
    std::int64_t arc_count() const;

    bool operator==(const Digraph& o) const { return adj_ == o.adj_; }

  private:
    DenseIntMatrix adj_;
    std::vector<std::string> labels_;
};

// Outcome of the defining-equation check: either the verified tuple or the
// first violated condition with a witness position.  Condition order is
// fixed: regularity, diagonal constancy, lambda constancy, mu constancy.
struct VerifyOutcome {
    std::optional<ParamTuple> tuple;
    std::string reason;
    int i = -1, j = -1;

    bool ok() const { return tuple.has_value(); }
    std::string describe() const;
};

// Checks AJ = JA = kJ and A^2 = tI + lambda*A + mu*(J-I-A) entrywise over the
// integers.  Degenerate classes: with no arcs lambda := 0; for the complete
// digraph (empty mu class) mu := t, which matches the closed-form family
// parameters in the degenerate cases.
VerifyOutcome verify_dsrg(const Digraph& d);

// J - I - A.
Digraph complement_graph(const Digraph& d);

// |{z : x->z and z->y}| by enumeration; equals (A^2)_xy.
std::int64_t count_paths2(const Digraph& d, int x, int y);
std::int64_t count_paths2(const DenseIntMatrix& adj, int x, int y);

// A (x) J_m.  Requires a verified tuple with t = mu; output verifies as
// (mn, mk, m*mu, m*lambda, m*t).
Digraph expand_t_mu(const Digraph& d, int m);

// A (x) J_m + I_n (x) (J_m - I_m).  Requires t = lambda + 1; output verifies
// as (mn, m(k+1)-1, m*mu, m(t+1)-2, m(t+1)-1).
Digraph expand_t_lambda1(const Digraph& d, int m);

// (J-A) (x) A + A (x) (J-A).  Requires t = mu and 4k = n + 2lambda + 2mu;
// output verifies as product_params of the input tuple.
Digraph product_theorem21(const Digraph& d);

}  // namespace dsrg

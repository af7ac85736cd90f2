#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsrg/group.hpp"
#include "dsrg/params.hpp"

namespace dsrg {

// Element of the integer group ring Z[G]: a coefficient per group element.
// The product is the convolution t_g = sum over g'g'' = g of r_g' s_g''.
class GroupRingElement {
  public:
    GroupRingElement(const FiniteGroup& g, std::vector<std::int64_t> coeffs);
    static GroupRingElement zero(const FiniteGroup& g);
    static GroupRingElement basis(const FiniteGroup& g, int x);  // one element

    const FiniteGroup& group() const { return *group_; }
    std::int64_t coeff(int x) const { return c_[x]; }
    std::int64_t& coeff(int x) { return c_[x]; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator*(const GroupRingElement& o) const;
    GroupRingElement scaled(std::int64_t f) const;
    bool operator==(const GroupRingElement& o) const { return c_ == o.c_; }

    std::int64_t coeff_sum() const;

  private:
    const FiniteGroup* group_;
    std::vector<std::int64_t> c_;
};

// X-bar: the sum of all elements of a subset.
GroupRingElement subset_sum(const Subset& s);
GroupRingElement group_sum(const FiniteGroup& g);

// Outcome of a group-ring DSRG criterion: the tuple, or the witness element
// with the two clashing coefficients.
struct CriterionOutcome {
    std::optional<ParamTuple> tuple;
    std::string reason;
    int witness = -1;
    bool ok() const { return tuple.has_value(); }
    std::string describe(const FiniteGroup& g) const;
};

// S-bar^2 = t e + lambda S-bar + mu (G-bar - e - S-bar): reads t at the
// identity, lambda on S, mu elsewhere, each required constant.  e must not
// lie in S.  Degenerate empty classes follow verify_dsrg's conventions.
CriterionOutcome cayley_criterion(const FiniteGroup& g, const Subset& s);

// The coset-graph criterion: with K = HSH,
// (1/|H|) K-bar^2 = t e + lambda K-bar + mu (G-bar - e - K-bar) classified on
// [G:H]; every coefficient of K-bar^2 must be divisible by |H|, and e must
// not lie in K (a loop).  On success returns (|G:H|, |K|/|H|, mu, lambda, t).
CriterionOutcome coset_criterion(const FiniteGroup& g, const Subset& h, const Subset& s);

}  // namespace dsrg

#include "dsrg/group_ring.hpp"

#include "dsrg/checked.hpp"
#include "dsrg/errors.hpp"

namespace dsrg {

GroupRingElement::GroupRingElement(const FiniteGroup& g, std::vector<std::int64_t> coeffs)
    : group_(&g), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != g.order())
        throw PreconditionError("group ring: coefficient count != group order");
}

GroupRingElement GroupRingElement::zero(const FiniteGroup& g) {
    return GroupRingElement(g, std::vector<std::int64_t>(g.order(), 0));
}

GroupRingElement GroupRingElement::basis(const FiniteGroup& g, int x) {
    auto e = zero(g);
    e.coeff(x) = 1;
    return e;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    if (group_ != o.group_) throw PreconditionError("group ring add: group mismatch");
    GroupRingElement r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = checked_add(r.c_[i], o.c_[i]);
    return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    if (group_ != o.group_) throw PreconditionError("group ring mul: group mismatch");
    GroupRingElement r = zero(*group_);
    int n = group_->order();
    for (int x = 0; x < n; ++x) {
        if (c_[x] == 0) continue;
        for (int y = 0; y < n; ++y) {
            if (o.c_[y] == 0) continue;
            int z = group_->op(x, y);
            r.c_[z] = checked_add(r.c_[z], checked_mul(c_[x], o.c_[y]));
        }
    }
    return r;
}

GroupRingElement GroupRingElement::scaled(std::int64_t f) const {
    GroupRingElement r = *this;
    for (auto& v : r.c_) v = checked_mul(v, f);
    return r;
}

std::int64_t GroupRingElement::coeff_sum() const {
    std::int64_t s = 0;
    for (auto v : c_) s = checked_add(s, v);
    return s;
}

GroupRingElement subset_sum(const Subset& s) {
    auto e = GroupRingElement::zero(s.group());
    for (int x : s.elems()) e.coeff(x) = 1;
    return e;
}

GroupRingElement group_sum(const FiniteGroup& g) {
    return GroupRingElement(g, std::vector<std::int64_t>(g.order(), 1));
}

std::string CriterionOutcome::describe(const FiniteGroup& g) const {
    if (ok()) return tuple->str() + " " + to_string(tuple->cls());
    std::string s = "NotDSRG: " + reason;
    if (witness >= 0) s += " at " + g.name(witness);
    return s;
}

namespace {

// Classify the coefficients of sq (already divided by the coset size) into
// the identity / member / non-member classes of `members`.
CriterionOutcome classify(const FiniteGroup& g, const GroupRingElement& sq,
                          const Subset& members, std::int64_t n, std::int64_t k) {
    CriterionOutcome out;
    std::int64_t t = sq.coeff(g.identity());
    std::int64_t lambda = -1, mu = -1;
    for (int x = 0; x < g.order(); ++x) {
        if (x == g.identity()) continue;
        std::int64_t v = sq.coeff(x);
        if (members.contains(x)) {
            if (lambda < 0) lambda = v;
            if (v != lambda) {
                out.reason = "lambda-class non-constant (" + std::to_string(v) +
                             " != " + std::to_string(lambda) + ")";
                out.witness = x;
                return out;
            }
        } else {
            if (mu < 0) mu = v;
            if (v != mu) {
                out.reason = "mu-class non-constant (" + std::to_string(v) +
                             " != " + std::to_string(mu) + ")";
                out.witness = x;
                return out;
            }
        }
    }
    if (lambda < 0) lambda = 0;
    if (mu < 0) mu = t;
    out.tuple = ParamTuple{n, k, mu, lambda, t};
    return out;
}

}  // namespace

CriterionOutcome cayley_criterion(const FiniteGroup& g, const Subset& s) {
    if (s.contains(g.identity()))
        throw PreconditionError("cayley_criterion: identity in connection set");
    GroupRingElement sbar = subset_sum(s);
    return classify(g, sbar * sbar, s, g.order(), s.size());
}

CriterionOutcome coset_criterion(const FiniteGroup& g, const Subset& h, const Subset& s) {
    if (!is_subgroup(g, h)) throw PreconditionError("coset_criterion: H is not a subgroup");
    Subset hsh = double_coset(g, h, s);
    CriterionOutcome out;
    if (hsh.contains(g.identity())) {
        out.reason = "identity in HSH (coset graph would have loops)";
        out.witness = g.identity();
        return out;
    }
    GroupRingElement kbar = subset_sum(hsh);
    GroupRingElement sq = kbar * kbar;
    std::int64_t hsize = h.size();
    for (int x = 0; x < g.order(); ++x) {
        if (sq.coeff(x) % hsize != 0) {
            out.reason = "coefficient " + std::to_string(sq.coeff(x)) +
                         " not divisible by |H| = " + std::to_string(hsize);
            out.witness = x;
            return out;
        }
        sq.coeff(x) /= hsize;
    }
    // The five parameters live on [G:H]; coefficient classes are constant on
    // cosets exactly when the graph-side equation holds.
    return classify(g, sq, hsh, g.order() / hsize, hsh.size() / hsize);
}

}  // namespace dsrg

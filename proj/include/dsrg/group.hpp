#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dsrg {

// Enumerable finite group: elements are canonical indices 0..order-1 with
// index 0 the identity, a full multiplication table, inverses, and printable
// names.  Group axioms are verified exhaustively at construction for order
// <= 512 and on random samples above.
class FiniteGroup {
  public:
    FiniteGroup(std::vector<int> table, std::vector<std::string> names,
                std::string description);

    int order() const { return n_; }
    int op(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    int identity() const { return 0; }
    const std::string& name(int a) const { return names_[a]; }
    const std::string& description() const { return desc_; }

    int power(int a, std::int64_t e) const;

  private:
    int n_;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<std::string> names_;
    std::string desc_;

    void validate() const;
};

// Subset of a group's elements, kept sorted; O(1) membership.
class Subset {
  public:
    Subset() = default;
    Subset(const FiniteGroup& g, std::vector<int> elems);

    const FiniteGroup& group() const { return *group_; }
    const std::vector<int>& elems() const { return elems_; }
    bool contains(int x) const { return mask_[x] != 0; }
    int size() const { return static_cast<int>(elems_.size()); }
    bool operator==(const Subset& o) const { return mask_ == o.mask_; }

    Subset inverses() const;
    std::string str() const;

  private:
    const FiniteGroup* group_ = nullptr;
    std::vector<int> elems_;
    std::vector<char> mask_;
};

// --- constructors -----------------------------------------------------------

// Cyclic group of order n; elements x^0..x^(n-1).
FiniteGroup cyclic(int n, const std::string& letter = "x");

// Cyclic-by-cyclic data: normal factor C_n, acting factor C_m, action
// multiplier k with gcd(k,n) = 1 and k^m = 1 (mod n).  The product rule is
// (i,j)(i',j') = (i + k^j i', j + j'); equivalently x a = a^k x for the
// acting generator x and normal generator a.
struct SemidirectSpec {
    int n;
    int m;
    std::int64_t k;
};

// General semidirect product A x| B.  action(b, a) must give the image of
// a in A under the automorphism attached to b in B; it is verified to be an
// action by automorphisms.  Element (a,b) has index a + |A|*b.
FiniteGroup semidirect_product(const FiniteGroup& a, const FiniteGroup& b,
                               const std::function<int(int, int)>& action);

FiniteGroup semidirect_cyclic(const SemidirectSpec& spec,
                              const std::string& normal_letter = "a",
                              const std::string& acting_letter = "x");

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Dihedral group of order 2n as C_n x| C_2 with inversion action.
FiniteGroup dihedral(int n);

// Group (C_p x| C_n) x| C_p of order p^2 n: the inner factor has relation
// x^t a^u = a^(u s^t) x^t, the outer C_p acts by conjugation by powers of a.
// Requires p prime, gcd(s,p) = 1, s != 1 (mod p), s^n = 1 (mod p).
// Element (a^l x^i, y^u) has index l + p*(i + n*u).
FiniteGroup nested_semidirect_314(int p, int n, std::int64_t s);

// --- number-theoretic helpers ----------------------------------------------

// delta_n(s): least positive k with s^k = 1 (mod n).  gcd(s,n) = 1 required.
std::int64_t multiplicative_order(std::int64_t s, std::int64_t n);

// Smallest primitive root mod p, or nullopt when none exists
// (p must be 2, 4, q^k or 2 q^k for an odd prime q).
std::optional<std::int64_t> primitive_root(std::int64_t p);

// --- subsets, orbits, cosets, stabilizers -----------------------------------

// Partition of G\{e} into orbits of the map beta (given as an element map,
// verified to be an automorphism).  Passes iff every orbit has size exactly q.
struct OrbitCheck {
    bool ok;
    std::vector<std::vector<int>> orbits;  // of G\{e}, sorted by least element
};
OrbitCheck q_orbit_check(const FiniteGroup& g, const std::vector<int>& beta, int q);

// The power map a -> a^s as an element map on a cyclic group.
std::vector<int> power_map(const FiniteGroup& cyclic_group, std::int64_t s);

// Least element of each orbit.
Subset orbit_representatives(const FiniteGroup& g,
                             const std::vector<std::vector<int>>& orbits);

bool is_subgroup(const FiniteGroup& g, const Subset& h);

// Subgroup generated by one element.
Subset cyclic_subgroup(const FiniteGroup& g, int x);

// All subgroups, by subset enumeration; order <= 16 only (test-scale).
std::vector<Subset> all_subgroups(const FiniteGroup& g);

// Left cosets xH in order of least representative; h must be a subgroup.
std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const Subset& h);

// {g : gS = S}; always a subgroup.
Subset set_stabilizer(const FiniteGroup& g, const Subset& s);

// Double coset closure HSH = {h1 s h2}.
Subset double_coset(const FiniteGroup& g, const Subset& h, const Subset& s);

}  // namespace dsrg

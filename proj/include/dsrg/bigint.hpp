#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dsrg {

// Unsigned big integer, base 1e9 limbs.  Only what the automorphism bound
// needs: multiplication, factorials, comparison, decimal rendering.
class BigUint {
  public:
    BigUint() : limbs_{0} {}
    explicit BigUint(std::uint64_t v) {
        do {
            limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
            v /= kBase;
        } while (v != 0);
    }

    static BigUint factorial(std::uint64_t n) {
        BigUint r(1);
        for (std::uint64_t i = 2; i <= n; ++i) r = r.mul_small(i);
        return r;
    }

    BigUint mul_small(std::uint64_t f) const {
        BigUint r;
        r.limbs_.assign(limbs_.size() + 3, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * f + carry;
            r.limbs_[i] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        std::size_t i = limbs_.size();
        while (carry) {
            r.limbs_[i++] = static_cast<std::uint32_t>(carry % kBase);
            carry /= kBase;
        }
        r.trim();
        return r;
    }

    BigUint operator*(const BigUint& o) const {
        BigUint r;
        r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j] +
                                    r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            std::size_t k = i + o.limbs_.size();
            while (carry) {
                std::uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k++] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
        }
        r.trim();
        return r;
    }

    BigUint pow(std::uint64_t e) const {
        BigUint r(1);
        for (std::uint64_t i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    int compare(const BigUint& o) const {
        if (limbs_.size() != o.limbs_.size())
            return limbs_.size() < o.limbs_.size() ? -1 : 1;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
        return 0;
    }
    bool operator<(const BigUint& o) const { return compare(o) < 0; }
    bool operator<=(const BigUint& o) const { return compare(o) <= 0; }
    bool operator==(const BigUint& o) const { return compare(o) == 0; }

    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t as_u64() const {
        std::uint64_t v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
        return v;
    }

    std::string to_string() const {
        std::string s = std::to_string(limbs_.back());
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs_[i]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

  private:
    static constexpr std::uint64_t kBase = 1000000000;
    std::vector<std::uint32_t> limbs_;
    void trim() {
        while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
    }
};

}  // namespace dsrg

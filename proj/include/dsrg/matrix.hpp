#pragma once

#include <cstdint>
#include <vector>

#include "dsrg/checked.hpp"

namespace dsrg {

// Dense square matrix over the integers.  All arithmetic is exact and
// overflow-checked; desk-scale orders make O(n^3) multiplication cheap.
class DenseIntMatrix {
  public:
    DenseIntMatrix() : n_(0) {}
    explicit DenseIntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

    static DenseIntMatrix identity(int n);
    static DenseIntMatrix ones(int n);

    int order() const { return n_; }
    std::int64_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    std::int64_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    DenseIntMatrix operator+(const DenseIntMatrix& o) const;
    DenseIntMatrix operator-(const DenseIntMatrix& o) const;
    DenseIntMatrix operator*(const DenseIntMatrix& o) const;
    DenseIntMatrix scaled(std::int64_t c) const;
    bool operator==(const DenseIntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

    std::int64_t trace() const;
    std::vector<std::int64_t> row_sums() const;
    std::vector<std::int64_t> col_sums() const;

  private:
    int n_;
    std::vector<std::int64_t> a_;
};

// Block matrix (a_ij * B) of order |A|*|B|.
DenseIntMatrix kronecker(const DenseIntMatrix& a, const DenseIntMatrix& b);

}  // namespace dsrg

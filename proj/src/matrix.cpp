#include "dsrg/matrix.hpp"

#include "dsrg/errors.hpp"

namespace dsrg {

DenseIntMatrix DenseIntMatrix::identity(int n) {
    DenseIntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

DenseIntMatrix DenseIntMatrix::ones(int n) {
    DenseIntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = 1;
    return m;
}

DenseIntMatrix DenseIntMatrix::operator+(const DenseIntMatrix& o) const {
    if (n_ != o.n_) throw PreconditionError("matrix add: order mismatch");
    DenseIntMatrix r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = checked_add(a_[i], o.a_[i]);
    return r;
}

DenseIntMatrix DenseIntMatrix::operator-(const DenseIntMatrix& o) const {
    if (n_ != o.n_) throw PreconditionError("matrix sub: order mismatch");
    DenseIntMatrix r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = checked_sub(a_[i], o.a_[i]);
    return r;
}

DenseIntMatrix DenseIntMatrix::operator*(const DenseIntMatrix& o) const {
    if (n_ != o.n_) throw PreconditionError("matrix mul: order mismatch");
    DenseIntMatrix r(n_);
    for (int i = 0; i < n_; ++i) {
        for (int l = 0; l < n_; ++l) {
            std::int64_t v = at(i, l);
            if (v == 0) continue;
            for (int j = 0; j < n_; ++j)
                r.at(i, j) = checked_add(r.at(i, j), checked_mul(v, o.at(l, j)));
        }
    }
    return r;
}

DenseIntMatrix DenseIntMatrix::scaled(std::int64_t c) const {
    DenseIntMatrix r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = checked_mul(a_[i], c);
    return r;
}

std::int64_t DenseIntMatrix::trace() const {
    std::int64_t s = 0;
    for (int i = 0; i < n_; ++i) s = checked_add(s, at(i, i));
    return s;
}

std::vector<std::int64_t> DenseIntMatrix::row_sums() const {
    std::vector<std::int64_t> s(n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) s[i] = checked_add(s[i], at(i, j));
    return s;
}

std::vector<std::int64_t> DenseIntMatrix::col_sums() const {
    std::vector<std::int64_t> s(n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) s[j] = checked_add(s[j], at(i, j));
    return s;
}

DenseIntMatrix kronecker(const DenseIntMatrix& a, const DenseIntMatrix& b) {
    int na = a.order(), nb = b.order();
    DenseIntMatrix r(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            std::int64_t v = a.at(i, j);
            if (v == 0) continue;
            for (int p = 0; p < nb; ++p)
                for (int q = 0; q < nb; ++q)
                    r.at(i * nb + p, j * nb + q) = checked_mul(v, b.at(p, q));
        }
    return r;
}

}  // namespace dsrg

#pragma once

#include <stdexcept>
#include <vector>

#include "ekr/rational.hpp"

namespace ekr {

// Dense matrix of exact rationals. Sized for the explicit-operator oracles
// (n! <= 720 rows), not for large linear algebra.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

inline RatMatrix matmul_serial(const RatMatrix& x, const RatMatrix& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("matmul: shape mismatch");
    RatMatrix z(x.rows(), y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int k = 0; k < x.cols(); ++k) {
            const Rational& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols(); ++j) z.at(i, j) += v * y.at(k, j);
        }
    return z;
}

// OpenMP row-parallel product; must agree entrywise with matmul_serial.
inline RatMatrix matmul(const RatMatrix& x, const RatMatrix& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("matmul: shape mismatch");
    RatMatrix z(x.rows(), y.cols());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < x.rows(); ++i)
        for (int k = 0; k < x.cols(); ++k) {
            const Rational& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols(); ++j) z.at(i, j) += v * y.at(k, j);
        }
    return z;
}

inline RatMatrix scale(const RatMatrix& x, const Rational& c) {
    RatMatrix z(x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) z.at(i, j) = c * x.at(i, j);
    return z;
}

inline RatMatrix add(const RatMatrix& x, const RatMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("add: shape mismatch");
    RatMatrix z(x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) z.at(i, j) = x.at(i, j) + y.at(i, j);
    return z;
}

inline std::vector<Rational> apply(const RatMatrix& x, const std::vector<Rational>& v) {
    if (x.cols() != static_cast<int>(v.size()))
        throw std::invalid_argument("apply: shape mismatch");
    std::vector<Rational> out(x.rows());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) out[i] += x.at(i, j) * v[j];
    return out;
}

}  // namespace ekr

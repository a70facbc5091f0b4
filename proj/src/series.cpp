#include "ty3/series.hpp"

#include <stdexcept>

namespace ty3 {

ElementSeries::ElementSeries(int window) : n_(window) {
    if (window < 0) throw std::invalid_argument("ElementSeries: negative window");
    c_.resize(window + 1);
}

ElementSeries ElementSeries::unit(int window) {
    ElementSeries s(window);
    s.c_[0] = Element::unit();
    return s;
}

const Element& ElementSeries::coeff(int r) const {
    if (r < 0 || r > n_) throw std::out_of_range("ElementSeries: coefficient outside window");
    return c_[r];
}

Element& ElementSeries::at(int r) {
    if (r < 0 || r > n_) throw std::out_of_range("ElementSeries: coefficient outside window");
    return c_[r];
}

ElementSeries ElementSeries::truncated(int window) const {
    if (window > n_) throw std::out_of_range("ElementSeries: cannot widen window");
    ElementSeries s(window);
    for (int r = 0; r <= window; ++r) s.c_[r] = c_[r];
    return s;
}

ElementSeries operator+(const ElementSeries& a, const ElementSeries& b) {
    ElementSeries s(std::min(a.n_, b.n_));
    for (int r = 0; r <= s.n_; ++r) s.c_[r] = a.c_[r] + b.c_[r];
    return s;
}

ElementSeries operator-(const ElementSeries& a, const ElementSeries& b) {
    ElementSeries s(std::min(a.n_, b.n_));
    for (int r = 0; r <= s.n_; ++r) s.c_[r] = a.c_[r] - b.c_[r];
    return s;
}

ElementSeries ElementSeries::scaled(const Poly& c) const {
    ElementSeries s(n_);
    for (int r = 0; r <= n_; ++r) s.c_[r] = c_[r] * c;
    return s;
}

bool operator==(const ElementSeries& a, const ElementSeries& b) {
    if (a.n_ != b.n_) return false;
    return a.c_ == b.c_;
}

ElementSeries ElementSeries::mul(const Algebra& alg, const ElementSeries& a, const ElementSeries& b) {
    ElementSeries s(std::min(a.n_, b.n_));
    for (int r = 0; r <= s.n_; ++r) {
        ElementAcc acc;
        for (int p = 0; p <= r; ++p) {
            if (a.c_[p].isZero() || b.c_[r - p].isZero()) continue;
            acc.add(alg.mul(a.c_[p], b.c_[r - p]));
        }
        s.c_[r] = acc.take();
    }
    return s;
}

ElementSeries ElementSeries::inverse(const Algebra& alg) const {
    if (c_[0] != Element::unit())
        throw std::invalid_argument("ElementSeries: inverse needs unit constant term");
    ElementSeries left(n_), right(n_);
    left.c_[0] = Element::unit();
    right.c_[0] = Element::unit();
    for (int m = 1; m <= n_; ++m) {
        ElementAcc l, r;
        for (int p = 1; p <= m; ++p) {
            l.add(alg.mul(c_[p], left.c_[m - p]), Poly(-1));
            r.add(alg.mul(right.c_[m - p], c_[p]), Poly(-1));
        }
        left.c_[m] = l.take();
        right.c_[m] = r.take();
        if (left.c_[m] != right.c_[m])
            throw std::logic_error("ElementSeries: left and right inverses disagree");
    }
    return left;
}

ElementSeries ElementSeries::substituteLinear(int sign, const Rational& shift) const {
    if (sign != 1 && sign != -1) throw std::invalid_argument("substituteLinear: sign must be +-1");
    // (sign*u + c)^-r = sum_j (-1)^j binom(r+j-1, j) c^j sign^{-r-j} u^{-r-j}
    ElementSeries s(n_);
    s.c_[0] = c_[0];
    for (int m = 1; m <= n_; ++m) {
        ElementAcc acc;
        for (int r = 1; r <= m; ++r) {
            int j = m - r;
            Rational c = Rational::binomial(m - 1, j) * shift.pow(j);
            if ((j % 2) != 0) c = -c;
            if (sign == -1 && (m % 2) != 0) c = -c;
            acc.add(c_[r], Poly(c));
        }
        s.c_[m] = acc.take();
    }
    return s;
}

SeriesMatrix::SeriesMatrix(int rows, int cols, int window)
    : rows_(rows), cols_(cols), window_(window) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("SeriesMatrix: bad shape");
    m_.assign(static_cast<size_t>(rows) * cols, ElementSeries(window));
}

SeriesMatrix SeriesMatrix::identity(int dim, int window) {
    SeriesMatrix m(dim, dim, window);
    for (int i = 0; i < dim; ++i) m.at(i, i) = ElementSeries::unit(window);
    return m;
}

SeriesMatrix SeriesMatrix::mul(const Algebra& alg, const SeriesMatrix& a, const SeriesMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("SeriesMatrix: shape mismatch");
    SeriesMatrix r(a.rows_, b.cols_, std::min(a.window_, b.window_));
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) {
            ElementSeries cell(r.window_);
            for (int k = 0; k < a.cols_; ++k)
                cell = cell + ElementSeries::mul(alg, a.at(i, k), b.at(k, j));
            r.at(i, j) = cell;
        }
    return r;
}

SeriesMatrix SeriesMatrix::inverse2x2(const Algebra& alg) const {
    if (rows_ != 2 || cols_ != 2) throw std::invalid_argument("inverse2x2: needs a 2x2 matrix");
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const Element& c0 = at(i, j).coeff(0);
            if (c0 != (i == j ? Element::unit() : Element()))
                throw std::invalid_argument("inverse2x2: constant term is not the identity");
        }
    // Same recursion as scalar series inversion, with 2x2 matrix
    // coefficients; left and right versions compared.
    auto cellMul = [&](const std::vector<std::vector<Element>>& A,
                       const std::vector<std::vector<Element>>& B) {
        std::vector<std::vector<Element>> C(2, std::vector<Element>(2));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) C[i][j] += alg.mul(A[i][k], B[k][j]);
        return C;
    };
    auto coeffAt = [&](int r) {
        std::vector<std::vector<Element>> A(2, std::vector<Element>(2));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) A[i][j] = at(i, j).coeff(r);
        return A;
    };
    std::vector<std::vector<std::vector<Element>>> left(window_ + 1), right(window_ + 1);
    left[0] = right[0] = coeffAt(0);
    for (int m = 1; m <= window_; ++m) {
        std::vector<std::vector<Element>> l(2, std::vector<Element>(2)), r(2, std::vector<Element>(2));
        for (int p = 1; p <= m; ++p) {
            auto lp = cellMul(coeffAt(p), left[m - p]);
            auto rp = cellMul(right[m - p], coeffAt(p));
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    l[i][j] -= lp[i][j];
                    r[i][j] -= rp[i][j];
                }
        }
        if (l != r) throw std::logic_error("inverse2x2: left and right inverses disagree");
        left[m] = l;
        right[m] = r;
    }
    SeriesMatrix inv(2, 2, window_);
    for (int m = 0; m <= window_; ++m)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) inv.at(i, j).at(m) = left[m][i][j];
    return inv;
}

bool operator==(const SeriesMatrix& a, const SeriesMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.window_ == b.window_ && a.m_ == b.m_;
}

}  // namespace ty3

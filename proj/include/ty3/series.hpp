#pragma once

#include <vector>

#include "ty3/algebra.hpp"

namespace ty3 {

// Truncated formal series in u^-1 with Element coefficients. Every series
// carries its truncation window N; coefficients beyond the window are an
// error to read, never a silent zero. Binary operations produce the
// smaller window.
class ElementSeries {
public:
    explicit ElementSeries(int window);
    static ElementSeries unit(int window);

    int window() const { return n_; }
    const Element& coeff(int r) const;
    Element& at(int r);

    ElementSeries truncated(int window) const;

    friend ElementSeries operator+(const ElementSeries& a, const ElementSeries& b);
    friend ElementSeries operator-(const ElementSeries& a, const ElementSeries& b);
    ElementSeries scaled(const Poly& c) const;

    friend bool operator==(const ElementSeries& a, const ElementSeries& b);

    // Cauchy product; coefficient order follows factor order.
    static ElementSeries mul(const Algebra& alg, const ElementSeries& a, const ElementSeries& b);

    // Two-sided inverse up to the window; requires unit constant term.
    // Computed by the left recursion and checked against the right one.
    ElementSeries inverse(const Algebra& alg) const;

    // a(sign*u + shift) with sign = +-1; the window is preserved since
    // coefficient m only needs levels <= m.
    ElementSeries substituteLinear(int sign, const Rational& shift) const;

private:
    std::vector<Element> c_;
    int n_;
};

// Rectangular matrix of series sharing one truncation window.
class SeriesMatrix {
public:
    SeriesMatrix(int rows, int cols, int window);
    static SeriesMatrix identity(int dim, int window);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int window() const { return window_; }
    ElementSeries& at(int r, int c) { return m_[r * cols_ + c]; }
    const ElementSeries& at(int r, int c) const { return m_[r * cols_ + c]; }

    static SeriesMatrix mul(const Algebra& alg, const SeriesMatrix& a, const SeriesMatrix& b);

    // Inverse of a 2x2 matrix series whose constant term is the identity
    // matrix, via the series recursion on matrix coefficients; both the
    // left and right recursions are computed and compared.
    SeriesMatrix inverse2x2(const Algebra& alg) const;

    friend bool operator==(const SeriesMatrix& a, const SeriesMatrix& b);

private:
    int rows_, cols_, window_;
    std::vector<ElementSeries> m_;
};

}  // namespace ty3

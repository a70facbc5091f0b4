#pragma once

#include <map>
#include <string>
#include <vector>

#include "ty3/tables.hpp"

namespace ty3 {

// Polynomial in u and v with rational coefficients; the denominators an
// identity is multiplied through by.
class BivarPoly {
public:
    BivarPoly() = default;
    static BivarPoly constant(const Rational& c);
    static BivarPoly uMinusV();
    static BivarPoly uPlusV();
    static BivarPoly uPlusVPlus(long c);           // u + v + c
    static BivarPoly uMinusVMinus(long c);         // u - v - c
    static BivarPoly uSqMinusVSq();
    static BivarPoly vLinear(long a, long b);      // a*v + b

    bool isZero() const { return m_.empty(); }
    int degU() const;
    int degV() const;
    const std::map<std::pair<int, int>, Rational>& monomials() const { return m_; }

    BivarPoly& add(int p, int q, const Rational& c);
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(const BivarPoly& a, const Rational& c);
    BivarPoly operator-() const;

private:
    std::map<std::pair<int, int>, Rational> m_;
};

enum class SVar { U, V };

// One cleared summand: poly(u,v) times an ordered product of table series,
// each evaluated in u or in v. Element coefficients multiply in factor
// order regardless of variable.
struct TVFactor {
    SVar var;
    Atom proto;  // level field ignored; names the series
};
struct ClearedTerm {
    BivarPoly poly;
    std::vector<TVFactor> factors;
};

struct ClearedOutcome {
    bool skipped = false;       // window empty at this table size
    bool pass = false;
    int aMin = 0, aMax = 0, bMin = 0, bMax = 0;
    long residualTerms = 0;     // total monomials over all failing cells
    std::string firstMismatch;  // "(a,b)" of the first failing cell
};

// Sums every term's exact coefficient of u^-a v^-b over the largest
// rectangle the table window supports and reports whether all cells
// vanish. Cells the window cannot certify are excluded from the
// comparison, never assumed zero.
ClearedOutcome clearedZeroCheck(const std::vector<ClearedTerm>& terms, ProductCache& cache,
                                int tableWindow);

}  // namespace ty3

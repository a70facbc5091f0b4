#include "ty3/center.hpp"

namespace ty3 {

ElementSeries centerSeries(const DrinfeldTable& t) {
    const Algebra& A = t.algebra();
    auto at = [&](const ElementSeries& s, int sign, long shift) {
        return s.substituteLinear(sign, Rational(shift));
    };
    ElementSeries g2 = at(t.g(), 1, -2);
    ElementSeries main =
        ElementSeries::mul(A, ElementSeries::mul(A, at(t.d(-1, -1), -1, 0), at(t.d(-1, -1), 1, -1)), g2);
    ElementSeries cross =
        ElementSeries::mul(A, ElementSeries::mul(A, at(t.d(-1, 1), -1, 0), at(t.d(1, -1), 1, -1)), g2);
    return main - cross;
}

ElementSeries sixTermSdet(const STable& s, bool dropLastTerm) {
    const Algebra& A = s.algebra();
    auto at = [&](int i, int j, int sign, long shift) {
        return s.entry(i, j).substituteLinear(sign, Rational(shift));
    };
    struct Term {
        int sign;
        int a1, b1, a2, b2, a3, b3;
    };
    // index order (-1, 1, 0): the six permutation products
    static const Term terms[6] = {
        {+1, -1, -1, -1, -1, 0, 0},
        {-1, -1, -1, 0, -1, -1, 0},
        {-1, -1, 1, 1, -1, 0, 0},
        {+1, 1, 0, -1, 1, 1, 0},
        {-1, 1, 1, 0, 1, 1, 0},
        {+1, -1, 0, 1, -1, -1, 0},
    };
    ElementSeries out(s.window());
    size_t count = dropLastTerm ? 5 : 6;
    for (size_t t = 0; t < count; ++t) {
        const Term& tm = terms[t];
        ElementSeries prod = ElementSeries::mul(
            A, ElementSeries::mul(A, at(tm.a1, tm.b1, -1, 0), at(tm.a2, tm.b2, 1, -1)),
            at(tm.a3, tm.b3, 1, -2));
        out = (tm.sign > 0) ? out + prod : out - prod;
    }
    return out;
}

}  // namespace ty3

#pragma once

#include <array>

#include "ty3/algebra.hpp"

namespace ty3 {

// so_3 realized inside gl_3 as the span of f[i,j] = e[i,j] - e[-j,-i],
// indices in {-1,0,1}. Basis {f[-1,-1], f[-1,0], f[0,-1]}; every other
// f[i,j] is a signed copy or zero. Structure constants are computed from
// the explicit 3x3 matrices, not copied from a table.
class So3 {
public:
    using Mat = std::array<std::array<Rational, 3>, 3>;

    So3();

    const LieAlgebra& algebra() const { return *alg_; }

    static Mat fMatrix(int i, int j);
    static Mat commutator(const Mat& a, const Mat& b);

    // Expand an so_3 matrix in the basis; throws if it is not in the span.
    std::array<Rational, 3> coordinates(const Mat& m) const;

    // f[i,j] as an element of U(so_3) (linear in the basis generators).
    Element f(int i, int j) const;

    static constexpr std::array<std::pair<int, int>, 3> basisIndex = {
        {{-1, -1}, {-1, 0}, {0, -1}}};

private:
    std::unique_ptr<LieAlgebra> alg_;
};

}  // namespace ty3

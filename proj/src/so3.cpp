#include "ty3/so3.hpp"

#include <memory>
#include <sstream>
#include <stdexcept>

namespace ty3 {

namespace {
int pos(int i) { return i + 1; }  // {-1,0,1} -> {0,1,2}
}

So3::Mat So3::fMatrix(int i, int j) {
    Mat m{};
    m[pos(i)][pos(j)] += Rational(1);
    m[pos(-j)][pos(-i)] -= Rational(1);
    return m;
}

So3::Mat So3::commutator(const Mat& a, const Mat& b) {
    Mat r{};
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z) {
                r[x][y] += a[x][z] * b[z][y];
                r[x][y] -= b[x][z] * a[z][y];
            }
    return r;
}

std::array<Rational, 3> So3::coordinates(const Mat& m) const {
    // The basis matrices have disjoint supports, so coordinates read off
    // directly; the remainder must vanish.
    std::array<Rational, 3> c;
    for (size_t a = 0; a < 3; ++a) c[a] = m[pos(basisIndex[a].first)][pos(basisIndex[a].second)];
    Mat rem = m;
    for (size_t a = 0; a < 3; ++a) {
        Mat fb = fMatrix(basisIndex[a].first, basisIndex[a].second);
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) rem[x][y] -= c[a] * fb[x][y];
    }
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            if (!rem[x][y].isZero()) throw std::invalid_argument("So3: matrix not in so_3 span");
    return c;
}

So3::So3() {
    std::vector<std::string> names;
    for (auto [i, j] : basisIndex) {
        std::ostringstream out;
        out << "f[" << i << "," << j << "]";
        names.push_back(out.str());
    }
    std::vector<std::vector<Element>> table(3, std::vector<Element>(3));
    // First build a throwaway algebra handle just for gen codes: codes are
    // positional (a+1), so we can fill the table before constructing.
    for (size_t a = 0; a < 3; ++a)
        for (size_t b = 0; b < 3; ++b) {
            Mat c = commutator(fMatrix(basisIndex[a].first, basisIndex[a].second),
                               fMatrix(basisIndex[b].first, basisIndex[b].second));
            auto coords = coordinates(c);
            Element e;
            for (size_t x = 0; x < 3; ++x)
                e += Element::term(Word(1, static_cast<char>(x + 1)), Poly(coords[x]));
            table[a][b] = e;
        }
    alg_ = std::make_unique<LieAlgebra>(std::move(names), std::move(table));
}

Element So3::f(int i, int j) const {
    auto coords = coordinates(fMatrix(i, j));
    Element e;
    for (size_t x = 0; x < 3; ++x) e += alg_->basis(x) * Poly(coords[x]);
    return e;
}

}  // namespace ty3

#pragma once

#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "ty3/poly.hpp"

namespace ty3 {

// One generator of a presented algebra, encoded as a byte. The byte order
// IS the total generator order, so a word is normal-ordered exactly when
// its bytes are weakly increasing.
using Gen = unsigned char;
using Word = std::string;

inline bool isNormalWord(const Word& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (static_cast<Gen>(w[i - 1]) > static_cast<Gen>(w[i])) return false;
    return true;
}

struct RawTerm {
    Poly coef;
    Word word;
};
using RawExpr = std::vector<RawTerm>;

// Finite linear combination of normal-ordered words with Q[x] coefficients.
// Terms are kept sorted by word, with no zero coefficients; equality of
// Elements is plain term-list equality.
class Element {
public:
    using Term = std::pair<Word, Poly>;

    Element() = default;
    static Element unit() { return term(Word(), Poly(1)); }
    static Element term(const Word& w, const Poly& c);

    bool isZero() const { return t_.empty(); }
    size_t termCount() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }
    Poly coeff(const Word& w) const;

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    Element& scale(const Poly& c);
    friend Element operator*(const Element& a, const Poly& c) { Element r = a; r.scale(c); return r; }

    friend bool operator==(const Element& a, const Element& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    // True when every coefficient is a plain rational (x-degree 0).
    bool isRationalOnly() const;

private:
    friend class ElementAcc;
    std::vector<Term> t_;
};

// Merge-friendly accumulator for building Elements out of many small pieces.
class ElementAcc {
public:
    void add(const Word& w, const Poly& c);
    void add(const Element& e, const Poly& c = Poly(1));
    Element take();

private:
    std::map<Word, Poly> m_;
};

// A filtered algebra presented by a straightening rule: the commutator of
// two generators is an element of strictly smaller weight. normalForm /
// mul rewrite the leftmost inversion repeatedly; termination follows from
// the weight drop. Elements are immutable values and all operations here
// are pure, so concurrent use is safe; the straightening memo accepts
// concurrent readers with synchronized insertion.
class Algebra {
public:
    virtual ~Algebra() = default;

    virtual int genWeight(Gen g) const = 0;
    virtual std::string genName(Gen g) const = 0;
    // [hi, lo] for hi > lo as a raw expression of weight < w(hi) + w(lo).
    virtual RawExpr commuteRaw(Gen hi, Gen lo) const = 0;

    // Memoized normal form of [hi, lo].
    const Element& straighten(Gen hi, Gen lo) const;

    Element normalForm(const RawExpr& raw) const;
    Element normalizeWord(const Word& w) const;
    Element mul(const Element& a, const Element& b) const;
    Element comm(const Element& a, const Element& b) const;

    int wordWeight(const Word& w) const;
    // Max term weight; -1 for zero.
    int weight(const Element& e) const;
    // Max over terms of (weight - length); -1 for zero. This is the
    // filtration that assigns a level-r generator degree r-1.
    int degreeShifted(const Element& e) const;

    std::string str(const Element& e) const;
    std::string str(const Word& w) const;

private:
    Element insertGen(const Word& w, Gen g) const;
    void mulGenInto(const Element& e, Gen g, ElementAcc& acc, const Poly& c) const;

    mutable std::map<std::pair<Gen, Gen>, Element> memo_;
    mutable std::mutex mx_;
};

// The Yangian for gl_n in its generator-and-relations form: generators
// T[i,j,r] with i,j in {-1..} index set of size n (n odd: {-k..k}), r >= 1,
// ordered lexicographically by (r, i, j). Level 0 is the scalar delta and
// never appears as a generator.
class Yangian : public Algebra {
public:
    explicit Yangian(int n = 3, int maxLevel = 24);

    int n() const { return n_; }
    int maxLevel() const { return maxLevel_; }
    const std::vector<int>& indexSet() const { return idx_; }

    Gen gen(int i, int j, int r) const;
    std::tuple<int, int, int> unpack(Gen g) const;  // (i, j, r)

    int genWeight(Gen g) const override { return std::get<2>(unpack(g)); }
    std::string genName(Gen g) const override;
    RawExpr commuteRaw(Gen hi, Gen lo) const override;

    // [T[i,j,r], T[k,l,s]] as a raw expression (level-0 factors contracted
    // to deltas), before any normal ordering. Exposed so tests can compare
    // it against an expansion oracle that does not use the rule.
    RawExpr rawCommutator(int i, int j, int r, int k, int l, int s) const;

    Element tGen(int i, int j, int r) const { return Element::term(Word(1, gen(i, j, r)), Poly(1)); }

private:
    int pos(int i) const;  // index value -> 0..n-1
    int n_;
    int maxLevel_;
    std::vector<int> idx_;
};

// Universal enveloping algebra of a finite-dimensional Lie algebra given by
// structure constants on a basis. All generators have weight 1.
class LieAlgebra : public Algebra {
public:
    // bracket[a][b] = [basis_a, basis_b] as a linear combination of basis
    // elements (as an Element over this algebra's generators). Rejects
    // tables failing antisymmetry or the Jacobi identity.
    LieAlgebra(std::vector<std::string> names,
               std::vector<std::vector<Element>> bracket);

    size_t dim() const { return names_.size(); }
    Gen basisGen(size_t a) const { return static_cast<Gen>(a + 1); }
    Element basis(size_t a) const { return Element::term(Word(1, basisGen(a)), Poly(1)); }
    const Element& bracketEntry(size_t a, size_t b) const { return bracket_[a][b]; }

    int genWeight(Gen) const override { return 1; }
    std::string genName(Gen g) const override { return names_.at(g - 1); }
    RawExpr commuteRaw(Gen hi, Gen lo) const override;

    // U(gl_1): one central generator.
    static LieAlgebra gl1();

private:
    std::vector<std::string> names_;
    std::vector<std::vector<Element>> bracket_;
};

}  // namespace ty3

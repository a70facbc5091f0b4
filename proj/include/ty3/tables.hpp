#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "ty3/series.hpp"

namespace ty3 {

// (i,j,r) is admissible when i+j < 0 for odd r and i+j <= 0 for even r.
bool admissible(int i, int j, int r);

// Generating series of the twisted Yangian inside Y_3:
//   S[i,j](u) = sum_k eta(T[i,k](u)) T[k,j](u),  eta(T[i,j](u)) = T[-j,-i](-u),
// held entrywise to the table window. Entries are Y_3 normal forms.
class STable {
public:
    STable(const Yangian& alg, int window);

    int window() const { return n_; }
    const ElementSeries& entry(int i, int j) const;
    const Element& coeff(int i, int j, int r) const { return entry(i, j).coeff(r); }
    const Yangian& algebra() const { return *alg_; }

private:
    friend STable makeTruncated(const STable&, int);
    STable() = default;
    const Yangian* alg_ = nullptr;
    int n_ = 0;
    std::vector<ElementSeries> s_;  // 3x3 row-major over index order (-1,0,1)
};

// Drinfeld coefficient tables extracted from the Gauss factorization of the
// S-matrix with rows and columns ordered (-1, 1, 0):
//   S = (1 0; F 1) (D 0; 0 G) (1 E; 0 1).
// D[i,j](u) = S[i,j](u) for i,j in {+-1}; Dt, Gt are two-sided inverses.
class DrinfeldTable {
public:
    explicit DrinfeldTable(const STable& s);

    int window() const { return n_; }
    const Yangian& algebra() const { return *alg_; }

    const ElementSeries& d(int i, int j) const { return d_[pos2(i)][pos2(j)]; }
    const ElementSeries& dt(int i, int j) const { return dt_[pos2(i)][pos2(j)]; }
    const ElementSeries& e(int i) const { return e_[pos2(i)]; }
    const ElementSeries& f(int i) const { return f_[pos2(i)]; }
    const ElementSeries& g() const { return *g_; }
    const ElementSeries& gt() const { return *gt_; }

    // The three Gauss factors multiplied back together, as a 3x3 matrix in
    // index order (-1, 1, 0).
    SeriesMatrix reassemble() const;

    static int pos2(int i);  // -1,1 -> 0,1

private:
    const Yangian* alg_;
    int n_;
    std::vector<std::vector<ElementSeries>> d_, dt_;
    std::vector<ElementSeries> e_, f_;
    std::optional<ElementSeries> g_, gt_;
};

// One coefficient of a named table series. Used as the alphabet for formal
// words whose products the engine evaluates and caches.
struct Atom {
    enum Kind : uint8_t { S, D, Dt, E, F, G, Gt };
    Kind kind;
    int8_t i = 0, j = 0;
    int16_t level = 0;

    uint32_t pack() const;
    std::string name() const;
    friend bool operator==(const Atom& a, const Atom& b) { return a.pack() == b.pack(); }
    friend bool operator<(const Atom& a, const Atom& b) { return a.pack() < b.pack(); }
};

Atom atomS(int i, int j, int r);
Atom atomD(int i, int j, int r);
Atom atomDt(int i, int j, int r);
Atom atomE(int i, int r);
Atom atomF(int i, int r);
Atom atomG(int r);
Atom atomGt(int r);

// Evaluates ordered products of table coefficients, caching every word
// prefix so repeated subproducts across relation instances are computed
// once. The resolver maps an atom to its Element; cached Elements are
// immutable once stored, and lookups/insertions are synchronized, so one
// cache may serve concurrent verification workers.
class ProductCache {
public:
    ProductCache(const Algebra& alg, std::function<Element(const Atom&)> resolve);

    const Element& atom(const Atom& a);
    const Element& eval(const std::vector<Atom>& word);

    const Algebra& algebra() const { return alg_; }

private:
    const Element& store(const std::string& key, Element e);
    const Algebra& alg_;
    std::function<Element(const Atom&)> resolve_;
    std::mutex mx_;
    std::map<std::string, const Element*> cache_;
    std::deque<Element> pool_;
};

// Resolver for plain table coefficients.
std::function<Element(const Atom&)> tableResolver(const STable& s, const DrinfeldTable& t);

// The tau antiautomorphism on formal words in the S coefficients:
// reverses each word and maps S[i,j,r] to S[-j,-i,r].
struct SWordTerm {
    Rational coef;
    std::vector<Atom> word;  // S atoms only
};
using SWordExpr = std::vector<SWordTerm>;
SWordExpr tau(const SWordExpr& expr);
Element evalSWords(ProductCache& cache, const SWordExpr& expr);

// Canonical text serialization of both tables, with a content hash so
// verification reports can cite the exact build. Version + window header,
// one line per coefficient.
std::string serializeTables(const STable& s, const DrinfeldTable& t);
uint64_t fnv1a64(const std::string& data);
std::string tableHash(const STable& s, const DrinfeldTable& t);

// Canonical Element text used by the serialization and by golden tests:
// terms ordered by generator-sequence lexicographic order.
std::string canonicalElementText(const Algebra& alg, const Element& e);
Element parseElementText(const Yangian& alg, const std::string& text);

}  // namespace ty3

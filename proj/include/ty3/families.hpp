#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ty3/tables.hpp"

namespace ty3 {

// Distinguished generating families used for span and basis work:
//  - MnoS: S[i,j,r] over admissible triples;
//  - Drinfeld: E[i,m] (m>0), admissible D[k,l,r] (k,l = +-1), G[t] (t>0 even);
//  - DrinfeldF: same with F in place of E;
//  - Shifted(k): all D[i,j,m], all G[n], and E[l,r] with r > k.
struct BasisFamily {
    enum Kind { MnoS, Drinfeld, DrinfeldF, Shifted } kind;
    int k = 0;  // shift, Shifted only

    std::string name() const;
};

struct FamilyGenerator {
    Atom atom;
    int weight;
};
std::vector<FamilyGenerator> familyGenerators(const BasisFamily& family, int maxWeight);

// Ordered monomial in the family's generators (weakly increasing generator
// indices) with its expansion in the ambient algebra.
struct FamilyMonomial {
    std::vector<int> gens;  // indices into familyGenerators(...)
    int weight = 0;
    std::string name(const std::vector<FamilyGenerator>& gens) const;
};
std::vector<FamilyMonomial> familyMonomials(const std::vector<FamilyGenerator>& gens, int maxWeight);

Element expandFamilyMonomial(ProductCache& cache, const std::vector<FamilyGenerator>& gens,
                             const FamilyMonomial& m);

// Exact linear algebra over Q on elements written in the ambient normal
// form. Columns join one at a time; each is reduced against the pivots
// found so far, so rank and membership queries share the same elimination.
class SpanSolver {
public:
    // Column index of the added column is its insertion order (0-based).
    // Returns true when the column enlarged the span.
    bool addColumn(const Element& e);
    int rank() const { return static_cast<int>(pivots_.size()); }
    int columnsAdded() const { return added_; }

    // Coordinates of target over the added columns; nullopt if not in span.
    std::optional<std::map<int, Rational>> solve(const Element& target) const;

private:
    struct Pivot {
        Word lead;
        Element col;                     // lead coefficient 1
        std::map<int, Rational> coords;  // in terms of added columns
    };
    // Reduces e in place; returns the coordinate combination used.
    std::map<int, Rational> reduce(Element& e) const;
    std::vector<Pivot> pivots_;
    std::map<Word, int> byLead_;
    int added_ = 0;
};

// Coordinates of an element in a family's weight-bounded monomials, or
// NotInSpan. When coordinates exist, re-expanding them reproduces the
// element exactly (checked by tests).
struct Coordinates {
    bool inSpan = false;
    std::map<int, Rational> coords;  // monomial index -> coefficient
};

Coordinates solveCoordinates(ProductCache& cache, const Element& target,
                             const BasisFamily& family, int maxWeight);

}  // namespace ty3

#pragma once

#include <string>
#include <vector>

#include "ty3/twovar.hpp"

namespace ty3 {

// A relation instance in the Drinfeld coefficients, stored as LHS - RHS:
// an ordered list of rational-weighted words of table atoms. The instance
// passes when the list evaluates to zero in Y_3 normal form.
struct RelTerm {
    Rational coef;
    std::vector<Atom> word;
};
struct RelInstance {
    std::string family;
    std::string id;
    std::vector<RelTerm> diff;
};

Element evalRelation(ProductCache& cache, const std::vector<RelTerm>& diff, bool dropLastTerm = false);

// Some printed relations come in two candidate forms that cannot both
// hold; the verifier runs both and reports which one does.
enum class Variant { Printed, Derived };
std::string variantName(Variant v);

// The presentation relation families, enumerated over all index tuples and
// all levels with m+n <= window (single-level families: level <= window).
// Families: d-const, d-inverse, gg, dd, d-symmetry (two variants),
// fe-series, ef-series, de, df, ge, gf, ef, ee (two variants),
// ff (two variants).
std::vector<std::string> theorem11Families();
bool familyHasVariants(const std::string& family);
std::vector<RelInstance> buildTheorem11Family(const std::string& family, int window,
                                              Variant variant = Variant::Printed);

// Trimmed e-e relation used for shifted-subalgebra work: the parts of the
// two plain sums that cancel for m,n > k are dropped, so every surviving
// symbol stays inside the k-shifted generating set.
std::vector<RelTerm> shiftedEERelation(int i, int j, int m, int n, Variant variant);

// Generating-series identities (the two-variable commutation relations and
// the one-variable symmetries), multiplied through by their denominators.
struct SeriesIdentity {
    std::string id;
    bool twoVariable = true;
    std::vector<ClearedTerm> terms;        // two-variable form, LHS - RHS
    // one-variable form: list of (coeff poly in u as powers, series,
    // sign/shift substitution) handled by the verifier directly
};
// Items 1..8 of the series-relation list; 7 and 8 take a variant.
std::vector<ClearedTerm> seriesItem(int item, int i, int j, int k, int l,
                                    Variant variant = Variant::Printed);
// The cleared S-S relation for one index tuple, LHS - RHS.
std::vector<ClearedTerm> ssRelation(int i, int j, int k, int l);

// phi_k on one shifted-subalgebra generator, expanded through the tables
// into an element of Y_3 tensor Q[x] (x the central gl_1 generator).
// Rejects atoms outside the k-shifted generating set (F, Gt, S, and E with
// level <= k).
Element phiImage(const STable& s, const DrinfeldTable& t, int k, const Atom& gen);

// Resolver mapping atoms through phi_k for relation-image checks; extends
// to Dt since the D-coefficients determine their inverse table.
std::function<Element(const Atom&)> phiResolver(const STable& s, const DrinfeldTable& t, int k);

}  // namespace ty3

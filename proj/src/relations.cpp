#include "ty3/relations.hpp"

#include <sstream>
#include <stdexcept>

namespace ty3 {

namespace {
const int PM[2] = {-1, 1};

Rational negTwoPow(int s) { return Rational(-2).pow(s); }
Rational sign(int s) { return (s % 2 == 0) ? Rational(1) : Rational(-1); }

// (-2)^s (-1)^{r-s} binom(r, s): the expansion coefficient of 1/(u+v+2).
Rational uvTwoCoef(int r, int s) {
    return negTwoPow(s) * sign(r - s) * Rational::binomial(r, s);
}

void push(std::vector<RelTerm>& out, const Rational& c, std::vector<Atom> w) {
    if (!c.isZero()) out.push_back({c, std::move(w)});
}

std::string instId(const std::string& family, std::initializer_list<int> idx,
                   std::initializer_list<int> levels) {
    std::ostringstream out;
    out << family << "[";
    bool first = true;
    for (int v : idx) {
        if (!first) out << ",";
        out << v;
        first = false;
    }
    out << ";";
    first = true;
    for (int v : levels) {
        if (!first) out << ",";
        out << v;
        first = false;
    }
    out << "]";
    return out.str();
}
}  // namespace

Element evalRelation(ProductCache& cache, const std::vector<RelTerm>& diff, bool dropLastTerm) {
    ElementAcc acc;
    size_t n = diff.size() - (dropLastTerm && !diff.empty() ? 1 : 0);
    for (size_t t = 0; t < n; ++t) acc.add(cache.eval(diff[t].word), Poly(diff[t].coef));
    return acc.take();
}

std::string variantName(Variant v) { return v == Variant::Printed ? "printed" : "derived"; }

std::vector<std::string> theorem11Families() {
    return {"d-const", "d-inverse", "gg", "dd", "d-symmetry", "fe-series", "ef-series",
            "de", "df", "ge", "gf", "ef", "ee", "ff"};
}

bool familyHasVariants(const std::string& family) {
    return family == "d-symmetry" || family == "ee" || family == "ff";
}

namespace {

std::vector<RelInstance> buildDConst() {
    std::vector<RelInstance> out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            int i = PM[a], j = PM[b];
            std::vector<RelTerm> d1, d2;
            push(d1, Rational(1), {atomD(i, j, 0)});
            push(d1, Rational(i == j ? -1 : 0), {});
            out.push_back({"d-const", instId("d-const", {i, j}, {0}), d1});
            push(d2, Rational(1), {atomDt(i, j, 0)});
            push(d2, Rational(i == j ? -1 : 0), {});
            out.push_back({"d-const", instId("d-const-inv", {i, j}, {0}), d2});
        }
    std::vector<RelTerm> g;
    push(g, Rational(1), {atomG(0)});
    push(g, Rational(-1), {});
    out.push_back({"d-const", "d-const:g[0]", g});
    for (int a = 0; a < 2; ++a) {
        std::vector<RelTerm> e, f;
        push(e, Rational(1), {atomE(PM[a], 0)});
        out.push_back({"d-const", instId("d-const:e", {PM[a]}, {0}), e});
        push(f, Rational(1), {atomF(PM[a], 0)});
        out.push_back({"d-const", instId("d-const:f", {PM[a]}, {0}), f});
    }
    return out;
}

std::vector<RelInstance> buildDInverse(int window) {
    std::vector<RelInstance> out;
    for (int n = 0; n <= window; ++n)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                int i = PM[a], j = PM[b];
                std::vector<RelTerm> dl, dr;
                for (int r = 0; r <= n; ++r)
                    for (int c = 0; c < 2; ++c) {
                        push(dl, Rational(1), {atomD(i, PM[c], r), atomDt(PM[c], j, n - r)});
                        push(dr, Rational(1), {atomDt(i, PM[c], r), atomD(PM[c], j, n - r)});
                    }
                Rational delta(n == 0 && i == j ? -1 : 0);
                push(dl, delta, {});
                push(dr, delta, {});
                out.push_back({"d-inverse", instId("d-inverse:left", {i, j}, {n}), dl});
                out.push_back({"d-inverse", instId("d-inverse:right", {i, j}, {n}), dr});
            }
    return out;
}

std::vector<RelInstance> buildGG(int window) {
    std::vector<RelInstance> out;
    for (int m = 0; m <= window; ++m)
        for (int n = 0; m + n <= window; ++n) {
            std::vector<RelTerm> d;
            push(d, Rational(1), {atomG(m), atomG(n)});
            push(d, Rational(-1), {atomG(n), atomG(m)});
            out.push_back({"gg", instId("gg", {}, {m, n}), d});
        }
    return out;
}

std::vector<RelInstance> buildDD(int window) {
    std::vector<RelInstance> out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int e = 0; e < 2; ++e)
                    for (int m = 0; m <= window; ++m)
                        for (int n = 0; m + n <= window; ++n) {
                            int i = PM[a], j = PM[b], k = PM[c], l = PM[e];
                            std::vector<RelTerm> d;
                            push(d, Rational(1), {atomD(i, j, m), atomD(k, l, n)});
                            push(d, Rational(-1), {atomD(k, l, n), atomD(i, j, m)});
                            for (int r = 0; r < m; ++r) {
                                push(d, Rational(-1), {atomD(k, j, m - 1 - r), atomD(i, l, n + r)});
                                push(d, Rational(1), {atomD(k, j, n + r), atomD(i, l, m - 1 - r)});
                                push(d, sign(r), {atomD(i, -k, m - 1 - r), atomD(-j, l, n + r)});
                                push(d, -sign(r), {atomD(k, -i, n + r), atomD(-l, j, m - 1 - r)});
                            }
                            for (int r = 0; 2 * r + 2 <= m; ++r) {
                                push(d, Rational(-1), {atomD(k, -i, m - 2 - 2 * r), atomD(-j, l, n + 2 * r)});
                                push(d, Rational(1), {atomD(k, -i, n + 2 * r), atomD(-j, l, m - 2 - 2 * r)});
                            }
                            out.push_back({"dd", instId("dd", {i, j, k, l}, {m, n}), d});
                        }
    return out;
}

std::vector<RelInstance> buildDSymmetry(int window, Variant variant) {
    std::vector<RelInstance> out;
    for (int n = 0; n <= window; ++n)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                int i = PM[a], j = PM[b];
                std::vector<RelTerm> d;
                push(d, Rational(1), {atomD(i, j, n)});
                push(d, -sign(n), {atomD(-j, -i, n)});
                if (n >= 1) {
                    if (variant == Variant::Printed) {
                        // half of (1 - (-1)^n) times D[-j,-i,n-1]
                        Rational h = (Rational(1) - sign(n)) * Rational(1, 2);
                        push(d, -h, {atomD(-j, -i, n - 1)});
                    } else {
                        // transpose symmetry of S(u): plus half (1 + (-1)^n) D[i,j,n-1]
                        Rational h = (Rational(1) + sign(n)) * Rational(1, 2);
                        push(d, h, {atomD(i, j, n - 1)});
                    }
                }
                out.push_back({"d-symmetry", instId("d-symmetry:" + variantName(variant), {i, j}, {n}), d});
            }
    return out;
}

std::vector<RelInstance> buildFESeries(int window, bool feDirection) {
    std::vector<RelInstance> out;
    const char* fam = feDirection ? "fe-series" : "ef-series";
    for (int m = 0; m <= window; ++m)
        for (int a = 0; a < 2; ++a) {
            int i = PM[a];
            std::vector<RelTerm> d;
            push(d, Rational(1), {feDirection ? atomF(i, m) : atomE(i, m)});
            for (int r = 1; r <= m; ++r) {
                Rational c = sign(m) * Rational(2).pow(m - r) * Rational::binomial(m - 1, m - r);
                push(d, -c, {feDirection ? atomE(-i, r) : atomF(-i, r)});
            }
            out.push_back({fam, instId(fam, {i}, {m}), d});
        }
    return out;
}

std::vector<RelInstance> buildDE(int window) {
    std::vector<RelInstance> out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int m = 0; m <= window; ++m)
                    for (int n = 0; m + n <= window; ++n) {
                        int i = PM[a], j = PM[b], k = PM[c];
                        std::vector<RelTerm> d;
                        push(d, Rational(1), {atomD(i, j, m), atomE(k, n)});
                        push(d, Rational(-1), {atomE(k, n), atomD(i, j, m)});
                        if (j == k)
                            for (int r = 0; r < m; ++r)
                                for (int x = 0; x < 2; ++x)
                                    push(d, Rational(-1), {atomD(i, PM[x], r), atomE(PM[x], m + n - 1 - r)});
                        if (i == -k)
                            for (int r = 0; r < m; ++r)
                                for (int s = 0; s <= r; ++s)
                                    for (int x = 0; x < 2; ++x)
                                        push(d, uvTwoCoef(r, s),
                                             {atomE(-PM[x], n + r - s), atomD(PM[x], j, m - 1 - r)});
                        out.push_back({"de", instId("de", {i, j, k}, {m, n}), d});
                    }
    return out;
}

std::vector<RelInstance> buildDF(int window) {
    std::vector<RelInstance> out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int m = 0; m <= window; ++m)
                    for (int n = 0; m + n <= window; ++n) {
                        int i = PM[a], j = PM[b], k = PM[c];
                        std::vector<RelTerm> d;
                        push(d, Rational(1), {atomD(i, j, m), atomF(k, n)});
                        push(d, Rational(-1), {atomF(k, n), atomD(i, j, m)});
                        if (i == k)
                            for (int r = 0; r < m; ++r)
                                for (int x = 0; x < 2; ++x)
                                    push(d, Rational(1), {atomF(PM[x], m + n - 1 - r), atomD(PM[x], j, r)});
                        if (j == -k)
                            for (int r = 0; r < m; ++r)
                                for (int s = 0; s <= r; ++s)
                                    for (int x = 0; x < 2; ++x)
                                        push(d, -uvTwoCoef(r, s),
                                             {atomD(i, PM[x], m - 1 - r), atomF(-PM[x], n + r - s)});
                        out.push_back({"df", instId("df", {i, j, k}, {m, n}), d});
                    }
    return out;
}

std::vector<RelInstance> buildGE(int window) {
    std::vector<RelInstance> out;
    for (int a = 0; a < 2; ++a)
        for (int m = 0; m <= window; ++m)
            for (int n = 0; m + n <= window; ++n) {
                int i = PM[a];
                std::vector<RelTerm> d;
                push(d, Rational(1), {atomG(m), atomE(i, n)});
                push(d, Rational(-1), {atomE(i, n), atomG(m)});
                for (int r = 0; r < m; ++r) push(d, Rational(1), {atomG(r), atomE(i, m + n - 1 - r)});
                for (int r = 0; r < m; ++r)
                    for (int s = 0; s <= r; ++s)
                        push(d, -uvTwoCoef(r, s), {atomE(i, n + r - s), atomG(m - 1 - r)});
                out.push_back({"ge", instId("ge", {i}, {m, n}), d});
            }
    return out;
}

std::vector<RelInstance> buildGF(int window) {
    std::vector<RelInstance> out;
    for (int a = 0; a < 2; ++a)
        for (int m = 0; m <= window; ++m)
            for (int n = 0; m + n <= window; ++n) {
                int i = PM[a];
                std::vector<RelTerm> d;
                push(d, Rational(1), {atomG(m), atomF(i, n)});
                push(d, Rational(-1), {atomF(i, n), atomG(m)});
                for (int r = 0; r < m; ++r) push(d, Rational(-1), {atomF(i, m + n - 1 - r), atomG(r)});
                for (int r = 0; r < m; ++r)
                    for (int s = 0; s <= r; ++s)
                        push(d, uvTwoCoef(r, s), {atomG(m - 1 - r), atomF(i, n + r - s)});
                out.push_back({"gf", instId("gf", {i}, {m, n}), d});
            }
    return out;
}

std::vector<RelInstance> buildEF(int window) {
    std::vector<RelInstance> out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int m = 0; m <= window; ++m)
                for (int n = 0; m + n <= window; ++n) {
                    int i = PM[a], j = PM[b];
                    std::vector<RelTerm> d;
                    push(d, Rational(1), {atomE(i, m), atomF(j, n)});
                    push(d, Rational(-1), {atomF(j, n), atomE(i, m)});
                    for (int r = 0; r <= m + n - 1; ++r)
                        push(d, Rational(1), {atomG(r), atomDt(i, j, m + n - 1 - r)});
                    for (int r = 0; r < m; ++r)
                        for (int s = 0; s <= r; ++s) {
                            Rational c = uvTwoCoef(r, s);
                            push(d, c, {atomE(i, m - r - 1), atomF(j, n + r - s)});
                            push(d, c, {atomF(-i, n + r - s), atomE(-j, m - r - 1)});
                        }
                    for (int r = 0; r < m; ++r) {
                        Rational c = negTwoPow(r) * sign(m - 1 - r) * Rational::binomial(m - 1, r);
                        for (int s = 0; s <= m + n - 1 - r; ++s)
                            push(d, -c, {atomF(-i, s), atomF(j, m + n - 1 - r - s)});
                    }
                    out.push_back({"ef", instId("ef", {i, j}, {m, n}), d});
                }
    return out;
}

void pushEESums(std::vector<RelTerm>& d, int i, int j, int m, int n, Variant variant, bool trimmed) {
    // sum_{r=0}^{n-1} X_r - sum_{r=0}^{m-1} X_r with
    //   X_r = E[j, m+n-1-r] E[i, r]   (as printed)
    //   X_r = E[i, m+n-1-r] E[j, r]   (derived from the series relation)
    auto term = [&](int r, const Rational& c) {
        if (variant == Variant::Printed)
            push(d, -c, {atomE(j, m + n - 1 - r), atomE(i, r)});
        else
            push(d, -c, {atomE(i, m + n - 1 - r), atomE(j, r)});
    };
    if (trimmed) {
        // identical r-ranges cancel; only the surviving slice is emitted
        if (n > m)
            for (int r = m; r < n; ++r) term(r, Rational(1));
        else
            for (int r = n; r < m; ++r) term(r, Rational(-1));
    } else {
        for (int r = 0; r < n; ++r) term(r, Rational(1));
        for (int r = 0; r < m; ++r) term(r, Rational(-1));
    }
}

std::vector<RelTerm> buildEEDiff(int i, int j, int m, int n, Variant variant, bool trimmed) {
    std::vector<RelTerm> d;
    push(d, Rational(1), {atomE(i, m), atomE(j, n)});
    push(d, Rational(-1), {atomE(j, n), atomE(i, m)});
    pushEESums(d, i, j, m, n, variant, trimmed);
    for (int r = 0; r < m; ++r) {
        Rational c = negTwoPow(r) * sign(m - 1 - r) * Rational::binomial(m - 1, r);
        for (int s = 0; s <= m + n - 1 - r; ++s)
            push(d, c, {atomDt(j, -i, s), atomG(m + n - 1 - r - s)});
    }
    return d;
}

std::vector<RelInstance> buildEE(int window, Variant variant) {
    std::vector<RelInstance> out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int m = 0; m <= window; ++m)
                for (int n = 0; m + n <= window; ++n)
                    out.push_back({"ee", instId("ee:" + variantName(variant), {PM[a], PM[b]}, {m, n}),
                                   buildEEDiff(PM[a], PM[b], m, n, variant, false)});
    return out;
}

std::vector<RelInstance> buildFF(int window, Variant variant) {
    std::vector<RelInstance> out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int m = 0; m <= window; ++m)
                for (int n = 0; m + n <= window; ++n) {
                    int i = PM[a], j = PM[b];
                    std::vector<RelTerm> d;
                    push(d, Rational(1), {atomF(i, m), atomF(j, n)});
                    push(d, Rational(-1), {atomF(j, n), atomF(i, m)});
                    for (int r = 0; r < m; ++r) {
                        if (variant == Variant::Printed)
                            push(d, Rational(-1), {atomF(j, r), atomF(i, m + n - 1 - r)});
                        else
                            push(d, Rational(-1), {atomF(i, r), atomF(j, m + n - 1 - r)});
                    }
                    for (int r = 0; r < n; ++r) {
                        if (variant == Variant::Printed)
                            push(d, Rational(1), {atomF(j, r), atomF(i, m + n - 1 - r)});
                        else
                            push(d, Rational(1), {atomF(i, r), atomF(j, m + n - 1 - r)});
                    }
                    for (int r = 0; r < n; ++r) {
                        Rational c = negTwoPow(r) * sign(n - 1 - r) * Rational::binomial(n - 1, r);
                        for (int s = 0; s <= m + n - 1 - r; ++s)
                            push(d, c, {atomDt(-j, i, s), atomG(m + n - 1 - r - s)});
                    }
                    out.push_back({"ff", instId("ff:" + variantName(variant), {i, j}, {m, n}), d});
                }
    return out;
}

}  // namespace

std::vector<RelTerm> shiftedEERelation(int i, int j, int m, int n, Variant variant) {
    return buildEEDiff(i, j, m, n, variant, true);
}

std::vector<RelInstance> buildTheorem11Family(const std::string& family, int window, Variant variant) {
    if (family == "d-const") return buildDConst();
    if (family == "d-inverse") return buildDInverse(window);
    if (family == "gg") return buildGG(window);
    if (family == "dd") return buildDD(window);
    if (family == "d-symmetry") return buildDSymmetry(window, variant);
    if (family == "fe-series") return buildFESeries(window, true);
    if (family == "ef-series") return buildFESeries(window, false);
    if (family == "de") return buildDE(window);
    if (family == "df") return buildDF(window);
    if (family == "ge") return buildGE(window);
    if (family == "gf") return buildGF(window);
    if (family == "ef") return buildEF(window);
    if (family == "ee") return buildEE(window, variant);
    if (family == "ff") return buildFF(window, variant);
    throw std::invalid_argument("unknown relation family: " + family);
}

namespace {

void pushCleared(std::vector<ClearedTerm>& out, const BivarPoly& p,
                 std::initializer_list<TVFactor> fs) {
    out.push_back({p, std::vector<TVFactor>(fs)});
}

TVFactor fu(Atom a) { return {SVar::U, a}; }
TVFactor fv(Atom a) { return {SVar::V, a}; }

}  // namespace

std::vector<ClearedTerm> ssRelation(int i, int j, int k, int l) {
    std::vector<ClearedTerm> t;
    BivarPoly usq = BivarPoly::uSqMinusVSq();
    BivarPoly upv = BivarPoly::uPlusV();
    BivarPoly umv = BivarPoly::uMinusV();
    BivarPoly one = BivarPoly::constant(Rational(1));
    // (u^2-v^2) [S_ij(u), S_kl(v)]
    pushCleared(t, usq, {fu(atomS(i, j, 0)), fv(atomS(k, l, 0))});
    pushCleared(t, -usq, {fv(atomS(k, l, 0)), fu(atomS(i, j, 0))});
    // -(u+v) (S_kj(u) S_il(v) - S_kj(v) S_il(u))
    pushCleared(t, -upv, {fu(atomS(k, j, 0)), fv(atomS(i, l, 0))});
    pushCleared(t, upv, {fv(atomS(k, j, 0)), fu(atomS(i, l, 0))});
    // +(u-v) (S_{i,-k}(u) S_{-j,l}(v) - S_{k,-i}(v) S_{-l,j}(u))
    pushCleared(t, umv, {fu(atomS(i, -k, 0)), fv(atomS(-j, l, 0))});
    pushCleared(t, -umv, {fv(atomS(k, -i, 0)), fu(atomS(-l, j, 0))});
    // -(S_{k,-i}(u) S_{-j,l}(v) - S_{k,-i}(v) S_{-j,l}(u))
    pushCleared(t, -one, {fu(atomS(k, -i, 0)), fv(atomS(-j, l, 0))});
    pushCleared(t, one, {fv(atomS(k, -i, 0)), fu(atomS(-j, l, 0))});
    return t;
}

std::vector<ClearedTerm> seriesItem(int item, int i, int j, int k, int l, Variant variant) {
    std::vector<ClearedTerm> t;
    BivarPoly umv = BivarPoly::uMinusV();
    BivarPoly upv = BivarPoly::uPlusV();
    BivarPoly usq = BivarPoly::uSqMinusVSq();
    BivarPoly upv2 = BivarPoly::uPlusVPlus(2);
    BivarPoly umv1 = BivarPoly::uMinusVMinus(1);
    BivarPoly v23 = BivarPoly::vLinear(2, 3);
    BivarPoly one = BivarPoly::constant(Rational(1));

    switch (item) {
        case 1: {
            // (u^2-v^2)[D_ij(u), D_kl(v)] = (u+v)(D_kj(u)D_il(v) - D_kj(v)D_il(u))
            //   - (u-v)(D_{i,-k}(u)D_{-j,l}(v) - D_{k,-i}(v)D_{-l,j}(u))
            //   + D_{k,-i}(u)D_{-j,l}(v) - D_{k,-i}(v)D_{-j,l}(u)
            pushCleared(t, usq, {fu(atomD(i, j, 0)), fv(atomD(k, l, 0))});
            pushCleared(t, -usq, {fv(atomD(k, l, 0)), fu(atomD(i, j, 0))});
            pushCleared(t, -upv, {fu(atomD(k, j, 0)), fv(atomD(i, l, 0))});
            pushCleared(t, upv, {fv(atomD(k, j, 0)), fu(atomD(i, l, 0))});
            pushCleared(t, umv, {fu(atomD(i, -k, 0)), fv(atomD(-j, l, 0))});
            pushCleared(t, -umv, {fv(atomD(k, -i, 0)), fu(atomD(-l, j, 0))});
            pushCleared(t, -one, {fu(atomD(k, -i, 0)), fv(atomD(-j, l, 0))});
            pushCleared(t, one, {fv(atomD(k, -i, 0)), fu(atomD(-j, l, 0))});
            return t;
        }
        case 2: {
            // (u-v)(u+v+2)[D_ij(u), E_k(v)] =
            //   delta_{jk}(u+v+2) D_{ia}(u)(E_a(v) - E_a(u))
            //   + delta_{i,-k}(u-v)(F_a(u) - E_{-a}(v)) D_{aj}(u)
            BivarPoly p = umv * upv2;
            pushCleared(t, p, {fu(atomD(i, j, 0)), fv(atomE(k, 0))});
            pushCleared(t, -p, {fv(atomE(k, 0)), fu(atomD(i, j, 0))});
            for (int x : {-1, 1}) {
                if (j == k) {
                    pushCleared(t, -upv2, {fu(atomD(i, x, 0)), fv(atomE(x, 0))});
                    pushCleared(t, upv2, {fu(atomD(i, x, 0)), fu(atomE(x, 0))});
                }
                if (i == -k) {
                    pushCleared(t, -umv, {fu(atomF(x, 0)), fu(atomD(x, j, 0))});
                    pushCleared(t, umv, {fv(atomE(-x, 0)), fu(atomD(x, j, 0))});
                }
            }
            return t;
        }
        case 3: {
            // (u-v)(u+v+2)[D_ij(u), F_k(v)] =
            //   -delta_{ik}(u+v+2)(F_a(v) - F_a(u)) D_{aj}(u)
            //   - delta_{j,-k}(u-v) D_{ia}(u)(E_a(u) - F_{-a}(v))
            BivarPoly p = umv * upv2;
            pushCleared(t, p, {fu(atomD(i, j, 0)), fv(atomF(k, 0))});
            pushCleared(t, -p, {fv(atomF(k, 0)), fu(atomD(i, j, 0))});
            for (int x : {-1, 1}) {
                if (i == k) {
                    pushCleared(t, upv2, {fv(atomF(x, 0)), fu(atomD(x, j, 0))});
                    pushCleared(t, -upv2, {fu(atomF(x, 0)), fu(atomD(x, j, 0))});
                }
                if (j == -k) {
                    pushCleared(t, umv, {fu(atomD(i, x, 0)), fu(atomE(x, 0))});
                    pushCleared(t, -umv, {fu(atomD(i, x, 0)), fv(atomF(-x, 0))});
                }
            }
            return t;
        }
        case 4: {
            // (u-v)(u+v+2)[G(u), E_i(v)] = (u+v+2) G(u)(E_i(u) - E_i(v))
            //   + (u-v)(E_i(v) - F_{-i}(u)) G(u)
            BivarPoly p = umv * upv2;
            pushCleared(t, p, {fu(atomG(0)), fv(atomE(i, 0))});
            pushCleared(t, -p, {fv(atomE(i, 0)), fu(atomG(0))});
            pushCleared(t, -upv2, {fu(atomG(0)), fu(atomE(i, 0))});
            pushCleared(t, upv2, {fu(atomG(0)), fv(atomE(i, 0))});
            pushCleared(t, -umv, {fv(atomE(i, 0)), fu(atomG(0))});
            pushCleared(t, umv, {fu(atomF(-i, 0)), fu(atomG(0))});
            return t;
        }
        case 5: {
            // (u-v)(u+v+2)[F_i(u), G(v)] = (u+v+2)(F_i(u) - F_i(v)) G(v)
            //   + (u-v) G(v)(F_i(u) - E_{-i}(v))
            BivarPoly p = umv * upv2;
            pushCleared(t, p, {fu(atomF(i, 0)), fv(atomG(0))});
            pushCleared(t, -p, {fv(atomG(0)), fu(atomF(i, 0))});
            pushCleared(t, -upv2, {fu(atomF(i, 0)), fv(atomG(0))});
            pushCleared(t, upv2, {fv(atomF(i, 0)), fv(atomG(0))});
            pushCleared(t, -umv, {fv(atomG(0)), fu(atomF(i, 0))});
            pushCleared(t, umv, {fv(atomG(0)), fv(atomE(-i, 0))});
            return t;
        }
        case 6: {
            // (u-v)(u+v+2)[E_i(u), F_j(v)] =
            //   (u+v+2)(Dt_ij(u)G(u) - G(v)Dt_ij(v))
            //   + (u-v)(E_i(u) - F_{-i}(v))(E_{-j}(u) - F_j(v))
            BivarPoly p = umv * upv2;
            pushCleared(t, p, {fu(atomE(i, 0)), fv(atomF(j, 0))});
            pushCleared(t, -p, {fv(atomF(j, 0)), fu(atomE(i, 0))});
            pushCleared(t, -upv2, {fu(atomDt(i, j, 0)), fu(atomG(0))});
            pushCleared(t, upv2, {fv(atomG(0)), fv(atomDt(i, j, 0))});
            pushCleared(t, -umv, {fu(atomE(i, 0)), fu(atomE(-j, 0))});
            pushCleared(t, umv, {fu(atomE(i, 0)), fv(atomF(j, 0))});
            pushCleared(t, umv, {fv(atomF(-i, 0)), fu(atomE(-j, 0))});
            pushCleared(t, -umv, {fv(atomF(-i, 0)), fv(atomF(j, 0))});
            return t;
        }
        case 7: {
            // (u-v)(u-v-1)(u+v+2)(2v+3)[E_i(u), E_j(v)] = cleared sum of
            //   (1/(u-v))(E_i(u)-E_i(v))(E_j(u)-E_j(v))
            //   + (1/(u+v+2)) Dt_{j,-i}(u)G(u)        [printed; derived swaps i,j]
            //   - ((u-v)/((u-v-1)(u+v+2))) Dt_{j,-i}(v)G(v)
            //   + (1/((u-v-1)(u+v+2))) Dt_{i,-j}(v)G(v)
            //   - (1/((u-v-1)(2v+3)))(Dt_{i,-j}(v)G(v) - Dt_{j,-i}(v)G(v))
            BivarPoly P = umv * umv1 * upv2 * v23;
            pushCleared(t, P, {fu(atomE(i, 0)), fv(atomE(j, 0))});
            pushCleared(t, -P, {fv(atomE(j, 0)), fu(atomE(i, 0))});
            BivarPoly t1 = umv1 * upv2 * v23;
            pushCleared(t, -t1, {fu(atomE(i, 0)), fu(atomE(j, 0))});
            pushCleared(t, t1, {fu(atomE(i, 0)), fv(atomE(j, 0))});
            pushCleared(t, t1, {fv(atomE(i, 0)), fu(atomE(j, 0))});
            pushCleared(t, -t1, {fv(atomE(i, 0)), fv(atomE(j, 0))});
            BivarPoly t2 = umv * umv1 * v23;
            int ui = (variant == Variant::Printed) ? j : i;
            int uj = (variant == Variant::Printed) ? -i : -j;
            pushCleared(t, -t2, {fu(atomDt(ui, uj, 0)), fu(atomG(0))});
            BivarPoly t3 = umv * umv * v23;
            pushCleared(t, t3, {fv(atomDt(j, -i, 0)), fv(atomG(0))});
            BivarPoly t4 = umv * v23;
            pushCleared(t, -t4, {fv(atomDt(i, -j, 0)), fv(atomG(0))});
            BivarPoly t5 = umv * upv2;
            pushCleared(t, t5, {fv(atomDt(i, -j, 0)), fv(atomG(0))});
            pushCleared(t, -t5, {fv(atomDt(j, -i, 0)), fv(atomG(0))});
            return t;
        }
        case 8: {
            // mirror of item 7 for the F family
            BivarPoly P = umv * umv1 * upv2 * v23;
            pushCleared(t, P, {fu(atomF(i, 0)), fv(atomF(j, 0))});
            pushCleared(t, -P, {fv(atomF(j, 0)), fu(atomF(i, 0))});
            BivarPoly t1 = umv1 * upv2 * v23;
            pushCleared(t, t1, {fu(atomF(j, 0)), fu(atomF(i, 0))});
            pushCleared(t, -t1, {fu(atomF(j, 0)), fv(atomF(i, 0))});
            pushCleared(t, -t1, {fv(atomF(j, 0)), fu(atomF(i, 0))});
            pushCleared(t, t1, {fv(atomF(j, 0)), fv(atomF(i, 0))});
            BivarPoly t2 = umv * umv1 * v23;
            int ui = (variant == Variant::Printed) ? -i : -j;
            int uj = (variant == Variant::Printed) ? j : i;
            pushCleared(t, t2, {fu(atomDt(ui, uj, 0)), fu(atomG(0))});
            BivarPoly t3 = umv * umv * v23;
            pushCleared(t, -t3, {fv(atomDt(-i, j, 0)), fv(atomG(0))});
            BivarPoly t4 = umv * v23;
            pushCleared(t, t4, {fv(atomDt(-j, i, 0)), fv(atomG(0))});
            BivarPoly t5 = umv * upv2;
            pushCleared(t, -t5, {fv(atomDt(-j, i, 0)), fv(atomG(0))});
            pushCleared(t, t5, {fv(atomDt(-i, j, 0)), fv(atomG(0))});
            return t;
        }
        default:
            throw std::invalid_argument("seriesItem: items 1..8 are two-variable");
    }
}

Element phiImage(const STable& s, const DrinfeldTable& t, int k, const Atom& gen) {
    if (k < 1) throw std::invalid_argument("phiImage: k must be >= 1");
    switch (gen.kind) {
        case Atom::D:
            return t.d(gen.i, gen.j).coeff(gen.level);
        case Atom::Dt:
            return t.dt(gen.i, gen.j).coeff(gen.level);
        case Atom::G: {
            int m = gen.level;
            Element r = t.g().coeff(m);
            ElementAcc x1, x2;
            for (int l = 1; l <= m - 1; ++l) x1.add(t.g().coeff(m - l - 1), Poly(Rational(-2).pow(l)));
            for (int l = 0; l <= m - 2; ++l) x2.add(t.g().coeff(m - l - 2), Poly(Rational(-2).pow(l)));
            Element s1 = x1.take(), s2 = x2.take();
            s1.scale(Poly::monomial(1, Rational(-1)));
            s2.scale(Poly::monomial(2, Rational(-1)));
            return r + s1 + s2;
        }
        case Atom::E: {
            if (gen.level <= k)
                throw std::invalid_argument("phiImage: E level must exceed the shift");
            Element r = t.e(gen.i).coeff(gen.level);
            Element lower = t.e(gen.i).coeff(gen.level - 1);
            lower.scale(Poly::x());
            return r + lower;
        }
        default:
            throw std::invalid_argument("phiImage: generator outside the shifted set");
    }
    (void)s;
}

std::function<Element(const Atom&)> phiResolver(const STable& s, const DrinfeldTable& t, int k) {
    return [&s, &t, k](const Atom& a) { return phiImage(s, t, k, a); };
}

}  // namespace ty3

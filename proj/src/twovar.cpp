#include "ty3/twovar.hpp"

#include <sstream>

namespace ty3 {

BivarPoly BivarPoly::constant(const Rational& c) { BivarPoly p; p.add(0, 0, c); return p; }
BivarPoly BivarPoly::uMinusV() { BivarPoly p; p.add(1, 0, Rational(1)); p.add(0, 1, Rational(-1)); return p; }
BivarPoly BivarPoly::uPlusV() { BivarPoly p; p.add(1, 0, Rational(1)); p.add(0, 1, Rational(1)); return p; }
BivarPoly BivarPoly::uPlusVPlus(long c) { BivarPoly p = uPlusV(); p.add(0, 0, Rational(c)); return p; }
BivarPoly BivarPoly::uMinusVMinus(long c) { BivarPoly p = uMinusV(); p.add(0, 0, Rational(-c)); return p; }
BivarPoly BivarPoly::uSqMinusVSq() { BivarPoly p; p.add(2, 0, Rational(1)); p.add(0, 2, Rational(-1)); return p; }
BivarPoly BivarPoly::vLinear(long a, long b) { BivarPoly p; p.add(0, 1, Rational(a)); p.add(0, 0, Rational(b)); return p; }

int BivarPoly::degU() const {
    int d = 0;
    for (const auto& [e, c] : m_) d = std::max(d, e.first);
    return d;
}
int BivarPoly::degV() const {
    int d = 0;
    for (const auto& [e, c] : m_) d = std::max(d, e.second);
    return d;
}

BivarPoly& BivarPoly::add(int p, int q, const Rational& c) {
    if (c.isZero()) return *this;
    auto [it, fresh] = m_.try_emplace({p, q}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.isZero()) m_.erase(it);
    }
    return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (const auto& [ea, ca] : a.m_)
        for (const auto& [eb, cb] : b.m_)
            r.add(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

BivarPoly operator*(const BivarPoly& a, const Rational& c) {
    BivarPoly r;
    for (const auto& [e, v] : a.m_) r.add(e.first, e.second, v * c);
    return r;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r;
    for (const auto& [e, v] : m_) r.add(e.first, e.second, -v);
    return r;
}

namespace {

// Exact coefficient of u^-a v^-b of one factor product; levels are
// enumerated directly so every distinct atom word goes through the cache.
void cellOfFactors(const std::vector<TVFactor>& factors, int a, int b, ProductCache& cache,
                   ElementAcc& acc, const Rational& scale) {
    std::vector<Atom> word(factors.size());
    // Recursive level assignment: u-levels must sum to a, v-levels to b.
    std::function<void(size_t, int, int)> rec = [&](size_t idx, int needU, int needV) {
        if (idx == factors.size()) {
            if (needU == 0 && needV == 0) acc.add(cache.eval(word), Poly(scale));
            return;
        }
        bool isU = factors[idx].var == SVar::U;
        int remaining = isU ? needU : needV;
        if (remaining < 0) return;
        // Later factors of the same variable still need >= 0 levels.
        for (int lv = 0; lv <= remaining; ++lv) {
            word[idx] = factors[idx].proto;
            word[idx].level = static_cast<int16_t>(lv);
            rec(idx + 1, needU - (isU ? lv : 0), needV - (isU ? 0 : lv));
        }
    };
    if (a < 0 || b < 0) return;  // series have no positive powers
    rec(0, a, b);
}

}  // namespace

ClearedOutcome clearedZeroCheck(const std::vector<ClearedTerm>& terms, ProductCache& cache,
                                int tableWindow) {
    ClearedOutcome out;
    int maxDegU = 0, maxDegV = 0;
    for (const auto& t : terms) {
        maxDegU = std::max(maxDegU, t.poly.degU());
        maxDegV = std::max(maxDegV, t.poly.degV());
    }
    out.aMax = tableWindow - maxDegU;
    out.bMax = tableWindow - maxDegV;
    out.aMin = -maxDegU;
    out.bMin = -maxDegV;
    if (out.aMax < 0 || out.bMax < 0) {
        out.skipped = true;
        return out;
    }
    out.pass = true;
    for (int a = out.aMin; a <= out.aMax; ++a)
        for (int b = out.bMin; b <= out.bMax; ++b) {
            ElementAcc acc;
            for (const auto& t : terms)
                for (const auto& [exp, c] : t.poly.monomials())
                    cellOfFactors(t.factors, a + exp.first, b + exp.second, cache, acc, c);
            Element cell = acc.take();
            if (!cell.isZero()) {
                if (out.pass) {
                    std::ostringstream ss;
                    ss << "(" << a << "," << b << ")";
                    out.firstMismatch = ss.str();
                }
                out.pass = false;
                out.residualTerms += static_cast<long>(cell.termCount());
            }
        }
    return out;
}

}  // namespace ty3

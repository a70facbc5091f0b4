#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ty3/rational.hpp"

namespace ty3 {

// Finite linear combination of words over an arbitrary symbol alphabet,
// with no rewriting at all. Used where an identity must be checked or
// transported symbol-by-symbol: expansion oracles and generator
// substitution maps.
template <typename Sym>
class FreeElem {
public:
    using Key = std::vector<Sym>;

    FreeElem() = default;
    static FreeElem unit() { return term({}, Rational(1)); }
    static FreeElem term(Key w, const Rational& c) {
        FreeElem e;
        if (!c.isZero()) e.t_[std::move(w)] = c;
        return e;
    }

    bool isZero() const { return t_.empty(); }
    const std::map<Key, Rational>& terms() const { return t_; }

    void add(const Key& w, const Rational& c) {
        if (c.isZero()) return;
        auto [it, fresh] = t_.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.isZero()) t_.erase(it);
        }
    }
    FreeElem& operator+=(const FreeElem& o) {
        for (const auto& [w, c] : o.t_) add(w, c);
        return *this;
    }
    FreeElem& operator-=(const FreeElem& o) {
        for (const auto& [w, c] : o.t_) add(w, -c);
        return *this;
    }
    FreeElem& scale(const Rational& c) {
        if (c.isZero()) { t_.clear(); return *this; }
        for (auto& [w, v] : t_) v *= c;
        return *this;
    }
    friend FreeElem operator*(const FreeElem& a, const FreeElem& b) {
        FreeElem r;
        for (const auto& [wa, ca] : a.t_)
            for (const auto& [wb, cb] : b.t_) {
                Key w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add(w, ca * cb);
            }
        return r;
    }
    friend bool operator==(const FreeElem& a, const FreeElem& b) { return a.t_ == b.t_; }

private:
    std::map<Key, Rational> t_;
};

// Two-variable Laurent window over a free algebra: finitely many exact
// cells (a, b) for u^-a v^-b, a and b of either sign, everything outside
// the stated caps discarded. Products drop cells that would exceed the
// caps, so a window is exact wherever it is defined as long as factors
// cover the needed range.
template <typename Sym>
class FreeWindow {
public:
    using Cell = std::pair<int, int>;

    FreeWindow(int maxU, int maxV) : maxU_(maxU), maxV_(maxV) {}

    int maxU() const { return maxU_; }
    int maxV() const { return maxV_; }

    void add(int a, int b, const FreeElem<Sym>& e) {
        if (a > maxU_ || b > maxV_ || e.isZero()) return;
        auto it = cells_.find({a, b});
        if (it == cells_.end()) cells_.emplace(Cell{a, b}, e);
        else {
            it->second += e;
            if (it->second.isZero()) cells_.erase(it);
        }
    }
    FreeElem<Sym> cell(int a, int b) const {
        auto it = cells_.find({a, b});
        return it == cells_.end() ? FreeElem<Sym>() : it->second;
    }
    const std::map<Cell, FreeElem<Sym>>& cells() const { return cells_; }

    friend FreeWindow mul(const FreeWindow& x, const FreeWindow& y) {
        FreeWindow r(std::min(x.maxU_, y.maxU_), std::min(x.maxV_, y.maxV_));
        for (const auto& [ca, ea] : x.cells_)
            for (const auto& [cb, eb] : y.cells_)
                r.add(ca.first + cb.first, ca.second + cb.second, ea * eb);
        return r;
    }
    FreeWindow& operator+=(const FreeWindow& o) {
        for (const auto& [c, e] : o.cells_) add(c.first, c.second, e);
        return *this;
    }
    FreeWindow& operator-=(const FreeWindow& o) {
        for (const auto& [c, e] : o.cells_) {
            FreeElem<Sym> n = e;
            n.scale(Rational(-1));
            add(c.first, c.second, n);
        }
        return *this;
    }

private:
    int maxU_, maxV_;
    std::map<Cell, FreeElem<Sym>> cells_;
};

}  // namespace ty3

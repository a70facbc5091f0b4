#include "ty3/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ty3 {

Element Element::term(const Word& w, const Poly& c) {
    Element e;
    if (!c.isZero()) e.t_.push_back({w, c});
    return e;
}

Poly Element::coeff(const Word& w) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), w,
                               [](const Term& t, const Word& k) { return t.first < k; });
    if (it != t_.end() && it->first == w) return it->second;
    return Poly();
}

Element Element::operator-() const {
    Element r = *this;
    for (auto& [w, c] : r.t_) c = -c;
    return r;
}

Element& Element::operator+=(const Element& o) {
    if (o.t_.empty()) return *this;
    if (t_.empty()) { t_ = o.t_; return *this; }
    std::vector<Term> out;
    out.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        if (t_[i].first < o.t_[j].first) out.push_back(std::move(t_[i++]));
        else if (o.t_[j].first < t_[i].first) out.push_back(o.t_[j++]);
        else {
            Poly c = t_[i].second + o.t_[j].second;
            if (!c.isZero()) out.push_back({t_[i].first, std::move(c)});
            ++i; ++j;
        }
    }
    while (i < t_.size()) out.push_back(std::move(t_[i++]));
    while (j < o.t_.size()) out.push_back(o.t_[j++]);
    t_ = std::move(out);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    return *this += -o;
}

Element& Element::scale(const Poly& c) {
    if (c.isZero()) { t_.clear(); return *this; }
    for (auto& [w, p] : t_) p *= c;
    return *this;
}

bool Element::isRationalOnly() const {
    for (const auto& [w, c] : t_)
        if (!c.isConstant()) return false;
    return true;
}

void ElementAcc::add(const Word& w, const Poly& c) {
    if (c.isZero()) return;
    auto [it, fresh] = m_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.isZero()) m_.erase(it);
    }
}

void ElementAcc::add(const Element& e, const Poly& c) {
    if (c.isZero()) return;
    for (const auto& [w, p] : e.terms()) add(w, p * c);
}

Element ElementAcc::take() {
    Element e;
    e.t_.reserve(m_.size());
    for (auto& [w, c] : m_) e.t_.push_back({w, std::move(c)});
    m_.clear();
    return e;
}

const Element& Algebra::straighten(Gen hi, Gen lo) const {
    if (hi <= lo) throw std::invalid_argument("straighten: needs hi > lo");
    {
        std::lock_guard<std::mutex> lk(mx_);
        auto it = memo_.find({hi, lo});
        if (it != memo_.end()) return it->second;
    }
    Element nf = normalForm(commuteRaw(hi, lo));
    if (weight(nf) >= genWeight(hi) + genWeight(lo))
        throw std::logic_error("straighten: commutator does not drop weight");
    std::lock_guard<std::mutex> lk(mx_);
    return memo_.emplace(std::make_pair(hi, lo), std::move(nf)).first->second;
}

// Normal form of w*g for a normal word w. The top term re-sorts g into w;
// every swap past a letter a > g adds w' * [a, g], which has strictly
// smaller weight, so the recursion terminates.
Element Algebra::insertGen(const Word& w, Gen g) const {
    if (w.empty() || static_cast<Gen>(w.back()) <= g) {
        Word r = w;
        r.push_back(static_cast<char>(g));
        return Element::term(r, Poly(1));
    }
    Gen a = static_cast<Gen>(w.back());
    Word w1(w, 0, w.size() - 1);
    ElementAcc acc;
    mulGenInto(insertGen(w1, g), a, acc, Poly(1));
    const Element& corr = straighten(a, g);
    for (const auto& [cw, cc] : corr.terms()) {
        // w1 * cw, with cw possibly out of order relative to w1
        Element part = Element::term(w1, Poly(1));
        for (char ch : cw) {
            ElementAcc step;
            mulGenInto(part, static_cast<Gen>(ch), step, Poly(1));
            part = step.take();
        }
        acc.add(part, cc);
    }
    return acc.take();
}

void Algebra::mulGenInto(const Element& e, Gen g, ElementAcc& acc, const Poly& c) const {
    for (const auto& [w, p] : e.terms()) acc.add(insertGen(w, g), p * c);
}

Element Algebra::normalizeWord(const Word& w) const {
    Element e = Element::unit();
    for (char ch : w) {
        ElementAcc acc;
        mulGenInto(e, static_cast<Gen>(ch), acc, Poly(1));
        e = acc.take();
    }
    return e;
}

Element Algebra::normalForm(const RawExpr& raw) const {
    ElementAcc acc;
    for (const auto& t : raw) acc.add(normalizeWord(t.word), t.coef);
    return acc.take();
}

Element Algebra::mul(const Element& a, const Element& b) const {
    if (a.isZero() || b.isZero()) return Element();
    // Walk b's (sorted) words keeping a stack of partial products
    // a * prefix, so words sharing prefixes share work.
    ElementAcc out;
    std::vector<Element> stack;  // stack[i] = a * (first i letters of current word)
    stack.push_back(a);
    Word prev;
    for (const auto& [w, c] : b.terms()) {
        size_t keep = 0;
        while (keep < prev.size() && keep < w.size() && prev[keep] == w[keep]) ++keep;
        stack.resize(keep + 1);
        for (size_t i = keep; i < w.size(); ++i) {
            ElementAcc step;
            mulGenInto(stack.back(), static_cast<Gen>(w[i]), step, Poly(1));
            stack.push_back(step.take());
        }
        prev = w;
        out.add(stack.back(), c);
    }
    return out.take();
}

Element Algebra::comm(const Element& a, const Element& b) const {
    return mul(a, b) - mul(b, a);
}

int Algebra::wordWeight(const Word& w) const {
    int s = 0;
    for (char ch : w) s += genWeight(static_cast<Gen>(ch));
    return s;
}

int Algebra::weight(const Element& e) const {
    int m = -1;
    for (const auto& [w, c] : e.terms()) m = std::max(m, wordWeight(w));
    return m;
}

int Algebra::degreeShifted(const Element& e) const {
    int m = -1;
    for (const auto& [w, c] : e.terms())
        m = std::max(m, wordWeight(w) - static_cast<int>(w.size()));
    return m;
}

std::string Algebra::str(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += genName(static_cast<Gen>(w[i]));
    }
    return s;
}

std::string Algebra::str(const Element& e) const {
    if (e.isZero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        if (!first) out << " + ";
        first = false;
        if (c.isConstant()) out << c.constant().str();
        else out << "(" << c.str() << ")";
        if (!w.empty()) out << "*" << str(w);
    }
    return out.str();
}

Yangian::Yangian(int n, int maxLevel) : n_(n), maxLevel_(maxLevel) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("Yangian: n must be odd here");
    int k = n / 2;
    for (int i = -k; i <= k; ++i) idx_.push_back(i);
    if (static_cast<size_t>(maxLevel_) * idx_.size() * idx_.size() > 254)
        throw std::invalid_argument("Yangian: generator codes exceed one byte");
}

int Yangian::pos(int i) const {
    int k = n_ / 2;
    if (i < -k || i > k) throw std::out_of_range("Yangian: index out of range");
    return i + k;
}

Gen Yangian::gen(int i, int j, int r) const {
    if (r < 1 || r > maxLevel_) throw std::out_of_range("Yangian: level out of range");
    return static_cast<Gen>(1 + (r - 1) * n_ * n_ + pos(i) * n_ + pos(j));
}

std::tuple<int, int, int> Yangian::unpack(Gen g) const {
    int v = g - 1;
    int k = n_ / 2;
    int r = v / (n_ * n_) + 1;
    int rem = v % (n_ * n_);
    return {rem / n_ - k, rem % n_ - k, r};
}

std::string Yangian::genName(Gen g) const {
    auto [i, j, r] = unpack(g);
    std::ostringstream out;
    out << "T[" << i << "," << j << "," << r << "]";
    return out.str();
}

RawExpr Yangian::rawCommutator(int i, int j, int r, int k, int l, int s) const {
    // Coefficient of u^-r v^-s in the defining relation
    //   [T_ij(u), T_kl(v)] = (T_kj(u) T_il(v) - T_kj(v) T_il(u)) / (u - v),
    // extracted with 1/(u-v) = sum_{m>=0} u^{-m-1} v^m. Level-0 symbols
    // are the scalars delta_{..}.
    RawExpr out;
    auto push = [&](long sign, int a1, int b1, int lv1, int a2, int b2, int lv2) {
        Poly c(sign);
        Word w;
        auto letter = [&](int a, int b, int lv) -> bool {
            if (lv == 0) {
                if (a != b) return false;
                return true;
            }
            w.push_back(static_cast<char>(gen(a, b, lv)));
            return true;
        };
        if (!letter(a1, b1, lv1) || !letter(a2, b2, lv2)) return;
        out.push_back({c, w});
    };
    for (int t = 0; t < std::min(r, s); ++t) {
        push(+1, k, j, t, i, l, r + s - 1 - t);
        push(-1, k, j, r + s - 1 - t, i, l, t);
    }
    return out;
}

RawExpr Yangian::commuteRaw(Gen hi, Gen lo) const {
    auto [i, j, r] = unpack(hi);
    auto [k, l, s] = unpack(lo);
    return rawCommutator(i, j, r, k, l, s);
}

LieAlgebra::LieAlgebra(std::vector<std::string> names,
                       std::vector<std::vector<Element>> bracket)
    : names_(std::move(names)), bracket_(std::move(bracket)) {
    size_t d = names_.size();
    if (d == 0 || d > 254 || bracket_.size() != d)
        throw std::invalid_argument("LieAlgebra: bad table shape");
    for (const auto& row : bracket_)
        if (row.size() != d) throw std::invalid_argument("LieAlgebra: bad table shape");
    // Bracket entries must be linear in the generators.
    for (const auto& row : bracket_)
        for (const auto& e : row)
            for (const auto& [w, c] : e.terms())
                if (w.size() != 1) throw std::invalid_argument("LieAlgebra: bracket not linear");
    // Antisymmetry.
    for (size_t a = 0; a < d; ++a)
        for (size_t b = 0; b < d; ++b)
            if (bracket_[a][b] != -bracket_[b][a] || (a == b && !bracket_[a][a].isZero()))
                throw std::invalid_argument("LieAlgebra: bracket fails antisymmetry");
    // Jacobi: [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0, with the inner bracket
    // expanded through the table.
    auto tableBracketWithBasis = [&](size_t a, const Element& e) {
        Element r;
        for (const auto& [w, c] : e.terms()) {
            size_t b = static_cast<size_t>(static_cast<Gen>(w[0])) - 1;
            r += bracket_[a][b] * c;
        }
        return r;
    };
    for (size_t a = 0; a < d; ++a)
        for (size_t b = 0; b < d; ++b)
            for (size_t c = 0; c < d; ++c) {
                Element j = tableBracketWithBasis(a, bracket_[b][c]);
                j += tableBracketWithBasis(b, bracket_[c][a]);
                j += tableBracketWithBasis(c, bracket_[a][b]);
                if (!j.isZero()) throw std::invalid_argument("LieAlgebra: bracket fails Jacobi");
            }
}

RawExpr LieAlgebra::commuteRaw(Gen hi, Gen lo) const {
    const Element& e = bracket_[hi - 1][lo - 1];
    RawExpr out;
    for (const auto& [w, c] : e.terms()) out.push_back({c, w});
    return out;
}

LieAlgebra LieAlgebra::gl1() {
    std::vector<std::vector<Element>> table(1, std::vector<Element>(1));
    return LieAlgebra({"e[0,0]"}, std::move(table));
}

}  // namespace ty3

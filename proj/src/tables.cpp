#include "ty3/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ty3 {

bool admissible(int i, int j, int r) {
    if (r < 1) throw std::invalid_argument("admissible: level must be >= 1");
    return (r % 2 != 0) ? (i + j < 0) : (i + j <= 0);
}

STable::STable(const Yangian& alg, int window) : alg_(&alg), n_(window) {
    if (alg.n() != 3) throw std::invalid_argument("STable: built for n = 3");
    s_.assign(9, ElementSeries(window));
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j) {
            ElementSeries& sij = s_[(i + 1) * 3 + (j + 1)];
            for (int r = 0; r <= window; ++r) {
                // S[i,j,r] = sum_k sum_{p+q=r} (-1)^p T[-k,-i,p] T[k,j,q],
                // level 0 meaning the scalar delta.
                RawExpr raw;
                for (int k = -1; k <= 1; ++k)
                    for (int p = 0; p <= r; ++p) {
                        int q = r - p;
                        Word w;
                        if (p == 0) {
                            if (-k != -i) continue;
                        } else {
                            w.push_back(static_cast<char>(alg.gen(-k, -i, p)));
                        }
                        if (q == 0) {
                            if (k != j) continue;
                        } else {
                            w.push_back(static_cast<char>(alg.gen(k, j, q)));
                        }
                        raw.push_back({Poly(p % 2 == 0 ? 1 : -1), w});
                    }
                sij.at(r) = alg.normalForm(raw);
            }
        }
}

const ElementSeries& STable::entry(int i, int j) const {
    if (i < -1 || i > 1 || j < -1 || j > 1) throw std::out_of_range("STable: index");
    return s_[(i + 1) * 3 + (j + 1)];
}

int DrinfeldTable::pos2(int i) {
    if (i == -1) return 0;
    if (i == 1) return 1;
    throw std::out_of_range("DrinfeldTable: index must be +-1");
}

DrinfeldTable::DrinfeldTable(const STable& s) : alg_(&s.algebra()), n_(s.window()) {
    const Algebra& A = *alg_;
    d_.assign(2, std::vector<ElementSeries>(2, ElementSeries(n_)));
    dt_ = d_;
    e_.assign(2, ElementSeries(n_));
    f_ = e_;

    SeriesMatrix D(2, 2, n_);
    static const int pm[2] = {-1, 1};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) D.at(a, b) = s.entry(pm[a], pm[b]);
    SeriesMatrix Dt = D.inverse2x2(A);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            d_[a][b] = D.at(a, b);
            dt_[a][b] = Dt.at(a, b);
        }

    SeriesMatrix colS(2, 1, n_), rowS(1, 2, n_);
    for (int a = 0; a < 2; ++a) {
        colS.at(a, 0) = s.entry(pm[a], 0);
        rowS.at(0, a) = s.entry(0, pm[a]);
    }
    SeriesMatrix E = SeriesMatrix::mul(A, Dt, colS);      // 2x1
    SeriesMatrix F = SeriesMatrix::mul(A, rowS, Dt);      // 1x2
    for (int a = 0; a < 2; ++a) {
        e_[a] = E.at(a, 0);
        f_[a] = F.at(0, a);
    }
    SeriesMatrix cross = SeriesMatrix::mul(A, SeriesMatrix::mul(A, rowS, Dt), colS);
    g_ = s.entry(0, 0) - cross.at(0, 0);
    gt_ = g_->inverse(A);
}

SeriesMatrix DrinfeldTable::reassemble() const {
    const Algebra& A = *alg_;
    SeriesMatrix L = SeriesMatrix::identity(3, n_);
    SeriesMatrix M(3, 3, n_);
    SeriesMatrix U = SeriesMatrix::identity(3, n_);
    for (int a = 0; a < 2; ++a) {
        L.at(2, a) = f_[a];
        U.at(a, 2) = e_[a];
        for (int b = 0; b < 2; ++b) M.at(a, b) = d_[a][b];
    }
    M.at(2, 2) = *g_;
    return SeriesMatrix::mul(A, SeriesMatrix::mul(A, L, M), U);
}

uint32_t Atom::pack() const {
    return (static_cast<uint32_t>(kind) << 24) | (static_cast<uint32_t>(i + 1) << 20) |
           (static_cast<uint32_t>(j + 1) << 16) | static_cast<uint32_t>(static_cast<uint16_t>(level));
}

std::string Atom::name() const {
    std::ostringstream out;
    switch (kind) {
        case S: out << "S[" << int(i) << "," << int(j) << "," << level << "]"; break;
        case D: out << "D[" << int(i) << "," << int(j) << "," << level << "]"; break;
        case Dt: out << "Dt[" << int(i) << "," << int(j) << "," << level << "]"; break;
        case E: out << "E[" << int(i) << "," << level << "]"; break;
        case F: out << "F[" << int(i) << "," << level << "]"; break;
        case G: out << "G[" << level << "]"; break;
        case Gt: out << "Gt[" << level << "]"; break;
    }
    return out.str();
}

Atom atomS(int i, int j, int r) { return Atom{Atom::S, static_cast<int8_t>(i), static_cast<int8_t>(j), static_cast<int16_t>(r)}; }
Atom atomD(int i, int j, int r) { return Atom{Atom::D, static_cast<int8_t>(i), static_cast<int8_t>(j), static_cast<int16_t>(r)}; }
Atom atomDt(int i, int j, int r) { return Atom{Atom::Dt, static_cast<int8_t>(i), static_cast<int8_t>(j), static_cast<int16_t>(r)}; }
Atom atomE(int i, int r) { return Atom{Atom::E, static_cast<int8_t>(i), 0, static_cast<int16_t>(r)}; }
Atom atomF(int i, int r) { return Atom{Atom::F, static_cast<int8_t>(i), 0, static_cast<int16_t>(r)}; }
Atom atomG(int r) { return Atom{Atom::G, 0, 0, static_cast<int16_t>(r)}; }
Atom atomGt(int r) { return Atom{Atom::Gt, 0, 0, static_cast<int16_t>(r)}; }

ProductCache::ProductCache(const Algebra& alg, std::function<Element(const Atom&)> resolve)
    : alg_(alg), resolve_(std::move(resolve)) {}

namespace {
std::string wordKey(const std::vector<Atom>& word, size_t count) {
    std::string k;
    k.reserve(count * 4);
    for (size_t idx = 0; idx < count; ++idx) {
        uint32_t p = word[idx].pack();
        for (int b = 0; b < 4; ++b) k.push_back(static_cast<char>((p >> (8 * b)) & 0xff));
    }
    return k;
}
}  // namespace

const Element& ProductCache::store(const std::string& key, Element e) {
    std::lock_guard<std::mutex> lk(mx_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
    pool_.push_back(std::move(e));
    const Element* p = &pool_.back();
    cache_.emplace(key, p);
    return *p;
}

const Element& ProductCache::atom(const Atom& a) {
    std::string key = wordKey({a}, 1);
    {
        std::lock_guard<std::mutex> lk(mx_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return *it->second;
    }
    return store(key, resolve_(a));
}

const Element& ProductCache::eval(const std::vector<Atom>& word) {
    if (word.empty()) {
        static const Element one = Element::unit();
        return one;
    }
    std::string key = wordKey(word, word.size());
    {
        std::lock_guard<std::mutex> lk(mx_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return *it->second;
    }
    // Longest cached proper prefix, extended one atom at a time.
    size_t have = word.size() - 1;
    const Element* acc = nullptr;
    for (; have >= 1; --have) {
        std::lock_guard<std::mutex> lk(mx_);
        auto it = cache_.find(wordKey(word, have));
        if (it != cache_.end()) {
            acc = it->second;
            break;
        }
    }
    Element cur = have >= 1 ? *acc : atom(word[0]);
    if (have == 0) have = 1;
    for (size_t idx = have; idx < word.size(); ++idx) {
        cur = alg_.mul(cur, atom(word[idx]));
        store(wordKey(word, idx + 1), cur);
    }
    return store(key, std::move(cur));
}

std::function<Element(const Atom&)> tableResolver(const STable& s, const DrinfeldTable& t) {
    return [&s, &t](const Atom& a) -> Element {
        switch (a.kind) {
            case Atom::S: return s.coeff(a.i, a.j, a.level);
            case Atom::D: return t.d(a.i, a.j).coeff(a.level);
            case Atom::Dt: return t.dt(a.i, a.j).coeff(a.level);
            case Atom::E: return t.e(a.i).coeff(a.level);
            case Atom::F: return t.f(a.i).coeff(a.level);
            case Atom::G: return t.g().coeff(a.level);
            case Atom::Gt: return t.gt().coeff(a.level);
        }
        throw std::logic_error("unreachable");
    };
}

SWordExpr tau(const SWordExpr& expr) {
    SWordExpr out;
    for (const auto& t : expr) {
        SWordTerm r;
        r.coef = t.coef;
        for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) {
            if (it->kind != Atom::S) throw std::invalid_argument("tau: S-words only");
            r.word.push_back(atomS(-it->j, -it->i, it->level));
        }
        out.push_back(std::move(r));
    }
    return out;
}

Element evalSWords(ProductCache& cache, const SWordExpr& expr) {
    ElementAcc acc;
    for (const auto& t : expr) acc.add(cache.eval(t.word), Poly(t.coef));
    return acc.take();
}

std::string canonicalElementText(const Algebra& alg, const Element& e) {
    if (e.isZero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        if (!first) out << " + ";
        first = false;
        if (c.isConstant()) out << c.constant().str();
        else out << "(" << c.str() << ")";
        if (!w.empty()) out << "*" << alg.str(w);
    }
    return out.str();
}

Element parseElementText(const Yangian& alg, const std::string& text) {
    Element e;
    if (text == "0") return e;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find(" + ", pos);
        std::string term = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? text.size() : end + 3;

        Poly coef;
        std::string rest;
        if (!term.empty() && term[0] == '(') {
            size_t close = term.find(')');
            if (close == std::string::npos) throw std::invalid_argument("element text: bad term");
            coef = Poly::parse(term.substr(1, close - 1));
            rest = close + 1 < term.size() ? term.substr(close + 2) : "";
        } else {
            size_t star = term.find("*T[");
            coef = Poly(Rational::parse(term.substr(0, star)));
            rest = star == std::string::npos ? "" : term.substr(star + 1);
        }
        Word w;
        size_t p = 0;
        while (p < rest.size()) {
            if (rest.compare(p, 2, "T[") != 0) throw std::invalid_argument("element text: bad word");
            size_t close = rest.find(']', p);
            std::string body = rest.substr(p + 2, close - p - 2);
            int i, j, r;
            char c1, c2;
            std::istringstream in(body);
            in >> i >> c1 >> j >> c2 >> r;
            w.push_back(static_cast<char>(alg.gen(i, j, r)));
            p = close + 1;
            if (p < rest.size() && rest[p] == '*') ++p;
        }
        e += Element::term(w, coef);
    }
    return e;
}

std::string serializeTables(const STable& s, const DrinfeldTable& t) {
    const Algebra& A = s.algebra();
    std::ostringstream out;
    out << "window " << s.window() << "\n";
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j)
            for (int r = 0; r <= s.window(); ++r)
                out << "S " << i << " " << j << " " << r << " := "
                    << canonicalElementText(A, s.coeff(i, j, r)) << "\n";
    static const int pm[2] = {-1, 1};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int r = 0; r <= t.window(); ++r) {
                out << "D " << pm[a] << " " << pm[b] << " " << r << " := "
                    << canonicalElementText(A, t.d(pm[a], pm[b]).coeff(r)) << "\n";
                out << "Dt " << pm[a] << " " << pm[b] << " " << r << " := "
                    << canonicalElementText(A, t.dt(pm[a], pm[b]).coeff(r)) << "\n";
            }
    for (int a = 0; a < 2; ++a)
        for (int r = 0; r <= t.window(); ++r) {
            out << "E " << pm[a] << " " << r << " := "
                << canonicalElementText(A, t.e(pm[a]).coeff(r)) << "\n";
            out << "F " << pm[a] << " " << r << " := "
                << canonicalElementText(A, t.f(pm[a]).coeff(r)) << "\n";
        }
    for (int r = 0; r <= t.window(); ++r) {
        out << "G " << r << " := " << canonicalElementText(A, t.g().coeff(r)) << "\n";
        out << "Gt " << r << " := " << canonicalElementText(A, t.gt().coeff(r)) << "\n";
    }
    return out.str();
}

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string tableHash(const STable& s, const DrinfeldTable& t) {
    std::ostringstream out;
    out << std::hex << fnv1a64(serializeTables(s, t));
    return out.str();
}

}  // namespace ty3

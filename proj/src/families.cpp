#include "ty3/families.hpp"

#include <sstream>
#include <stdexcept>

namespace ty3 {

std::string BasisFamily::name() const {
    switch (kind) {
        case MnoS: return "mno-s";
        case Drinfeld: return "drinfeld-e";
        case DrinfeldF: return "drinfeld-f";
        case Shifted: return "shifted-" + std::to_string(k);
    }
    return "?";
}

std::vector<FamilyGenerator> familyGenerators(const BasisFamily& family, int maxWeight) {
    std::vector<FamilyGenerator> out;
    for (int w = 1; w <= maxWeight; ++w) {
        switch (family.kind) {
            case BasisFamily::MnoS:
                for (int i = -1; i <= 1; ++i)
                    for (int j = -1; j <= 1; ++j)
                        if (admissible(i, j, w)) out.push_back({atomS(i, j, w), w});
                break;
            case BasisFamily::Drinfeld:
            case BasisFamily::DrinfeldF:
                for (int i : {-1, 1}) {
                    Atom a = family.kind == BasisFamily::Drinfeld ? atomE(i, w) : atomF(i, w);
                    out.push_back({a, w});
                }
                for (int i : {-1, 1})
                    for (int j : {-1, 1})
                        if (admissible(i, j, w)) out.push_back({atomD(i, j, w), w});
                if (w % 2 == 0) out.push_back({atomG(w), w});
                break;
            case BasisFamily::Shifted:
                if (family.k < 1) throw std::invalid_argument("shifted family needs k >= 1");
                for (int i : {-1, 1})
                    for (int j : {-1, 1}) out.push_back({atomD(i, j, w), w});
                out.push_back({atomG(w), w});
                if (w > family.k)
                    for (int i : {-1, 1}) out.push_back({atomE(i, w), w});
                break;
        }
    }
    return out;
}

std::string FamilyMonomial::name(const std::vector<FamilyGenerator>& g) const {
    if (gens.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) s += "*";
        s += g[gens[i]].atom.name();
    }
    return s;
}

std::vector<FamilyMonomial> familyMonomials(const std::vector<FamilyGenerator>& gens, int maxWeight) {
    std::vector<FamilyMonomial> out;
    FamilyMonomial cur;
    // weakly increasing generator indices, total weight <= maxWeight
    std::function<void(size_t)> rec = [&](size_t from) {
        out.push_back(cur);
        for (size_t g = from; g < gens.size(); ++g) {
            if (cur.weight + gens[g].weight > maxWeight) continue;
            cur.gens.push_back(static_cast<int>(g));
            cur.weight += gens[g].weight;
            rec(g);
            cur.weight -= gens[g].weight;
            cur.gens.pop_back();
        }
    };
    rec(0);
    return out;
}

Element expandFamilyMonomial(ProductCache& cache, const std::vector<FamilyGenerator>& gens,
                             const FamilyMonomial& m) {
    std::vector<Atom> word;
    word.reserve(m.gens.size());
    for (int g : m.gens) word.push_back(gens[g].atom);
    return cache.eval(word);
}

namespace {
Rational leadCoeff(const Element& e) {
    const auto& t = e.terms().back();
    if (!t.second.isConstant())
        throw std::invalid_argument("SpanSolver: coefficients must be rational");
    return t.second.constant();
}
}  // namespace

std::map<int, Rational> SpanSolver::reduce(Element& e) const {
    std::map<int, Rational> used;
    while (!e.isZero()) {
        const Word& lead = e.terms().back().first;
        auto it = byLead_.find(lead);
        if (it == byLead_.end()) break;
        const Pivot& p = pivots_[it->second];
        Rational c = leadCoeff(e);
        e -= p.col * Poly(c);
        for (const auto& [col, pc] : p.coords) {
            auto [uit, fresh] = used.try_emplace(col, pc * c);
            if (!fresh) {
                uit->second += pc * c;
                if (uit->second.isZero()) used.erase(uit);
            }
        }
    }
    return used;
}

bool SpanSolver::addColumn(const Element& e) {
    int col = added_++;
    Element rem = e;
    std::map<int, Rational> used = reduce(rem);
    if (rem.isZero()) return false;
    Rational lc = leadCoeff(rem);
    Pivot p;
    p.col = rem * Poly(Rational(1) / lc);
    p.lead = p.col.terms().back().first;
    // col = sum used * columns + lc * pivot  =>  pivot coords
    p.coords[col] = Rational(1) / lc;
    for (const auto& [c, v] : used) p.coords[c] = -v / lc;
    byLead_[p.lead] = static_cast<int>(pivots_.size());
    pivots_.push_back(std::move(p));
    return true;
}

std::optional<std::map<int, Rational>> SpanSolver::solve(const Element& target) const {
    Element rem = target;
    std::map<int, Rational> used = reduce(rem);
    if (!rem.isZero()) return std::nullopt;
    return used;
}

Coordinates solveCoordinates(ProductCache& cache, const Element& target,
                             const BasisFamily& family, int maxWeight) {
    auto gens = familyGenerators(family, maxWeight);
    auto monos = familyMonomials(gens, maxWeight);
    SpanSolver solver;
    for (const auto& m : monos) solver.addColumn(expandFamilyMonomial(cache, gens, m));
    Coordinates out;
    auto sol = solver.solve(target);
    if (!sol) return out;
    out.inSpan = true;
    out.coords = *sol;
    return out;
}

}  // namespace ty3

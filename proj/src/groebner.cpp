#include "cellci/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "cellci/errors.hpp"

namespace cellci {

Polynomial Polynomial::from_terms(std::vector<Term> terms, const MonomialOrder& ord) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.monomial, b.monomial); });
    Polynomial p;
    for (Term& t : terms) {
        if (t.coefficient == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
            p.terms_.back().coefficient += t.coefficient;
            if (p.terms_.back().coefficient == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Polynomial Polynomial::from_binomial(const Binomial& f, const MonomialOrder& ord) {
    return from_terms({{f.plus, Rational(1)}, {f.minus, Rational(-1)}}, ord);
}

const Term& Polynomial::leading() const {
    if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
    return terms_.front();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t k = 0; k < a.terms_.size(); ++k)
        if (a.terms_[k].monomial != b.terms_[k].monomial ||
            a.terms_[k].coefficient != b.terms_[k].coefficient)
            return false;
    return true;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < terms_.size(); ++k) {
        const Term& t = terms_[k];
        const bool negative = t.coefficient < 0;
        Rational mag = negative ? Rational(-t.coefficient) : t.coefficient;
        if (k == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mag != 1 || t.monomial.is_one()) {
            out += mag.get_str();
            if (!t.monomial.is_one()) out += "*";
        }
        if (!t.monomial.is_one()) out += t.monomial.str();
    }
    return out;
}

Polynomial add(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
    std::vector<Term> merged;
    merged.reserve(a.terms().size() + b.terms().size());
    auto i = a.terms().begin(), j = b.terms().begin();
    while (i != a.terms().end() || j != b.terms().end()) {
        if (j == b.terms().end())
            merged.push_back(*i++);
        else if (i == a.terms().end())
            merged.push_back(*j++);
        else {
            const int cmp = ord.compare(i->monomial, j->monomial);
            if (cmp > 0)
                merged.push_back(*i++);
            else if (cmp < 0)
                merged.push_back(*j++);
            else {
                Rational c = i->coefficient + j->coefficient;
                if (c != 0) merged.push_back({i->monomial, std::move(c)});
                ++i, ++j;
            }
        }
    }
    return Polynomial::from_terms(std::move(merged), ord);
}

Polynomial subtract(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
    return add(a, scale(b, Rational(-1)), ord);
}

Polynomial scale(const Polynomial& p, const Rational& c) {
    if (c == 0) return {};
    Polynomial q = p;  // scaling by a nonzero constant keeps the term order
    for (Term& t : q.terms_) t.coefficient *= c;
    return q;
}

Polynomial multiply_monomial(const Polynomial& p, const Monomial& m) {
    Polynomial q = p;  // monomial orders are multiplicative: order preserved
    for (Term& t : q.terms_) t.monomial = t.monomial * m;
    return q;
}

Polynomial make_monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return scale(p, Rational(1) / p.leading().coefficient);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("s-polynomial of zero polynomial");
    const Monomial l = lcm(f.leading().monomial, g.leading().monomial);
    const Polynomial left =
        multiply_monomial(scale(f, Rational(1) / f.leading().coefficient),
                          l.quotient_by(f.leading().monomial));
    const Polynomial right =
        multiply_monomial(scale(g, Rational(1) / g.leading().coefficient),
                          l.quotient_by(g.leading().monomial));
    return subtract(left, right, ord);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g,
                       const MonomialOrder& ord) {
    Polynomial p = f;
    std::vector<Term> remainder;
    while (!p.is_zero()) {
        const Term& lead = p.leading();
        const Polynomial* reducer = nullptr;
        for (const Polynomial& cand : g) {
            if (cand.is_zero()) continue;
            if (cand.leading().monomial.divides(lead.monomial)) {
                reducer = &cand;
                break;
            }
        }
        if (reducer) {
            const Rational c = lead.coefficient / reducer->leading().coefficient;
            const Monomial q = lead.monomial.quotient_by(reducer->leading().monomial);
            p = subtract(p, multiply_monomial(scale(*reducer, c), q), ord);
        } else {
            remainder.push_back(lead);
            p = subtract(p, Polynomial::from_terms({lead}, ord), ord);
        }
    }
    return Polynomial::from_terms(std::move(remainder), ord);
}

namespace {

struct PairEntry {
    Monomial lcm_monomial;
    int i = 0;
    int j = 0;
};

struct PairCompare {
    const MonomialOrder* ord;
    bool operator()(const PairEntry& a, const PairEntry& b) const {
        const int cmp = ord->compare(a.lcm_monomial, b.lcm_monomial);
        if (cmp != 0) return cmp < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

// Keep elements whose leading monomial is not divisible by another's; then
// tail-reduce each against the rest and normalize to monic.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis, const MonomialOrder& ord) {
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading().monomial, b.leading().monomial);
    });
    std::vector<Polynomial> minimal;
    for (const Polynomial& g : basis) {
        bool redundant = false;
        for (const Polynomial& kept : minimal)
            if (kept.leading().monomial.divides(g.leading().monomial)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (size_t l = 0; l < minimal.size(); ++l)
            if (l != k) others.push_back(minimal[l]);
        reduced.push_back(make_monic(normal_form(minimal[k], others, ord)));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading().monomial, b.leading().monomial);
    });
    return reduced;
}

}  // namespace

GroebnerBasis buchberger(std::vector<Polynomial> gens, const MonomialOrder& ord,
                         const BuchbergerOptions& options) {
    GroebnerBasis out;
    out.order = ord;

    std::vector<Polynomial> basis;
    for (Polynomial& g : gens)
        if (!g.is_zero()) basis.push_back(make_monic(std::move(g)));

    std::set<PairEntry, PairCompare> queue{PairCompare{&ord}};
    auto push_pairs = [&](int fresh) {
        for (int k = 0; k < fresh; ++k)
            queue.insert({lcm(basis[k].leading().monomial, basis[fresh].leading().monomial),
                          k, fresh});
    };
    for (int t = 1; t < static_cast<int>(basis.size()); ++t) push_pairs(t);

    while (!queue.empty()) {
        const PairEntry pair = *queue.begin();
        queue.erase(queue.begin());
        if (coprime(basis[pair.i].leading().monomial, basis[pair.j].leading().monomial)) {
            ++out.spairs_skipped;
            continue;
        }
        if (++out.spairs_processed > options.budget)
            throw BudgetExhausted("budget exhausted: " + std::to_string(options.budget) +
                                  " S-pairs processed without completing the basis");
        const Polynomial s = s_polynomial(basis[pair.i], basis[pair.j], ord);
        Polynomial r = normal_form(s, basis, ord);
        if (!r.is_zero()) {
            basis.push_back(make_monic(std::move(r)));
            push_pairs(static_cast<int>(basis.size()) - 1);
        }
    }

    out.elements = reduce_basis(std::move(basis), ord);
    out.reduced = true;
    return out;
}

GroebnerBasis buchberger(const IdealPresentation& pres, const MonomialOrder& ord,
                         const BuchbergerOptions& options) {
    std::vector<Polynomial> gens;
    gens.reserve(pres.generators.size());
    for (const Binomial& f : pres.generators)
        gens.push_back(Polynomial::from_binomial(f, ord));
    return buchberger(std::move(gens), ord, options);
}

bool verify_groebner(const GroebnerBasis& gb) {
    const auto& g = gb.elements;
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j) {
            const Polynomial s = s_polynomial(g[i], g[j], gb.order);
            if (!normal_form(s, g, gb.order).is_zero()) return false;
        }
    return true;
}

MonomialIdeal make_monomial_ideal(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    MonomialIdeal m;
    for (const Monomial& cand : gens) {
        // Distinct monomials cannot divide each other both ways, so a single
        // divisibility scan minimalizes to the antichain.
        bool redundant = false;
        for (const Monomial& other : gens)
            if (other != cand && other.divides(cand)) {
                redundant = true;
                break;
            }
        if (!redundant) m.min_generators.push_back(cand);
    }
    return m;
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
    std::vector<Monomial> lts;
    lts.reserve(gb.elements.size());
    for (const Polynomial& g : gb.elements) lts.push_back(g.leading().monomial);
    return make_monomial_ideal(std::move(lts));
}

bool is_monomial_ci(const MonomialIdeal& m) {
    for (size_t i = 0; i < m.min_generators.size(); ++i)
        for (size_t j = i + 1; j < m.min_generators.size(); ++j)
            if (!coprime(m.min_generators[i], m.min_generators[j])) return false;
    return true;
}

namespace {

struct HittingSetSolver {
    std::vector<std::vector<Point>> sets;
    int best = 0;

    bool hit_by(const std::vector<Point>& set, const std::set<Point>& chosen) const {
        for (const Point& v : set)
            if (chosen.count(v)) return true;
        return false;
    }

    // Greedy count of pairwise disjoint un-hit sets: each needs its own
    // variable, so it lower-bounds the remaining cost.
    int lower_bound(const std::set<Point>& chosen) const {
        std::set<Point> used;
        int count = 0;
        for (const auto& set : sets) {
            if (hit_by(set, chosen)) continue;
            bool disjoint = true;
            for (const Point& v : set)
                if (used.count(v)) {
                    disjoint = false;
                    break;
                }
            if (disjoint) {
                ++count;
                used.insert(set.begin(), set.end());
            }
        }
        return count;
    }

    void search(std::set<Point>& chosen) {
        const std::vector<Point>* open = nullptr;
        for (const auto& set : sets)
            if (!hit_by(set, chosen)) {
                open = &set;
                break;
            }
        if (!open) {
            best = std::min(best, static_cast<int>(chosen.size()));
            return;
        }
        if (static_cast<int>(chosen.size()) + lower_bound(chosen) >= best) return;
        for (const Point& v : *open) {
            chosen.insert(v);
            search(chosen);
            chosen.erase(v);
        }
    }
};

}  // namespace

int monomial_ideal_height(const MonomialIdeal& m) {
    if (m.min_generators.empty()) return 0;
    HittingSetSolver solver;
    for (const Monomial& g : m.min_generators) {
        if (g.is_one()) throw std::invalid_argument("unit ideal has no height");
        solver.sets.push_back(g.support());
    }

    // Greedy upper bound seed: repeatedly take the variable hitting the most
    // remaining sets.
    std::set<Point> chosen;
    std::vector<bool> hit(solver.sets.size(), false);
    while (true) {
        std::map<Point, int> gain;
        for (size_t k = 0; k < solver.sets.size(); ++k)
            if (!hit[k])
                for (const Point& v : solver.sets[k]) ++gain[v];
        if (gain.empty()) break;
        Point pick = gain.begin()->first;
        int pick_gain = 0;
        for (const auto& [v, g] : gain)
            if (g > pick_gain) {
                pick = v;
                pick_gain = g;
            }
        chosen.insert(pick);
        for (size_t k = 0; k < solver.sets.size(); ++k)
            if (!hit[k])
                for (const Point& v : solver.sets[k])
                    if (v == pick) hit[k] = true;
    }
    solver.best = static_cast<int>(chosen.size());

    std::set<Point> work;
    solver.search(work);
    return solver.best;
}

HeightComputation compute_height(const CellCollection& c, OrderKind kind,
                                 const BuchbergerOptions& options) {
    HeightComputation out;
    if (c.empty()) return out;
    const MonomialOrder ord = monomial_order_for(c, kind);
    out.basis = buchberger(generators(c), ord, options);
    out.initial = initial_ideal(out.basis);
    out.height = monomial_ideal_height(out.initial);
    return out;
}

int height(const CellCollection& c) { return compute_height(c).height; }

std::string groebner_dump(const GroebnerBasis& gb) {
    std::string out;
    for (const Polynomial& g : gb.elements) out += g.str() + "\n";
    return out;
}

std::string monomial_ideal_dump(const MonomialIdeal& m) {
    std::string out;
    for (const Monomial& g : m.min_generators) out += g.str() + "\n";
    return out;
}

}  // namespace cellci

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cellci/order.hpp"

namespace cellci {

using Rational = mpq_class;

struct Term {
    Monomial monomial;
    Rational coefficient;
};

// A sparse polynomial with exact rational coefficients. Terms are kept
// strictly decreasing under the monomial order the polynomial was built
// with; all arithmetic takes that order explicitly.
class Polynomial {
public:
    Polynomial() = default;  // zero

    static Polynomial from_terms(std::vector<Term> terms, const MonomialOrder& ord);
    static Polynomial from_binomial(const Binomial& f, const MonomialOrder& ord);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const;  // throws on zero

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    // Terms in decreasing order; unit coefficients elide the "1*".
    std::string str() const;

private:
    friend Polynomial scale(const Polynomial& p, const Rational& c);
    friend Polynomial multiply_monomial(const Polynomial& p, const Monomial& m);

    std::vector<Term> terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord);
Polynomial subtract(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord);
Polynomial scale(const Polynomial& p, const Rational& c);
Polynomial multiply_monomial(const Polynomial& p, const Monomial& m);
Polynomial make_monic(const Polynomial& p);

struct BuchbergerOptions {
    long long budget = 1'000'000;  // cap on S-pairs that reach reduction
};

struct GroebnerBasis {
    std::vector<Polynomial> elements;  // ascending by leading monomial
    MonomialOrder order;
    bool reduced = false;
    long long spairs_processed = 0;
    long long spairs_skipped = 0;  // dropped by the coprimality criterion
};

// lcm(LT(f),LT(g))/LT(f)*f - lcm/LT(g)*g with leading coefficients divided
// out, so the leading terms cancel exactly. Throws on zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

// Full division remainder: no term of the result is divisible by any
// leading monomial of G. Deterministic for a fixed G ordering.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g,
                       const MonomialOrder& ord);

// Buchberger with the normal selection strategy (smallest lcm first, ties
// by generator index) and the coprimality criterion. Returns the reduced
// Groebner basis. Throws BudgetExhausted when the pair budget is exceeded.
GroebnerBasis buchberger(std::vector<Polynomial> gens, const MonomialOrder& ord,
                         const BuchbergerOptions& options = {});
GroebnerBasis buchberger(const IdealPresentation& pres, const MonomialOrder& ord,
                         const BuchbergerOptions& options = {});

// Post-hoc audit: every S-polynomial of the basis reduces to zero. No
// criterion shortcuts; every pair is reduced.
bool verify_groebner(const GroebnerBasis& gb);

// A monomial ideal by its minimal generators (an antichain under
// divisibility), sorted in storage order.
struct MonomialIdeal {
    std::vector<Monomial> min_generators;
};

MonomialIdeal make_monomial_ideal(std::vector<Monomial> gens);

// Leading monomials of a reduced basis, minimalized under divisibility.
MonomialIdeal initial_ideal(const GroebnerBasis& gb);

// True iff the minimal generators are pairwise coprime.
bool is_monomial_ci(const MonomialIdeal& m);

// Height of a monomial ideal: the minimum number of variables meeting every
// minimal generator's support. Exact branch and bound.
int monomial_ideal_height(const MonomialIdeal& m);

struct HeightComputation {
    int height = 0;
    GroebnerBasis basis;
    MonomialIdeal initial;
};

// ht(I_C) via the initial ideal of the reduced Groebner basis of the inner
// 2-minor generators; the order choice does not change the result.
HeightComputation compute_height(const CellCollection& c, OrderKind kind = OrderKind::snake,
                                 const BuchbergerOptions& options = {});
int height(const CellCollection& c);

// One polynomial per line, terms in decreasing order.
std::string groebner_dump(const GroebnerBasis& gb);
std::string monomial_ideal_dump(const MonomialIdeal& m);

}  // namespace cellci

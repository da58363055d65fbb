#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "cellci/grid.hpp"

namespace cellci {

// A monomial in the vertex-indexed variables x_v, stored as a sparse list of
// (vertex, exponent) factors with positive exponents, sorted by vertex
// storage order. operator<=> is the structural order used for containers;
// order-dependent comparison lives in MonomialOrder.
class Monomial {
public:
    Monomial() = default;  // the monomial 1
    static Monomial variable(const Point& v) { return product({{v, 1}}); }
    static Monomial product(std::vector<std::pair<Point, int>> factors);

    bool is_one() const { return factors_.empty(); }
    int degree() const;
    int exponent(const Point& v) const;
    const std::vector<std::pair<Point, int>>& factors() const { return factors_; }
    std::vector<Point> support() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& m) const;
    // Exact quotient *this / d. Requires d.divides(*this).
    Monomial quotient_by(const Monomial& d) const;

    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    friend bool coprime(const Monomial& a, const Monomial& b) {
        return gcd(a, b).is_one();
    }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    // "x_i_j" per variable, '^e' for exponents > 1, '*'-joined, "1" when empty.
    std::string str() const;

private:
    std::vector<std::pair<Point, int>> factors_;
};

// A pure-difference binomial plus - minus. For inner 2-minors, plus is the
// product over the diagonal corners and minus over the anti-diagonal ones.
struct Binomial {
    Monomial plus;
    Monomial minus;

    friend auto operator<=>(const Binomial&, const Binomial&) = default;
    std::string str() const { return plus.str() + " - " + minus.str(); }
};

// A generating set together with its ambient (translated) vertex set.
// Variables are identified by grid point after canonical translation;
// `offset` maps them back: original = translated + offset.
struct IdealPresentation {
    std::vector<Binomial> generators;
    std::vector<Point> ambient;
    Point offset{0, 0};
};

// The inner 2-minor x_a x_b - x_c x_d of a proper interval.
// Throws std::invalid_argument when the interval is not proper.
Binomial inner_minor(const Interval& iv);

// One binomial per inner interval of C, in canonical interval order, over
// the canonically translated frame. This is G(I_C).
IdealPresentation generators(const CellCollection& c);

// One binomial per cell of C: the generators of the adjacent-minor subideal.
IdealPresentation adjacent_minors(const CellCollection& c);

// Minimal number of generators of I_C: the number of inner intervals. The
// test suite cross-checks this against the rank of the degree-2 coefficient
// matrix of the generators.
int mu(const CellCollection& c);

}  // namespace cellci

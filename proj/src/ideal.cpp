#include "cellci/ideal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cellci {

Monomial Monomial::product(std::vector<std::pair<Point, int>> factors) {
    std::map<Point, int> merged;
    for (const auto& [v, e] : factors) merged[v] += e;
    Monomial m;
    for (const auto& [v, e] : merged) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e > 0) m.factors_.emplace_back(v, e);
    }
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::exponent(const Point& v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const auto& f, const Point& p) { return f.first < p; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

std::vector<Point> Monomial::support() const {
    std::vector<Point> s;
    s.reserve(factors_.size());
    for (const auto& [v, e] : factors_) s.push_back(v);
    return s;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first))
            out.factors_.push_back(*a++);
        else if (a == factors_.end() || b->first < a->first)
            out.factors_.push_back(*b++);
        else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    return out;
}

bool Monomial::divides(const Monomial& m) const {
    for (const auto& [v, e] : factors_)
        if (m.exponent(v) < e) return false;
    return true;
}

Monomial Monomial::quotient_by(const Monomial& d) const {
    Monomial out;
    for (const auto& [v, e] : factors_) {
        const int q = e - d.exponent(v);
        if (q < 0) throw std::invalid_argument("inexact monomial quotient");
        if (q > 0) out.factors_.emplace_back(v, q);
    }
    return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first))
            out.factors_.push_back(*i++);
        else if (i == a.factors_.end() || j->first < i->first)
            out.factors_.push_back(*j++);
        else {
            out.factors_.emplace_back(i->first, std::max(i->second, j->second));
            ++i, ++j;
        }
    }
    return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first)
            ++i;
        else if (j->first < i->first)
            ++j;
        else {
            out.factors_.emplace_back(i->first, std::min(i->second, j->second));
            ++i, ++j;
        }
    }
    return out;
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : factors_) {
        if (!s.empty()) s += "*";
        s += "x_" + std::to_string(v.i) + "_" + std::to_string(v.j);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

Binomial inner_minor(const Interval& iv) {
    if (!iv.proper()) throw std::invalid_argument("interval is not proper");
    return Binomial{Monomial::product({{iv.a, 1}, {iv.b, 1}}),
                    Monomial::product({{iv.c(), 1}, {iv.d(), 1}})};
}

namespace {

IdealPresentation presentation_from_intervals(const CellCollection& c,
                                              const std::vector<Interval>& ivs) {
    const Point offset = canonical_offset(c);
    const CellCollection shifted = c.translated(Point{0, 0} - offset);
    IdealPresentation pres;
    pres.offset = offset;
    pres.ambient = shifted.vertices();
    pres.generators.reserve(ivs.size());
    for (const Interval& iv : ivs) {
        const Interval t{iv.a - offset, iv.b - offset};
        pres.generators.push_back(inner_minor(t));
    }
    return pres;
}

}  // namespace

IdealPresentation generators(const CellCollection& c) {
    return presentation_from_intervals(c, inner_intervals(c));
}

IdealPresentation adjacent_minors(const CellCollection& c) {
    std::vector<Interval> ivs;
    ivs.reserve(c.cells().size());
    for (const Cell& cell : c.cells()) ivs.push_back(cell.interval());
    return presentation_from_intervals(c, ivs);
}

int mu(const CellCollection& c) {
    return static_cast<int>(inner_intervals(c).size());
}

}  // namespace cellci

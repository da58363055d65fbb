#pragma once

#include <map>
#include <string>
#include <vector>

#include "cellci/ideal.hpp"

namespace cellci {

enum class OrderKind { snake, rowmajor };

std::string to_string(OrderKind kind);

// A total order on a vertex set: ascending_[r] is the vertex of rank r, and
// a larger rank means a larger variable. Vertices are stored in the
// canonically translated frame; `offset` maps them back to the caller's
// coordinates for reporting.
class VertexOrder {
public:
    VertexOrder() = default;
    VertexOrder(std::vector<Point> ascending, Point offset, std::string name);

    int size() const { return static_cast<int>(ascending_.size()); }
    // Throws std::invalid_argument for vertices outside the order.
    int rank(const Point& v) const;
    bool knows(const Point& v) const { return rank_.count(v) != 0; }
    const std::vector<Point>& ascending() const { return ascending_; }
    const Point& offset() const { return offset_; }
    const std::string& name() const { return name_; }

private:
    std::vector<Point> ascending_;
    std::map<Point, int> rank_;
    Point offset_{0, 0};
    std::string name_;
};

// The snake order on V(C) after canonical translation: (i,j) < (k,l) iff
// j < l, or j = l with j even and i < k, or j = l with j odd and i > k.
// Rows run bottom to top, even rows left to right, odd rows right to left.
// Throws std::invalid_argument("empty collection") when C is empty.
VertexOrder snake_vertex_order(const CellCollection& c);

// Plain row-major order (rows bottom to top, always left to right); used as
// the alternative order for the height cross-check.
VertexOrder rowmajor_vertex_order(const CellCollection& c);

VertexOrder vertex_order_for(const CellCollection& c, OrderKind kind);

// The lexicographic monomial order induced by a vertex order: exponents are
// compared variable by variable from the largest variable down, and the
// first difference decides.
class MonomialOrder {
public:
    MonomialOrder() = default;
    explicit MonomialOrder(VertexOrder base) : base_(std::move(base)) {}

    // -1 (less), 0 (equal), +1 (greater).
    int compare(const Monomial& u, const Monomial& v) const;
    bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }
    bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }

    const VertexOrder& base() const { return base_; }
    const std::string& name() const { return base_.name(); }

private:
    VertexOrder base_;
};

MonomialOrder monomial_order_for(const CellCollection& c, OrderKind kind);

struct LeadingTerm {
    Monomial monomial;
    bool plus_leads = false;
};

// The larger of plus/minus under ord. Throws std::invalid_argument when
// plus == minus.
LeadingTerm leading_term(const MonomialOrder& ord, const Binomial& f);

}  // namespace cellci

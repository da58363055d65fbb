#include "cellci/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace cellci {

std::string to_string(OrderKind kind) {
    return kind == OrderKind::snake ? "snake" : "rowmajor";
}

VertexOrder::VertexOrder(std::vector<Point> ascending, Point offset, std::string name)
    : ascending_(std::move(ascending)), offset_(offset), name_(std::move(name)) {
    for (int r = 0; r < static_cast<int>(ascending_.size()); ++r) {
        if (!rank_.emplace(ascending_[r], r).second)
            throw std::invalid_argument("vertex order contains a duplicate vertex");
    }
}

int VertexOrder::rank(const Point& v) const {
    auto it = rank_.find(v);
    if (it == rank_.end())
        throw std::invalid_argument("vertex " + to_string(v) + " not in order");
    return it->second;
}

namespace {

bool snake_less(const Point& p, const Point& q) {
    if (p.j != q.j) return p.j < q.j;
    if (p.j % 2 == 0) return p.i < q.i;
    return p.i > q.i;
}

bool rowmajor_less(const Point& p, const Point& q) {
    if (p.j != q.j) return p.j < q.j;
    return p.i < q.i;
}

VertexOrder build_order(const CellCollection& c, bool (*less)(const Point&, const Point&),
                        const std::string& name) {
    if (c.empty()) throw std::invalid_argument("empty collection");
    const Point offset = canonical_offset(c);
    std::vector<Point> vs = c.translated(Point{0, 0} - offset).vertices();
    std::sort(vs.begin(), vs.end(), less);
    return VertexOrder(std::move(vs), offset, name);
}

}  // namespace

VertexOrder snake_vertex_order(const CellCollection& c) {
    return build_order(c, snake_less, "snake");
}

VertexOrder rowmajor_vertex_order(const CellCollection& c) {
    return build_order(c, rowmajor_less, "rowmajor");
}

VertexOrder vertex_order_for(const CellCollection& c, OrderKind kind) {
    return kind == OrderKind::snake ? snake_vertex_order(c) : rowmajor_vertex_order(c);
}

int MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
    if (u == v) return 0;
    // Exponents keyed by rank; scan from the largest variable down.
    std::map<int, std::pair<int, int>> by_rank;
    for (const auto& [p, e] : u.factors()) by_rank[base_.rank(p)].first = e;
    for (const auto& [p, e] : v.factors()) by_rank[base_.rank(p)].second = e;
    for (auto it = by_rank.rbegin(); it != by_rank.rend(); ++it) {
        const auto [eu, ev] = it->second;
        if (eu != ev) return eu < ev ? -1 : 1;
    }
    return 0;
}

MonomialOrder monomial_order_for(const CellCollection& c, OrderKind kind) {
    return MonomialOrder(vertex_order_for(c, kind));
}

LeadingTerm leading_term(const MonomialOrder& ord, const Binomial& f) {
    const int cmp = ord.compare(f.plus, f.minus);
    if (cmp == 0) throw std::invalid_argument("binomial has equal terms");
    return cmp > 0 ? LeadingTerm{f.plus, true} : LeadingTerm{f.minus, false};
}

}  // namespace cellci

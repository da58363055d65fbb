#include "cellci/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace cellci::linalg {

int rank(Matrix m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int k = r; k < rows; ++k)
            if (m[k][c] != 0) {
                pivot = k;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        for (int k = r + 1; k < rows; ++k) {
            for (int l = c + 1; l < cols; ++l) {
                // Bareiss update: exact division by the previous pivot.
                m[k][l] = (m[r][c] * m[k][l] - m[k][c] * m[r][l]) / prev;
            }
            m[k][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

Hermite hermite_form(Matrix a) {
    Hermite out;
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    out.u.assign(rows, Row(rows, 0));
    for (int k = 0; k < rows; ++k) out.u[k][k] = 1;

    auto row_axpy = [&](int dst, int src, const mpz_class& q) {
        for (int l = 0; l < cols; ++l) a[dst][l] -= q * a[src][l];
        for (int l = 0; l < rows; ++l) out.u[dst][l] -= q * out.u[src][l];
    };
    auto row_swap = [&](int x, int y) {
        std::swap(a[x], a[y]);
        std::swap(out.u[x], out.u[y]);
    };
    auto row_negate = [&](int x) {
        for (auto& v : a[x]) v = -v;
        for (auto& v : out.u[x]) v = -v;
    };

    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // Euclidean reduction until row r holds the only nonzero in column c.
        while (true) {
            int best = -1;
            for (int k = r; k < rows; ++k) {
                if (a[k][c] == 0) continue;
                if (best < 0 || cmp(abs(a[k][c]), abs(a[best][c])) < 0) best = k;
            }
            if (best < 0) break;
            if (best != r) row_swap(r, best);
            bool others = false;
            for (int k = r + 1; k < rows; ++k) {
                if (a[k][c] == 0) continue;
                mpz_class q = a[k][c] / a[r][c];  // truncated division is fine here
                row_axpy(k, r, q);
                if (a[k][c] != 0) others = true;
            }
            if (!others) break;
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0) row_negate(r);
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.h = std::move(a);
    return out;
}

std::optional<Row> solve_in_row_lattice(const Hermite& hf, Row e) {
    const int rows = static_cast<int>(hf.h.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(hf.h[0].size());
    if (static_cast<int>(e.size()) != cols)
        throw std::invalid_argument("dimension mismatch");

    Row y(rows, 0);
    for (int r = 0; r < hf.rank; ++r) {
        const int c = hf.pivot_cols[r];
        if (e[c] == 0) continue;
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), e[c].get_mpz_t(), hf.h[r][c].get_mpz_t());
        if (rem != 0) return std::nullopt;
        for (int l = c; l < cols; ++l) e[l] -= q * hf.h[r][l];
        y[r] = q;
    }
    for (const mpz_class& v : e)
        if (v != 0) return std::nullopt;

    Row x(rows, 0);
    for (int r = 0; r < rows; ++r) {
        if (y[r] == 0) continue;
        for (int k = 0; k < rows; ++k) x[k] += y[r] * hf.u[r][k];
    }
    return x;
}

}  // namespace cellci::linalg

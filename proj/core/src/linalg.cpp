#include "cyclaudit/linalg.hpp"

namespace cyclaudit {

std::size_t rref_in_place(RatMatrix& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        const Rational inv = m[rank][col].inverse();
        for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

RatMatrix nullspace(const RatMatrix& m, std::size_t cols) {
    RatMatrix a = m;
    for (auto& row : a)
        if (row.size() != cols) throw Error("nullspace: ragged matrix");
    const std::size_t rank = rref_in_place(a);

    std::vector<long> pivot_of_col(cols, -1);
    for (std::size_t r = 0; r < rank; ++r) {
        std::size_t c = 0;
        while (c < cols && a[r][c].is_zero()) ++c;
        if (c < cols) pivot_of_col[c] = static_cast<long>(r);
    }
    RatMatrix basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_col] = Rational(1);
        for (std::size_t c = 0; c < cols; ++c) {
            const long r = pivot_of_col[c];
            if (r >= 0) v[c] = -a[static_cast<std::size_t>(r)][free_col];
        }
        basis.push_back(std::move(v));
    }
    rref_in_place(basis);  // canonical representative of the nullspace
    return basis;
}

bool in_row_space(const RatMatrix& basis, const std::vector<Rational>& v) {
    RatMatrix a = basis;
    const std::size_t r0 = rref_in_place(a);
    a.push_back(v);
    return rref_in_place(a) == r0;
}

}  // namespace cyclaudit

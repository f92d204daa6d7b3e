#include "mhk/linalg.hpp"

namespace mhk {

namespace {

// Row-reduces in place; returns pivot column per row.
std::vector<std::size_t> reduce(Mat& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Scalar inv = m[row][col].inverse();
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Scalar f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(Mat m) {
    if (m.empty()) return 0;
    return reduce(m, m[0].size()).size();
}

std::optional<std::vector<Scalar>> nullspace_vector(Mat m, std::size_t cols) {
    auto pivots = reduce(m, cols);
    if (pivots.size() == cols) return std::nullopt;
    // pick the first free column and back-substitute
    std::size_t free_col = 0;
    for (; free_col < cols; ++free_col) {
        bool is_pivot = false;
        for (auto p : pivots)
            if (p == free_col) is_pivot = true;
        if (!is_pivot) break;
    }
    std::vector<Scalar> v(cols, Scalar(0));
    v[free_col] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free_col];
    return v;
}

}  // namespace mhk

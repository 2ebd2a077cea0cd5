#include "forge/linalg.hpp"

#include <algorithm>

namespace forge {

IntMat identity_matrix(int n) {
    IntMat g(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
    for (int i = 0; i < n; ++i) g[i][i] = 1;
    return g;
}

int int_rank(IntMat a) {
    if (a.empty() || a[0].empty()) return 0;
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(a[0].size());
    int rank = 0;
    Int prev = 1;
    for (int col = 0; col < n && rank < m; ++col) {
        int piv = -1;
        for (int i = rank; i < m; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int i = rank + 1; i < m; ++i) {
            for (int j = col + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

Int int_det(IntMat a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    if (static_cast<int>(a[0].size()) != n) throw input_error("int_det: matrix not square");
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

namespace {

// Column echelon via unimodular column operations; applies the same operations
// to `transform` (n x n) when given. Returns the number of pivot columns.
int column_echelon(IntMat& a, IntMat* transform) {
    if (a.empty()) return 0;
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(a[0].size());
    auto col_swap = [&](int x, int y) {
        if (x == y) return;
        for (int i = 0; i < m; ++i) std::swap(a[i][x], a[i][y]);
        if (transform)
            for (auto& row : *transform) std::swap(row[x], row[y]);
    };
    auto col_axpy = [&](int dst, int src, const Int& q) {  // col_dst -= q * col_src
        if (q == 0) return;
        for (int i = 0; i < m; ++i) a[i][dst] -= q * a[i][src];
        if (transform)
            for (auto& row : *transform) row[dst] -= q * row[src];
    };
    int lead = 0;
    for (int r = 0; r < m && lead < n; ++r) {
        int piv = -1;
        for (int j = lead; j < n; ++j)
            if (a[r][j] != 0) {
                piv = j;
                break;
            }
        if (piv < 0) continue;
        col_swap(lead, piv);
        for (int j = lead + 1; j < n; ++j) {
            while (a[r][j] != 0) {
                Int q = a[r][lead] / a[r][j];
                col_axpy(lead, j, q);
                col_swap(lead, j);
            }
        }
        ++lead;
    }
    return lead;
}

}  // namespace

IntMat integer_kernel(const IntMat& a) {
    if (a.empty() || a[0].empty()) {
        // kernel of an empty system is everything
        int n = a.empty() ? 0 : static_cast<int>(a[0].size());
        return identity_matrix(n);
    }
    const int n = static_cast<int>(a[0].size());
    IntMat work = a;
    IntMat g = identity_matrix(n);
    int rank = column_echelon(work, &g);
    IntMat kernel;
    for (int j = rank; j < n; ++j) {
        std::vector<Int> row(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) row[i] = g[i][j];
        kernel.push_back(std::move(row));
    }
    return kernel;
}

IntMat saturate_rows(const IntMat& a) {
    IntMat k = integer_kernel(a);
    if (k.empty()) {
        // full row span: the saturation is all of Z^n
        int n = a.empty() ? 0 : static_cast<int>(a[0].size());
        return identity_matrix(n);
    }
    return integer_kernel(k);
}

TUResult is_totally_unimodular(const IntMat& a, int size_bound) {
    TUResult res;
    if (a.empty() || a[0].empty()) {
        res.ok = true;
        return res;
    }
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(a[0].size());
    if (std::min(m, n) > size_bound)
        throw budget_error("is_totally_unimodular: matrix exceeds the size bound " +
                           std::to_string(size_bound));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (a[i][j] < -1 || a[i][j] > 1) {
                res.rows = {i};
                res.cols = {j};
                res.det = a[i][j];
                return res;
            }
    // enumerate all k x k submatrices, k >= 2
    std::vector<int> rows, cols;
    auto check = [&](int k) -> bool {
        IntMat sub(static_cast<std::size_t>(k), std::vector<Int>(static_cast<std::size_t>(k)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub[i][j] = a[rows[i]][cols[j]];
        Int d = int_det(sub);
        if (d < -1 || d > 1) {
            res.rows = rows;
            res.cols = cols;
            res.det = d;
            return false;
        }
        return true;
    };
    for (int k = 2; k <= std::min(m, n); ++k) {
        rows.assign(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i) rows[i] = i;
        while (true) {
            cols.assign(static_cast<std::size_t>(k), 0);
            for (int j = 0; j < k; ++j) cols[j] = j;
            while (true) {
                if (!check(k)) return res;
                int j = k - 1;
                while (j >= 0 && cols[j] == n - k + j) --j;
                if (j < 0) break;
                ++cols[j];
                for (int t = j + 1; t < k; ++t) cols[t] = cols[t - 1] + 1;
            }
            int i = k - 1;
            while (i >= 0 && rows[i] == m - k + i) --i;
            if (i < 0) break;
            ++rows[i];
            for (int t = i + 1; t < k; ++t) rows[t] = rows[t - 1] + 1;
        }
    }
    res.ok = true;
    return res;
}

namespace {

// Reduces to row echelon form; returns pivot columns.
std::vector<int> rat_echelon(RatMat& a) {
    std::vector<int> pivots;
    if (a.empty() || a[0].empty()) return pivots;
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(a[0].size());
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int piv = -1;
        for (int i = row; i < m; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[row], a[piv]);
        Rat inv = a[row][col];
        for (int j = col; j < n; ++j) a[row][j] /= inv;
        for (int i = 0; i < m; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int j = col; j < n; ++j) a[i][j] -= f * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<std::vector<Rat>> rat_solve(RatMat a, std::vector<Rat> b) {
    const int m = static_cast<int>(a.size());
    if (m != static_cast<int>(b.size())) throw input_error("rat_solve: shape mismatch");
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    for (int i = 0; i < m; ++i) a[i].push_back(b[i]);
    std::vector<int> pivots = rat_echelon(a);
    // inconsistent if a pivot landed in the augmented column
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    std::vector<Rat> x(static_cast<std::size_t>(n), Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][n];
    return x;
}

RatMat rat_nullspace(RatMat a) {
    if (a.empty() || a[0].empty()) {
        int n = a.empty() ? 0 : static_cast<int>(a[0].size());
        RatMat basis;
        for (int i = 0; i < n; ++i) {
            std::vector<Rat> row(static_cast<std::size_t>(n), Rat(0));
            row[i] = 1;
            basis.push_back(std::move(row));
        }
        return basis;
    }
    const int n = static_cast<int>(a[0].size());
    std::vector<int> pivots = rat_echelon(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int p : pivots) is_pivot[p] = true;
    RatMat basis;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Rat> v(static_cast<std::size_t>(n), Rat(0));
        v[j] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatMat> rat_inverse(RatMat a) {
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a[i].size()) != n) throw input_error("rat_inverse: matrix not square");
        for (int j = 0; j < n; ++j) a[i].push_back(i == j ? Rat(1) : Rat(0));
    }
    std::vector<int> pivots = rat_echelon(a);
    if (static_cast<int>(pivots.size()) != n || (n && pivots.back() >= n)) return std::nullopt;
    RatMat inv(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

int affine_rank(const std::vector<std::vector<Int>>& pts) {
    if (pts.size() <= 1) return 0;
    IntMat diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Int> d(pts[0].size());
        for (std::size_t j = 0; j < pts[0].size(); ++j) d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(d));
    }
    return int_rank(std::move(diffs));
}

}  // namespace forge

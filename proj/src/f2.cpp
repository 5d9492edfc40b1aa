#include "borfloer/f2.hpp"

#include "borfloer/errors.hpp"

namespace bf {

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b)
{
    if (a.cols() != b.rows()) fail(errc::bad_input, "matrix product shape mismatch");
    F2Matrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k)
            if (a.get(i, k)) {
                // r.row(i) ^= b.row(k)
                for (int j = 0; j < b.cols(); ++j)
                    if (b.get(k, j)) r.flip(i, j);
            }
    return r;
}

F2Matrix operator+(F2Matrix a, const F2Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(errc::bad_input, "matrix sum shape mismatch");
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (b.get(i, j)) a.flip(i, j);
    return a;
}

std::vector<char> F2Matrix::apply(const std::vector<char>& x) const
{
    if ((int)x.size() != cols_) fail(errc::bad_input, "apply shape mismatch");
    std::vector<char> y(rows_, 0);
    for (int j = 0; j < cols_; ++j)
        if (x[j])
            for (int i = 0; i < rows_; ++i)
                if (get(i, j)) y[i] ^= 1;
    return y;
}

int f2_rank(F2Matrix m)
{
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (m.get(r, col)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < m.cols(); ++c) {
                bool t = m.get(pivot, c);
                m.set(pivot, c, m.get(rank, c));
                m.set(rank, c, t);
            }
        for (int r = 0; r < m.rows(); ++r)
            if (r != rank && m.get(r, col)) m.xor_row(r, rank);
        ++rank;
    }
    return rank;
}

namespace {

// reduced row echelon of [A | b...]; returns pivot column per row
std::vector<int> rref(F2Matrix& m)
{
    std::vector<int> pivots;
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (m.get(r, col)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < m.cols(); ++c) {
                bool t = m.get(pivot, c);
                m.set(pivot, c, m.get(rank, c));
                m.set(rank, c, t);
            }
        for (int r = 0; r < m.rows(); ++r)
            if (r != rank && m.get(r, col)) m.xor_row(r, rank);
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

} // namespace

std::optional<std::vector<char>> f2_solve(const F2Matrix& a, const std::vector<char>& b)
{
    if ((int)b.size() != a.rows()) fail(errc::bad_input, "solve shape mismatch");
    F2Matrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.set(i, j, a.get(i, j));
        aug.set(i, a.cols(), b[i]);
    }
    // eliminate on the first a.cols() columns only
    std::vector<int> pivots;
    int rank = 0;
    for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
        int pivot = -1;
        for (int r = rank; r < a.rows(); ++r)
            if (aug.get(r, col)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c <= a.cols(); ++c) {
                bool t = aug.get(pivot, c);
                aug.set(pivot, c, aug.get(rank, c));
                aug.set(rank, c, t);
            }
        for (int r = 0; r < a.rows(); ++r)
            if (r != rank && aug.get(r, col)) aug.xor_row(r, rank);
        pivots.push_back(col);
        ++rank;
    }
    for (int r = rank; r < a.rows(); ++r)
        if (aug.get(r, a.cols())) return std::nullopt;
    std::vector<char> x(a.cols(), 0);
    for (int r = 0; r < rank; ++r) x[pivots[r]] = aug.get(r, a.cols());
    return x;
}

std::vector<std::vector<char>> f2_kernel(const F2Matrix& a)
{
    F2Matrix m = a;
    auto pivots = rref(m);
    std::vector<char> is_pivot(a.cols(), 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<char>> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<char> v(a.cols(), 0);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            if (m.get((int)r, free)) v[pivots[r]] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<F2Matrix> f2_inverse(const F2Matrix& a)
{
    if (a.rows() != a.cols()) return std::nullopt;
    int n = a.rows();
    F2Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.set(i, j, a.get(i, j));
        aug.set(i, n + i, true);
    }
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r)
            if (aug.get(r, col)) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        if (pivot != rank)
            for (int c = 0; c < 2 * n; ++c) {
                bool t = aug.get(pivot, c);
                aug.set(pivot, c, aug.get(rank, c));
                aug.set(rank, c, t);
            }
        for (int r = 0; r < n; ++r)
            if (r != rank && aug.get(r, col)) aug.xor_row(r, rank);
        ++rank;
    }
    if (rank < n) return std::nullopt;
    F2Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.set(i, j, aug.get(i, n + j));
    return inv;
}

std::vector<char> f2_reduce_mod_image(const F2Matrix& a, std::vector<char> v)
{
    if ((int)v.size() != a.rows()) fail(errc::bad_input, "reduce shape mismatch");
    // column space of A = row space of A^T; bring to RREF and eliminate
    F2Matrix t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.get(i, j)) t.set(j, i, true);
    auto pivots = rref(t);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (v[pivots[r]]) {
            for (int c = 0; c < t.cols(); ++c)
                if (t.get((int)r, c)) v[c] ^= 1;
        }
    }
    return v;
}

} // namespace bf

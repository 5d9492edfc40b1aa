#pragma once

// Dense GF(2) matrices backed by 64-bit blocks.  Sizes here are desk scale
// (a few hundred), so plain Gaussian elimination is all we need.

#include <cstdint>
#include <optional>
#include <vector>

namespace bf {

class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols) : rows_(rows), cols_(cols), words_((cols + 63) / 64)
    {
        data_.assign((size_t)rows_ * words_, 0);
    }
    static F2Matrix identity(int n)
    {
        F2Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const { return (word(r, c) >> (c & 63)) & 1; }
    void set(int r, int c, bool v)
    {
        if (v)
            word(r, c) |= uint64_t(1) << (c & 63);
        else
            word(r, c) &= ~(uint64_t(1) << (c & 63));
    }
    void flip(int r, int c) { word(r, c) ^= uint64_t(1) << (c & 63); }
    void xor_row(int dst, int src)
    {
        for (int w = 0; w < words_; ++w) data_[(size_t)dst * words_ + w] ^= data_[(size_t)src * words_ + w];
    }
    bool row_zero(int r) const
    {
        for (int w = 0; w < words_; ++w)
            if (data_[(size_t)r * words_ + w]) return false;
        return true;
    }
    bool is_zero() const
    {
        for (auto w : data_)
            if (w) return false;
        return true;
    }

    friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b);
    friend F2Matrix operator+(F2Matrix a, const F2Matrix& b);
    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

    std::vector<char> apply(const std::vector<char>& x) const; // this * x

private:
    uint64_t& word(int r, int c) { return data_[(size_t)r * words_ + (c >> 6)]; }
    const uint64_t& word(int r, int c) const { return data_[(size_t)r * words_ + (c >> 6)]; }
    int rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> data_;
};

int f2_rank(F2Matrix m);

// one solution of A x = b, if any
std::optional<std::vector<char>> f2_solve(const F2Matrix& a, const std::vector<char>& b);

// basis of ker A as column vectors
std::vector<std::vector<char>> f2_kernel(const F2Matrix& a);

std::optional<F2Matrix> f2_inverse(const F2Matrix& a);

// Canonical reduction of v modulo the column space of A (eliminate pivot
// coordinates of the column-space RREF).  Two vectors reduce equally iff they
// differ by an element of im A.
std::vector<char> f2_reduce_mod_image(const F2Matrix& a, std::vector<char> v);

} // namespace bf

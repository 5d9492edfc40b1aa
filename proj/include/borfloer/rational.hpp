#pragma once

// Exact rational arithmetic for planar incidence computations.  Backed by
// __int128 so cross-multiplied comparisons with 1e-4-scale perturbation
// denominators stay far from overflow.

#include <cstdint>
#include <string>

namespace bf {

using int128 = __int128;

inline int128 abs128(int128 v) { return v < 0 ? -v : v; }

inline int128 gcd128(int128 a, int128 b)
{
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct Rat {
    int128 num = 0;
    int128 den = 1; // always > 0

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(int128 n, int128 d) : num(n), den(d) { normalize(); }

    void normalize()
    {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        int128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(const Rat& a, const Rat& b) { return Rat(a.num * b.den, a.den * b.num); }
    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }
    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    int sign() const { return num < 0 ? -1 : num > 0 ? 1 : 0; }
    bool is_integer() const { return den == 1; }

    std::string str() const
    {
        auto i2s = [](int128 v) {
            if (v == 0) return std::string("0");
            bool neg = v < 0;
            if (neg) v = -v;
            std::string s;
            while (v > 0) {
                s.push_back(char('0' + int(v % 10)));
                v /= 10;
            }
            if (neg) s.push_back('-');
            return std::string(s.rbegin(), s.rend());
        };
        if (den == 1) return i2s(num);
        return i2s(num) + "/" + i2s(den);
    }
};

// Parses "a", "-a", "a/b".  Throws std::invalid_argument on garbage.
Rat parse_rat(const std::string& s);

} // namespace bf

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logw/errors.hpp"

namespace logw {

// Integer weight in fundamental-weight coordinates: c[i] = (alpha_{i+1}, mu).
// The same vector doubles as a z-monomial exponent.
struct Weight {
    std::vector<long long> c;

    Weight() = default;
    explicit Weight(std::size_t rank) : c(rank, 0) {}
    Weight(std::initializer_list<long long> v) : c(v) {}

    std::size_t rank() const { return c.size(); }
    long long& operator[](std::size_t i) { return c[i]; }
    long long operator[](std::size_t i) const { return c[i]; }

    bool operator==(const Weight& o) const { return c == o.c; }
    bool operator!=(const Weight& o) const { return c != o.c; }
    bool operator<(const Weight& o) const { return c < o.c; } // lex, for map keys

    Weight& operator+=(const Weight& o) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(Weight a) {
        for (auto& x : a.c) x = -x;
        return a;
    }
    friend Weight operator*(long long k, Weight a) {
        for (auto& x : a.c) x *= k;
        return a;
    }

    bool is_zero() const {
        for (auto x : c)
            if (x) return false;
        return true;
    }
    bool is_dominant() const {
        for (auto x : c)
            if (x < 0) return false;
        return true;
    }

    // "(c1,...,cl)"
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return s + ")";
    }
};

inline Weight fundamental_weight(std::size_t rank, std::size_t i1based) {
    if (i1based < 1 || i1based > rank) throw ArgumentError("fundamental weight index out of range");
    Weight w(rank);
    w[i1based - 1] = 1;
    return w;
}

} // namespace logw

#pragma once

#include "spinflat/rational.hpp"

#include <vector>

namespace spinflat {

struct RatMat;

/// Square integer matrix, row-major.
struct IntMat {
    int n = 0;
    std::vector<i64> a;

    IntMat() = default;
    explicit IntMat(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0) {}

    static IntMat identity(int n);

    i64& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
    i64 at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }

    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat& o) const { return n == o.n && a == o.a; }
    bool operator!=(const IntMat& o) const { return !(*this == o); }
    bool operator<(const IntMat& o) const { return n != o.n ? n < o.n : a < o.a; }

    i64 trace() const;
    bool is_identity() const;

    // One nonzero entry per row and column, each +-1.
    bool is_signed_permutation() const;
    // Parity of the underlying permutation times the product of signs.
    // Only valid for signed permutation matrices.
    int signed_permutation_det() const;

    RatMat to_rational() const;
    // Exact inverse; throws InternalError if singular or the inverse is not integral.
    IntMat inverse() const;
    i64 det() const;
    std::string str() const;
};

/// Square matrix of exact rationals, row-major.
struct RatMat {
    int n = 0;
    std::vector<Rat> a;

    RatMat() = default;
    explicit RatMat(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_) {}

    static RatMat identity(int n);

    Rat& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }

    RatMat operator*(const RatMat& o) const;
    std::vector<Rat> operator*(const std::vector<Rat>& v) const;
    bool operator==(const RatMat& o) const;
    bool operator!=(const RatMat& o) const { return !(*this == o); }

    Rat det() const;
    RatMat inverse() const; // throws InternalError if singular
    bool is_integral() const;
    IntMat to_int() const; // requires is_integral
};

} // namespace spinflat

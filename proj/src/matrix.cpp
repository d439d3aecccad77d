#include "spinflat/matrix.hpp"

#include <sstream>

namespace spinflat {

IntMat IntMat::identity(int n) {
    IntMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (n != o.n) throw InternalError("integer matrix dimension mismatch");
    IntMat r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            i64 x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < n; ++j)
                r.at(i, j) = checked_add(r.at(i, j), checked_mul(x, o.at(k, j)));
        }
    return r;
}

i64 IntMat::trace() const {
    i64 t = 0;
    for (int i = 0; i < n; ++i) t = checked_add(t, at(i, i));
    return t;
}

bool IntMat::is_identity() const { return *this == identity(n); }

bool IntMat::is_signed_permutation() const {
    std::vector<int> col_seen(n, 0);
    for (int r = 0; r < n; ++r) {
        int nonzero = 0;
        for (int c = 0; c < n; ++c) {
            i64 v = at(r, c);
            if (v == 0) continue;
            if (v != 1 && v != -1) return false;
            ++nonzero;
            ++col_seen[c];
        }
        if (nonzero != 1) return false;
    }
    for (int c = 0; c < n; ++c)
        if (col_seen[c] != 1) return false;
    return true;
}

int IntMat::signed_permutation_det() const {
    // row of the nonzero entry in each column
    std::vector<int> row(n, -1);
    int sign = 1;
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r)
            if (at(r, c) != 0) {
                row[c] = r;
                if (at(r, c) < 0) sign = -sign;
            }
    std::vector<bool> seen(n, false);
    for (int c = 0; c < n; ++c) {
        if (seen[c]) continue;
        int len = 0;
        for (int j = c; !seen[j]; j = row[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

RatMat IntMat::to_rational() const {
    RatMat m(n);
    for (std::size_t i = 0; i < a.size(); ++i) m.a[i] = Rat(a[i]);
    return m;
}

IntMat IntMat::inverse() const {
    RatMat inv = to_rational().inverse();
    if (!inv.is_integral()) throw InternalError("matrix inverse is not integral");
    return inv.to_int();
}

i64 IntMat::det() const {
    Rat d = to_rational().det();
    if (!d.is_integer()) throw InternalError("integer determinant came out fractional");
    return d.num;
}

std::string IntMat::str() const {
    std::ostringstream os;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) os << (c ? " " : "") << at(r, c);
        os << '\n';
    }
    return os.str();
}

RatMat RatMat::identity(int n) {
    RatMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (n != o.n) throw InternalError("rational matrix dimension mismatch");
    RatMat r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Rat& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) = r.at(i, j) + x * o.at(k, j);
        }
    return r;
}

std::vector<Rat> RatMat::operator*(const std::vector<Rat>& v) const {
    std::vector<Rat> r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i] = r[i] + at(i, j) * v[j];
    return r;
}

bool RatMat::operator==(const RatMat& o) const { return n == o.n && a == o.a; }

Rat RatMat::det() const {
    RatMat m = *this;
    Rat d(1);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (!m.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != c) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
            d = -d;
        }
        d = d * m.at(c, c);
        Rat inv = m.at(c, c).reciprocal();
        for (int r = c + 1; r < n; ++r) {
            Rat f = m.at(r, c) * inv;
            if (f.is_zero()) continue;
            for (int j = c; j < n; ++j) m.at(r, j) = m.at(r, j) - f * m.at(c, j);
        }
    }
    return d;
}

RatMat RatMat::inverse() const {
    RatMat m = *this;
    RatMat inv = identity(n);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (!m.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw InternalError("singular matrix has no inverse");
        if (pivot != c)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(c, j));
                std::swap(inv.at(pivot, j), inv.at(c, j));
            }
        Rat pr = m.at(c, c).reciprocal();
        for (int j = 0; j < n; ++j) {
            m.at(c, j) = m.at(c, j) * pr;
            inv.at(c, j) = inv.at(c, j) * pr;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            Rat f = m.at(r, c);
            if (f.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                m.at(r, j) = m.at(r, j) - f * m.at(c, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(c, j);
            }
        }
    }
    return inv;
}

bool RatMat::is_integral() const {
    for (const Rat& x : a)
        if (!x.is_integer()) return false;
    return true;
}

IntMat RatMat::to_int() const {
    if (!is_integral()) throw InternalError("matrix is not integral");
    IntMat m(n);
    for (std::size_t i = 0; i < a.size(); ++i) m.a[i] = a[i].num;
    return m;
}

} // namespace spinflat

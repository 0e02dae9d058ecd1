#pragma once

// Integer polynomials in one variable, stored as ascending coefficient
// vectors, plus exact Lagrange interpolation over the rationals (used to
// recover a determinant polynomial from point evaluations).

#include "gog/integers.hpp"

#include <cassert>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace gog {

struct IntPoly {
    std::vector<Int> c;  // c[k] multiplies u^k; normalized: no trailing zeros

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }
    static IntPoly constant(const Int& a) { return IntPoly(std::vector<Int>{a}); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(c.size()) - 1; }
    Int coeff(std::size_t k) const { return k < c.size() ? c[k] : Int(0); }

    bool operator==(const IntPoly& o) const { return c == o.c; }

    Int eval(const Int& x) const {
        Int v = 0;
        for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
        return v;
    }

    IntPoly operator+(const IntPoly& o) const {
        std::vector<Int> r(std::max(c.size(), o.c.size()), Int(0));
        for (std::size_t k = 0; k < c.size(); ++k) r[k] += c[k];
        for (std::size_t k = 0; k < o.c.size(); ++k) r[k] += o.c[k];
        return IntPoly(std::move(r));
    }
    IntPoly operator-(const IntPoly& o) const {
        std::vector<Int> r(std::max(c.size(), o.c.size()), Int(0));
        for (std::size_t k = 0; k < c.size(); ++k) r[k] += c[k];
        for (std::size_t k = 0; k < o.c.size(); ++k) r[k] -= o.c[k];
        return IntPoly(std::move(r));
    }
    IntPoly operator*(const IntPoly& o) const {
        if (is_zero() || o.is_zero()) return IntPoly();
        std::vector<Int> r(c.size() + o.c.size() - 1, Int(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
        return IntPoly(std::move(r));
    }

    // Exact division; asserts the remainder vanishes.
    IntPoly divide_exact(const IntPoly& d) const {
        assert(!d.is_zero());
        std::vector<Int> rem = c, q(c.size(), Int(0));
        while (rem.size() >= d.c.size() && !(rem.size() == 1 && rem[0] == 0)) {
            // strip leading zeros
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (rem.size() < d.c.size()) break;
            std::size_t shift = rem.size() - d.c.size();
            assert(rem.back() % d.c.back() == 0);
            Int f = rem.back() / d.c.back();
            q[shift] = f;
            for (std::size_t k = 0; k < d.c.size(); ++k) rem[shift + k] -= f * d.c[k];
        }
        for (const Int& x : rem) assert(x == 0);
        return IntPoly(std::move(q));
    }

    // Coefficients of p(t+1), i.e. the Taylor expansion at u = 1, ascending
    // in t = u-1.  Computed by repeated synthetic division by (u-1).
    std::vector<Int> expansion_at_one() const {
        std::vector<Int> work = c, out;
        if (work.empty()) return {Int(0)};
        for (std::size_t round = 0; round < c.size(); ++round) {
            // divide work by (u-1): remainder = value at 1
            Int carry = 0;
            for (std::size_t k = work.size(); k-- > 0;) {
                Int t = work[k] + carry;
                work[k] = carry;  // after the pass, work[k] = sum of original coeffs above k
                carry = t;
            }
            out.push_back(carry);
            // quotient coefficients are work[0..size-2]; the top slot is 0
            work.pop_back();
            if (work.empty()) break;
        }
        return out;
    }

    std::string str(const std::string& var = "u") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c.size(); k-- > 0;) {
            if (c[k] == 0) continue;
            Int a = c[k];
            if (first) {
                if (a < 0) os << "-";
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            Int mag = abs(a);
            if (mag != 1 || k == 0) os << mag;
            if (k >= 1) {
                if (mag != 1) os << "*";
                os << var;
                if (k >= 2) os << "^" << k;
            }
            first = false;
        }
        return os.str();
    }
};

// power (1 - u^2)^e
inline IntPoly one_minus_u2_pow(std::size_t e) {
    IntPoly base(std::vector<Int>{Int(1), Int(0), Int(-1)});
    IntPoly r = IntPoly::constant(1);
    for (std::size_t i = 0; i < e; ++i) r = r * base;
    return r;
}

// Exact Lagrange interpolation through (xs[i], ys[i]); result must have
// integer coefficients (asserted via to_int).
inline IntPoly interpolate_integer(const std::vector<Int>& xs, const std::vector<Int>& ys) {
    assert(xs.size() == ys.size());
    const std::size_t n = xs.size();
    std::vector<Rat> acc(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        // basis polynomial prod_{j != i} (u - xs[j]) / (xs[i]-xs[j])
        std::vector<Rat> num{Rat(1)};
        Rat den(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Rat> next(num.size() + 1, Rat(0));
            for (std::size_t k = 0; k < num.size(); ++k) {
                next[k + 1] += num[k];
                next[k] -= num[k] * Rat(xs[j]);
            }
            num = std::move(next);
            den *= Rat(xs[i]) - Rat(xs[j]);
        }
        Rat scale = Rat(ys[i]) / den;
        for (std::size_t k = 0; k < num.size(); ++k) acc[k] += num[k] * scale;
    }
    std::vector<Int> out(n, Int(0));
    for (std::size_t k = 0; k < n; ++k) out[k] = to_int(acc[k]);
    return IntPoly(std::move(out));
}

}  // namespace gog

#pragma once

#include <vector>

#include "word.hpp"

// Transforms from sequences over {1,2,3} into H = Q<x,y>. A sequence encodes one
// monomial of the lambda expansion: 1 for lambda1, 2 for lambda2, 3 for lambda3.

namespace hgmpl {

using MuSequence = std::vector<int>;

inline void check_mu(const MuSequence& mu) {
    for (int v : mu)
        if (v < 1 || v > 3) throw std::invalid_argument("mu entries must be 1, 2 or 3");
}

namespace detail {

inline FormalSum xy_minus_yx() {
    FormalSum s(Word("xy"));
    s.add_term(Word("yx"), -1);
    return s;
}

inline FormalSum x_plus_y() {
    FormalSum s(Word("x"));
    s.add_term(Word("y"), 1);
    return s;
}

} // namespace detail

// T0: (3,1) |-> xy - yx, then 1 |-> y, 2 |-> x + y, 3 |-> x, scanning left to right
inline FormalSum T0(const MuSequence& mu) {
    check_mu(mu);
    FormalSum acc = FormalSum::unit();
    for (std::size_t i = 0; i < mu.size();) {
        if (mu[i] == 3 && i + 1 < mu.size() && mu[i + 1] == 1) {
            acc = concat(acc, detail::xy_minus_yx());
            i += 2;
        } else if (mu[i] == 1) {
            acc = acc.appended('y');
            i += 1;
        } else if (mu[i] == 2) {
            acc = concat(acc, detail::x_plus_y());
            i += 1;
        } else {
            acc = acc.appended('x');
            i += 1;
        }
    }
    return acc;
}

// T0': plain letterwise substitution 1 |-> y, 2 |-> x + y, 3 |-> x
inline FormalSum T0prime(const MuSequence& mu) {
    check_mu(mu);
    FormalSum acc = FormalSum::unit();
    for (int v : mu) {
        if (v == 1) acc = acc.appended('y');
        else if (v == 2) acc = concat(acc, detail::x_plus_y());
        else acc = acc.appended('x');
    }
    return acc;
}

// T1: (1,3) |-> xy - yx, then 1 |-> x, 2 |-> x + y, 3 |-> y
inline FormalSum T1(const MuSequence& mu) {
    check_mu(mu);
    FormalSum acc = FormalSum::unit();
    for (std::size_t i = 0; i < mu.size();) {
        if (mu[i] == 1 && i + 1 < mu.size() && mu[i + 1] == 3) {
            acc = concat(acc, detail::xy_minus_yx());
            i += 2;
        } else if (mu[i] == 1) {
            acc = acc.appended('x');
            i += 1;
        } else if (mu[i] == 2) {
            acc = concat(acc, detail::x_plus_y());
            i += 1;
        } else {
            acc = acc.appended('y');
            i += 1;
        }
    }
    return acc;
}

// T_infty: (1,3) |-> xy - yx, then 1 |-> -(x + y), 2 |-> -y, 3 |-> x
inline FormalSum T_infty(const MuSequence& mu) {
    check_mu(mu);
    FormalSum acc = FormalSum::unit();
    for (std::size_t i = 0; i < mu.size();) {
        if (mu[i] == 1 && i + 1 < mu.size() && mu[i + 1] == 3) {
            acc = concat(acc, detail::xy_minus_yx());
            i += 2;
        } else if (mu[i] == 1) {
            acc = Rational(-1) * concat(acc, detail::x_plus_y());
            i += 1;
        } else if (mu[i] == 2) {
            acc = Rational(-1) * acc.appended('y');
            i += 1;
        } else {
            acc = acc.appended('x');
            i += 1;
        }
    }
    return acc;
}

// J(l,m,n): all sequences with l ones, m twos, n threes, lexicographic order
inline std::vector<MuSequence> enumerate_J(int l, int m, int n) {
    std::vector<MuSequence> out;
    if (l < 0 || m < 0 || n < 0) return out;
    MuSequence cur;
    cur.reserve(static_cast<std::size_t>(l + m + n));
    auto rec = [&](auto&& self, int a, int b, int c) -> void {
        if (a == 0 && b == 0 && c == 0) {
            out.push_back(cur);
            return;
        }
        if (a > 0) { cur.push_back(1); self(self, a - 1, b, c); cur.pop_back(); }
        if (b > 0) { cur.push_back(2); self(self, a, b - 1, c); cur.pop_back(); }
        if (c > 0) { cur.push_back(3); self(self, a, b, c - 1); cur.pop_back(); }
    };
    rec(rec, l, m, n);
    return out;
}

// J'(l,m,n): J(l,m,n) without any adjacent (1,3) subsequence
inline std::vector<MuSequence> enumerate_Jprime(int l, int m, int n) {
    std::vector<MuSequence> out;
    for (MuSequence& mu : enumerate_J(l, m, n)) {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < mu.size(); ++i)
            if (mu[i] == 1 && mu[i + 1] == 3) { ok = false; break; }
        if (ok) out.push_back(std::move(mu));
    }
    return out;
}

inline FormalSum sum_T0_over_J(int l, int m, int n) {
    FormalSum acc;
    for (const MuSequence& mu : enumerate_J(l, m, n)) acc += T0(mu);
    return acc;
}

// closed form of sum_T0_over_J: binomial-weighted sums of words grouped by
// weight l+m+n, depth l+p and yx-pair count q
inline FormalSum sum_T0_closed_form(int l, int m, int n) {
    FormalSum acc;
    int k = l + m + n;
    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q) {
            long long coeff = 0;
            for (int j = 0; j <= l; ++j)
                coeff += binom(q, j) * binom(l + p - q, l - j) * binom(m + n - p - j, n);
            if (coeff == 0) continue;
            for (std::uint64_t bits = 0; bits < (1ull << k); ++bits) {
                std::string s(static_cast<std::size_t>(k), 'x');
                for (int i = 0; i < k; ++i)
                    if (bits >> i & 1) s[static_cast<std::size_t>(i)] = 'y';
                Word w(s);
                if (static_cast<int>(w.depth()) == l + p && w.yx_pairs() == q)
                    acc.add_term(w, coeff);
            }
        }
    return acc;
}

// a^{(l,m,n)}_{p,q} = sum_k C(q,k) C(l+p-q-1, l-k-1) C(m+n-p-k-1, n-1)
inline long long a_coeff(int l, int m, int n, int p, int q) {
    long long r = 0;
    for (int k = 0; k <= l - 1; ++k)
        r += binom(q, k) * binom(l + p - q - 1, l - k - 1) * binom(m + n - p - k - 1, n - 1);
    return r;
}

} // namespace hgmpl

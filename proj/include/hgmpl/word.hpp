#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

// Words over the alphabet {x,y} span the noncommutative polynomial ring H = Q<x,y>.
// H^1 = Q + H*y  (words ending in y, plus the empty word),
// H^0 = Q + x*H*y (admissible words: start with x, end with y).

namespace hgmpl {

class Word {
public:
    Word() = default;
    explicit Word(std::string_view letters) : s_(letters) {
        for (char c : s_)
            if (c != 'x' && c != 'y') throw std::invalid_argument("word letters must be x or y");
    }

    static Word unit() { return Word(); }

    std::size_t weight() const { return s_.size(); }
    bool empty() const { return s_.empty(); }

    std::size_t depth() const {
        return static_cast<std::size_t>(std::count(s_.begin(), s_.end(), 'y'));
    }

    // adjacent "yx" pairs; height below is this count plus one
    int yx_pairs() const {
        int c = 0;
        for (std::size_t i = 0; i + 1 < s_.size(); ++i)
            if (s_[i] == 'y' && s_[i + 1] == 'x') ++c;
        return c;
    }
    int height() const { return yx_pairs() + 1; }

    bool is_h1() const { return s_.empty() || s_.back() == 'y'; }
    bool is_admissible() const {
        return s_.empty() || (s_.front() == 'x' && s_.back() == 'y');
    }

    char at(std::size_t i) const { return s_[i]; }
    char front() const { return s_.front(); }
    char back() const { return s_.back(); }

    Word prefix(std::size_t n) const { return Word(std::string_view(s_).substr(0, n)); }
    Word suffix_from(std::size_t i) const { return Word(std::string_view(s_).substr(i)); }

    Word appended(char c) const {
        Word w(*this);
        w.s_.push_back(c);
        return w;
    }
    Word prepended(char c) const {
        Word w;
        w.s_.reserve(s_.size() + 1);
        w.s_.push_back(c);
        w.s_ += s_;
        return w;
    }

    friend Word concat(const Word& a, const Word& b) {
        Word w;
        w.s_ = a.s_ + b.s_;
        return w;
    }

    // anti-automorphism tau: reverse the word and swap x <-> y
    Word tau() const {
        Word w;
        w.s_.assign(s_.rbegin(), s_.rend());
        for (char& c : w.s_) c = (c == 'x') ? 'y' : 'x';
        return w;
    }

    std::size_t trailing_x() const {
        std::size_t n = 0;
        while (n < s_.size() && s_[s_.size() - 1 - n] == 'x') ++n;
        return n;
    }

    std::string to_string() const { return s_.empty() ? "1" : s_; }
    const std::string& letters() const { return s_; }

    // shortlex, the canonical serialization order
    friend bool operator<(const Word& a, const Word& b) {
        if (a.s_.size() != b.s_.size()) return a.s_.size() < b.s_.size();
        return a.s_ < b.s_;
    }
    friend bool operator==(const Word& a, const Word& b) = default;

private:
    std::string s_;
};

inline Word x_power(std::size_t n) { return Word(std::string(n, 'x')); }
inline Word y_power(std::size_t n) { return Word(std::string(n, 'y')); }

class FormalSum {
public:
    FormalSum() = default;
    explicit FormalSum(const Word& w, Rational c = 1) {
        if (c != 0) m_[w] = std::move(c);
    }

    static FormalSum unit() { return FormalSum(Word::unit()); }

    bool is_zero() const { return m_.empty(); }
    std::size_t size() const { return m_.size(); }

    const std::map<Word, Rational>& terms() const { return m_; }

    Rational coeff(const Word& w) const {
        auto it = m_.find(w);
        return it == m_.end() ? Rational(0) : it->second;
    }

    void add_term(const Word& w, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = m_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) m_.erase(it);
        }
    }

    FormalSum& operator+=(const FormalSum& o) {
        for (auto& [w, c] : o.m_) add_term(w, c);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o) {
        for (auto& [w, c] : o.m_) add_term(w, -c);
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }

    friend FormalSum operator*(const Rational& c, const FormalSum& s) {
        FormalSum r;
        if (c == 0) return r;
        for (auto& [w, k] : s.m_) r.m_[w] = c * k;
        return r;
    }

    // concatenation product of H, extended bilinearly
    friend FormalSum concat(const FormalSum& a, const FormalSum& b) {
        FormalSum r;
        for (auto& [u, cu] : a.m_)
            for (auto& [v, cv] : b.m_) r.add_term(concat(u, v), cu * cv);
        return r;
    }

    FormalSum appended(char c) const {
        FormalSum r;
        for (auto& [w, k] : m_) r.m_[w.appended(c)] = k;
        return r;
    }
    FormalSum prepended(char c) const {
        FormalSum r;
        for (auto& [w, k] : m_) r.m_[w.prepended(c)] = k;
        return r;
    }

    friend bool operator==(const FormalSum& a, const FormalSum& b) = default;

private:
    std::map<Word, Rational> m_;
};

// shuffle product: a1 w1 sh a2 w2 = a1 (w1 sh a2 w2) + a2 (a1 w1 sh w2), 1 sh w = w
inline FormalSum shuffle(const Word& u, const Word& v) {
    if (u.empty()) return FormalSum(v);
    if (v.empty()) return FormalSum(u);
    FormalSum r = shuffle(u.suffix_from(1), v).prepended(u.front());
    r += shuffle(u, v.suffix_from(1)).prepended(v.front());
    return r;
}

inline FormalSum shuffle(const FormalSum& a, const FormalSum& b) {
    FormalSum r;
    for (auto& [u, cu] : a.terms())
        for (auto& [v, cv] : b.terms()) r += (cu * cv) * shuffle(u, v);
    return r;
}

// reg1: projection H -> H^1 along the shuffle decomposition H = H^1 sh Q[x].
// On a monomial w y x^n it is (-1)^n (w sh x^n) y; pure x powers map to 0 (n >= 1).
inline FormalSum reg1(const Word& w) {
    if (w.is_h1()) return FormalSum(w);
    std::size_t n = w.trailing_x();
    if (n == w.weight()) return FormalSum();
    Word head = w.prefix(w.weight() - n - 1);
    FormalSum r = shuffle(head, x_power(n)).appended('y');
    return (n % 2 ? Rational(-1) : Rational(1)) * r;
}

inline FormalSum reg1(const FormalSum& s) {
    FormalSum r;
    for (auto& [w, c] : s.terms()) r += c * reg1(w);
    return r;
}

inline FormalSum tau(const FormalSum& s) {
    FormalSum r;
    for (auto& [w, c] : s.terms()) r.add_term(w.tau(), c);
    return r;
}

// index (k1,...,kn) <-> word x^{k1-1} y ... x^{kn-1} y
inline Word word_from_index(const std::vector<int>& k) {
    std::string s;
    for (int ki : k) {
        if (ki < 1) throw std::invalid_argument("index entries must be >= 1");
        s.append(static_cast<std::size_t>(ki - 1), 'x');
        s.push_back('y');
    }
    return Word(s);
}

inline std::vector<int> index_from_word(const Word& w) {
    if (!w.is_h1()) throw std::invalid_argument("not an H1 word: " + w.to_string());
    std::vector<int> k;
    int run = 0;
    for (std::size_t i = 0; i < w.weight(); ++i) {
        if (w.at(i) == 'x') {
            ++run;
        } else {
            k.push_back(run + 1);
            run = 0;
        }
    }
    return k;
}

// all admissible words of given weight, depth and height, in shortlex order
inline std::vector<Word> admissible_words(int k, int n, int s) {
    std::vector<Word> out;
    if (k < 2 || n < 1 || s < 1 || s > n || k < n + s) return out;
    for (std::uint64_t bits = 0; bits < (1ull << (k - 2)); ++bits) {
        std::string inner(static_cast<std::size_t>(k - 2), 'x');
        for (int i = 0; i < k - 2; ++i)
            if (bits >> i & 1) inner[static_cast<std::size_t>(i)] = 'y';
        Word w(Word(inner).prepended('x').appended('y'));
        if (static_cast<int>(w.depth()) == n && w.height() == s) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// all H^1 words (ending in y) of given weight, depth and height
inline std::vector<Word> h1_words(int k, int n, int s) {
    std::vector<Word> out;
    if (k < 1 || n < 1 || s < 1 || s > n || k < n + s - 1) return out;
    for (std::uint64_t bits = 0; bits < (1ull << (k - 1)); ++bits) {
        std::string head(static_cast<std::size_t>(k - 1), 'x');
        for (int i = 0; i < k - 1; ++i)
            if (bits >> i & 1) head[static_cast<std::size_t>(i)] = 'y';
        Word w(Word(head).appended('y'));
        if (static_cast<int>(w.depth()) == n && w.height() == s) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// all H^1 words (ending in y) of given weight, in shortlex order
inline std::vector<Word> h1_words_of_weight(int k) {
    std::vector<Word> out;
    if (k < 1) return out;
    for (std::uint64_t bits = 0; bits < (1ull << (k - 1)); ++bits) {
        std::string head(static_cast<std::size_t>(k - 1), 'x');
        for (int i = 0; i < k - 1; ++i)
            if (bits >> i & 1) head[static_cast<std::size_t>(i)] = 'y';
        out.push_back(Word(head).appended('y'));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Word> admissible_words_of_weight(int k) {
    std::vector<Word> out;
    if (k < 2) return out;
    for (std::uint64_t bits = 0; bits < (1ull << (k - 2)); ++bits) {
        std::string mid(static_cast<std::size_t>(k - 2), 'x');
        for (int i = 0; i < k - 2; ++i)
            if (bits >> i & 1) mid[static_cast<std::size_t>(i)] = 'y';
        out.push_back(Word("x" + mid + "y"));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// canonical text form: one "word numerator denominator" line per term, shortlex order
inline std::string to_text(const FormalSum& s) {
    std::string out;
    for (auto& [w, c] : s.terms()) {
        out += w.to_string();
        out += ' ';
        out += numerator(c).str();
        out += ' ';
        out += denominator(c).str();
        out += '\n';
    }
    return out;
}

} // namespace hgmpl

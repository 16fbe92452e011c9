#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations of {0, ..., N-1} with cycle-notation I/O.
 *
 * Internally symbols are 0-based. The text forms are 1-based, either cycle
 * notation "(1,2)(3,5,4)" with fixed points optional, or an image list
 * "[2,1,3]". Composition follows (a * b)(x) = a(b(x)).
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "origami/errors.hpp"

namespace origami {

class Permutation {
public:
    Permutation() = default;

    /// Validates that images is a bijection of {0, ..., images.size()-1}.
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<char> seen(images_.size(), 0);
        for (int x : images_) {
            if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[x])
                throw domain_error("permutation images are not a bijection");
            seen[x] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 0);
        return from_trusted(std::move(im));
    }

    /// Skips validation; callers guarantee a bijection.
    static Permutation from_trusted(std::vector<int> images) {
        Permutation p;
        p.images_ = std::move(images);
        return p;
    }

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
        return from_trusted(std::move(inv));
    }

    /// (a * b)(x) = a(b(x)).
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.size() != b.size()) throw domain_error("permutation size mismatch");
        std::vector<int> im(a.images_.size());
        for (int i = 0; i < a.size(); ++i) im[i] = a.images_[b.images_[i]];
        return from_trusted(std::move(im));
    }

    /// p^k for any integer k.
    Permutation power(std::int64_t k) const {
        std::vector<int> im(images_.size());
        for (const auto& cyc : cycles()) {
            const auto len = static_cast<std::int64_t>(cyc.size());
            const auto shift = ((k % len) + len) % len;
            for (std::size_t j = 0; j < cyc.size(); ++j) im[cyc[j]] = cyc[(j + shift) % cyc.size()];
        }
        return from_trusted(std::move(im));
    }

    /// sigma * p * sigma^-1, i.e. p with symbols renamed by sigma.
    Permutation conjugated_by(const Permutation& sigma) const { return sigma * *this * sigma.inverse(); }

    /// All cycles including fixed points, each starting at its smallest symbol,
    /// ordered by that symbol.
    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<char> seen(images_.size(), 0);
        for (int i = 0; i < size(); ++i) {
            if (seen[i]) continue;
            std::vector<int> cyc;
            for (int x = i; !seen[x]; x = images_[x]) {
                seen[x] = 1;
                cyc.push_back(x);
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }

    /// Cycle lengths sorted in decreasing order, fixed points included.
    std::vector<int> cycle_type() const {
        std::vector<int> t;
        for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
        std::sort(t.begin(), t.end(), std::greater<>());
        return t;
    }

    int cycle_count() const { return static_cast<int>(cycles().size()); }

    /// 1-based cycle notation with fixed points omitted; "()" for the identity.
    std::string to_cycle_string() const {
        std::string s;
        for (const auto& c : cycles()) {
            if (c.size() < 2) continue;
            s += '(';
            for (std::size_t j = 0; j < c.size(); ++j) {
                if (j) s += ',';
                s += std::to_string(c[j] + 1);
            }
            s += ')';
        }
        return s.empty() ? "()" : s;
    }

    /// 1-based image list, e.g. "[2,1,3]".
    std::string to_image_string() const {
        std::string s = "[";
        for (int i = 0; i < size(); ++i) {
            if (i) s += ',';
            s += std::to_string(images_[i] + 1);
        }
        return s + "]";
    }

    /// Parses cycle notation or an image list on n symbols. offset shifts the
    /// reported error positions when text is a slice of a larger string.
    static Permutation parse(std::string_view text, int n, std::size_t offset = 0);

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

namespace detail {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;
    std::size_t offset = 0;

    void skip_blanks() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool done() {
        skip_blanks();
        return i >= s.size();
    }
    char peek() {
        skip_blanks();
        return i < s.size() ? s[i] : '\0';
    }
    std::size_t pos() const { return offset + i; }
    void expect(char c) {
        if (peek() != c) throw parse_error(std::string("expected '") + c + "'", pos());
        ++i;
    }
    long long number() {
        skip_blanks();
        const std::size_t start = i;
        if (i < s.size() && s[i] == '-') ++i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i == start || (i == start + 1 && s[start] == '-')) throw parse_error("expected a number", offset + start);
        if (i - start > 9) throw parse_error("number too large", offset + start);
        return std::stoll(std::string(s.substr(start, i - start)));
    }
};

inline int checked_symbol(long long x, int n, std::size_t pos) {
    if (x < 1 || x > n) throw parse_error("symbol " + std::to_string(x) + " out of range", pos);
    return static_cast<int>(x - 1);
}

}  // namespace detail

inline Permutation Permutation::parse(std::string_view text, int n, std::size_t offset) {
    if (n <= 0) throw parse_error("number of symbols must be positive", offset);
    detail::Cursor cur{text, 0, offset};
    std::vector<int> im(n, -1);

    if (cur.peek() == '[') {
        cur.expect('[');
        int k = 0;
        if (cur.peek() != ']') {
            for (;;) {
                const std::size_t at = cur.pos();
                const long long x = cur.number();
                if (k >= n) throw parse_error("image list longer than " + std::to_string(n), at);
                im[k++] = detail::checked_symbol(x, n, at);
                if (cur.peek() == ',') {
                    cur.expect(',');
                    continue;
                }
                break;
            }
        }
        cur.expect(']');
        if (k != n) throw parse_error("image list has " + std::to_string(k) + " entries, expected " + std::to_string(n), cur.pos());
        if (!cur.done()) throw parse_error("trailing characters", cur.pos());
        std::vector<char> hit(n, 0);
        for (int x : im) {
            if (hit[x]) throw parse_error("image list is not a bijection (symbol " + std::to_string(x + 1) + " repeated)", offset);
            hit[x] = 1;
        }
        return from_trusted(std::move(im));
    }

    std::vector<char> used(n, 0);
    while (!cur.done()) {
        cur.expect('(');
        std::vector<int> cyc;
        if (cur.peek() != ')') {
            for (;;) {
                const std::size_t at = cur.pos();
                const int x = detail::checked_symbol(cur.number(), n, at);
                if (used[x]) throw parse_error("symbol " + std::to_string(x + 1) + " repeated", at);
                used[x] = 1;
                cyc.push_back(x);
                if (cur.peek() == ',') {
                    cur.expect(',');
                    continue;
                }
                break;
            }
        }
        cur.expect(')');
        for (std::size_t j = 0; j < cyc.size(); ++j) im[cyc[j]] = cyc[(j + 1) % cyc.size()];
    }
    for (int i = 0; i < n; ++i)
        if (im[i] < 0) im[i] = i;
    return from_trusted(std::move(im));
}

}  // namespace origami

#pragma once

/**
 * @file signature.hpp
 * @brief Stratum signatures of Abelian and quadratic differentials.
 */

#include <algorithm>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "origami/errors.hpp"

namespace origami {

/// H(m_1, ..., m_n): zero degrees of an Abelian differential. Degree-0 entries
/// are kept apart as marked points; degrees() holds only positive entries,
/// sorted increasingly. The torus H() has genus 1.
class AbelianSignature {
public:
    AbelianSignature() = default;

    explicit AbelianSignature(std::vector<int> entries) {
        for (int m : entries) {
            if (m < 0) throw domain_error("Abelian degrees must be nonnegative");
            if (m == 0)
                ++marked_points_;
            else
                degrees_.push_back(m);
        }
        std::sort(degrees_.begin(), degrees_.end());
        const int total = std::accumulate(degrees_.begin(), degrees_.end(), 0);
        if (total % 2 != 0) throw domain_error("sum of Abelian degrees must be even (2g-2)");
        genus_ = total / 2 + 1;
    }

    const std::vector<int>& degrees() const { return degrees_; }
    int marked_points() const { return marked_points_; }
    int genus() const { return genus_; }
    /// Number of singularities including marked points.
    int point_count() const { return static_cast<int>(degrees_.size()) + marked_points_; }

    /// "H(1,1)", "H()" for the torus; marked points appended as zeros.
    std::string to_string() const {
        std::string s = "H(";
        bool first = true;
        for (int m : degrees_) {
            if (!first) s += ',';
            s += std::to_string(m);
            first = false;
        }
        for (int k = 0; k < marked_points_; ++k) {
            if (!first) s += ',';
            s += '0';
            first = false;
        }
        return s + ")";
    }

    friend bool operator==(const AbelianSignature&, const AbelianSignature&) = default;
    friend auto operator<=>(const AbelianSignature&, const AbelianSignature&) = default;

private:
    std::vector<int> degrees_;
    int marked_points_ = 0;
    int genus_ = 1;
};

/// Q(d_1, ..., d_n): orders of singularities of a quadratic differential with
/// at most simple poles (d = -1). Zero orders are rejected.
class QuadraticSignature {
public:
    QuadraticSignature() = default;

    explicit QuadraticSignature(std::vector<int> orders) : orders_(std::move(orders)) {
        for (int d : orders_) {
            if (d < -1) throw domain_error("quadratic orders must be >= -1");
            if (d == 0) throw domain_error("quadratic orders must be nonzero");
        }
        std::sort(orders_.begin(), orders_.end(), std::greater<>());
        const int total = std::accumulate(orders_.begin(), orders_.end(), 0);
        if (total < -4 || (total + 4) % 4 != 0) throw domain_error("sum of quadratic orders must be 4g-4 with g >= 0");
        genus_ = (total + 4) / 4;
    }

    /// Sorted decreasingly, e.g. (2,1,1) or (1,-1,-1,-1,-1,-1).
    const std::vector<int>& orders() const { return orders_; }
    int genus() const { return genus_; }
    int odd_count() const {
        return static_cast<int>(std::count_if(orders_.begin(), orders_.end(), [](int d) { return d % 2 != 0; }));
    }

    std::string to_string() const {
        std::string s = "Q(";
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(orders_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const QuadraticSignature&, const QuadraticSignature&) = default;

private:
    std::vector<int> orders_;
    int genus_ = 0;
};

/// Parses "1,1,2", "2,-1^6" (d^k repeats d k times) or "" into a list of ints.
inline std::vector<int> parse_degree_list(std::string_view text) {
    std::vector<int> out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '(' || text[i] == ')')) ++i;
    };
    auto number = [&]() -> int {
        skip();
        const std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == start || (i == start + 1 && (text[start] == '-' || text[start] == '+')))
            throw parse_error("expected an integer", start);
        if (i - start > 6) throw parse_error("integer too large", start);
        return std::stoi(std::string(text.substr(start, i - start)));
    };
    skip();
    if (i >= text.size()) return out;
    for (;;) {
        const int d = number();
        int reps = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
            ++i;
            const std::size_t at = i;
            reps = number();
            if (reps < 1) throw parse_error("repetition count must be positive", at);
        }
        out.insert(out.end(), reps, d);
        skip();
        if (i >= text.size()) break;
        if (text[i] != ',') throw parse_error(std::string("unexpected character '") + text[i] + "'", i);
        ++i;
    }
    return out;
}

}  // namespace origami

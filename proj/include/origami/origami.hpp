#pragma once

/**
 * @file origami.hpp
 * @brief Square-tiled surfaces as transitive pairs of permutations.
 *
 * An origami on N unit squares is a pair (h, v) of permutations of the
 * squares: h(i) is the right neighbour of square i and v(i) its top
 * neighbour. The group generated by h and v must act transitively.
 *
 * Conventions used throughout the library:
 *  - the commutator is h * v * h^-1 * v^-1; its cycles of length L > 1 are the
 *    cone points of degree L - 1;
 *  - T(h, v) = (h, v * h^-1) is the horizontal shear, acting on holonomy
 *    vectors by [[1,1],[0,1]];
 *  - R(h, v) = (v^-1, h) is the quarter turn, acting on holonomy vectors by
 *    [[0,-1],[1,0]].
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "origami/errors.hpp"
#include "origami/permutation.hpp"
#include "origami/rational.hpp"
#include "origami/signature.hpp"

namespace origami {

class Origami {
public:
    Origami() = default;

    /// Throws domain_error on a size mismatch and disconnected_error when the
    /// pair is not transitive.
    Origami(Permutation h, Permutation v) : h_(std::move(h)), v_(std::move(v)) {
        if (h_.size() != v_.size()) throw domain_error("permutations act on different numbers of squares");
        if (h_.size() == 0) throw domain_error("an origami needs at least one square");
        if (!transitive()) throw disconnected_error();
    }

    /// Skips validation; callers guarantee equal sizes and transitivity.
    static Origami from_trusted(Permutation h, Permutation v) {
        Origami o;
        o.h_ = std::move(h);
        o.v_ = std::move(v);
        return o;
    }

    int size() const { return h_.size(); }
    const Permutation& h() const { return h_; }
    const Permutation& v() const { return v_; }

    Permutation commutator() const { return h_ * v_ * h_.inverse() * v_.inverse(); }

    /// Compact byte string identifying the labelled pair; used as a hash key.
    std::string key() const {
        std::string k;
        k.reserve(2 * h_.size());
        for (int x : h_.images()) k.push_back(static_cast<char>(x));
        for (int x : v_.images()) k.push_back(static_cast<char>(x));
        return k;
    }

    /// "n=3; h=(1,2); v=(1,3)".
    std::string to_string() const {
        return "n=" + std::to_string(size()) + "; h=" + h_.to_cycle_string() + "; v=" + v_.to_cycle_string();
    }

    friend bool operator==(const Origami&, const Origami&) = default;
    friend auto operator<=>(const Origami&, const Origami&) = default;

    /// True when <h, v> acts transitively on the squares.
    bool transitive() const {
        const int n = size();
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int y : {h_(x), v_(x)}) {
                if (!seen[y]) {
                    seen[y] = 1;
                    ++count;
                    stack.push_back(y);
                }
            }
        }
        return count == n;
    }

private:
    Permutation h_;
    Permutation v_;
};

inline Origami make_origami(Permutation h, Permutation v) { return Origami(std::move(h), std::move(v)); }

/// Parses `n=<N>; h=<perm>; v=<perm>` where each perm is cycle notation or a
/// 1-based image list. Errors carry the offending position.
inline Origami parse_origami(std::string_view text) {
    int n = -1;
    std::string_view h_text, v_text;
    std::size_t h_off = 0, v_off = 0;
    bool have_h = false, have_v = false;

    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string_view::npos) end = text.size();
        std::size_t lead = 0;
        const std::string_view field = detail::trim(text.substr(start, end - start), &lead);
        const std::size_t at = start + lead;
        if (!field.empty()) {
            const auto eq = field.find('=');
            if (eq == std::string_view::npos) throw parse_error("expected key=value", at);
            const std::string_view key = detail::trim(field.substr(0, eq));
            std::size_t vlead = 0;
            const std::string_view value = detail::trim(field.substr(eq + 1), &vlead);
            const std::size_t value_at = at + eq + 1 + vlead;
            if (key == "n") {
                if (value.empty() || value.size() > 6 || !std::all_of(value.begin(), value.end(), [](char c) { return c >= '0' && c <= '9'; }))
                    throw parse_error("n must be a positive integer", value_at);
                n = std::stoi(std::string(value));
                if (n <= 0) throw parse_error("n must be a positive integer", value_at);
                if (n > 255) throw parse_error("at most 255 squares are supported", value_at);
            } else if (key == "h") {
                h_text = value;
                h_off = value_at;
                have_h = true;
            } else if (key == "v") {
                v_text = value;
                v_off = value_at;
                have_v = true;
            } else {
                throw parse_error("unknown key '" + std::string(key) + "'", at);
            }
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    if (n < 0) throw parse_error("missing n=", text.size());
    if (!have_h) throw parse_error("missing h=", text.size());
    if (!have_v) throw parse_error("missing v=", text.size());
    Permutation h = Permutation::parse(h_text, n, h_off);
    Permutation v = Permutation::parse(v_text, n, v_off);
    return Origami(std::move(h), std::move(v));
}

/// Stratum of the origami read off the commutator: every cycle of length L > 1
/// is a zero of degree L - 1. Commuting pairs give the torus H(), genus 1.
inline AbelianSignature stratum_of(const Origami& o) {
    std::vector<int> degrees;
    for (int len : o.commutator().cycle_type())
        if (len > 1) degrees.push_back(len - 1);
    return AbelianSignature(std::move(degrees));
}

/// Genus from the Euler characteristic of the square complex:
/// V - 2N + N = 2 - 2g with V = number of commutator cycles.
inline int euler_genus(const Origami& o) {
    const int vertices = o.commutator().cycle_count();
    return (o.size() - vertices + 2) / 2;
}

/// Renames squares by sigma: (sigma h sigma^-1, sigma v sigma^-1).
inline Origami conjugate(const Origami& o, const Permutation& sigma) {
    return Origami::from_trusted(o.h().conjugated_by(sigma), o.v().conjugated_by(sigma));
}

/// Lexicographically smallest (h images, then v images) relabelling obtained by
/// breadth-first numbering from each start square, visiting the right
/// neighbour before the top neighbour.
inline Origami canonical_form(const Origami& o) {
    const int n = o.size();
    const auto& h = o.h().images();
    const auto& v = o.v().images();
    std::vector<int> best_h(n), best_v(n), cur_h(n), cur_v(n), label(n), order(n);
    bool have_best = false;

    for (int s = 0; s < n; ++s) {
        std::fill(label.begin(), label.end(), -1);
        label[s] = 0;
        order[0] = s;
        int next = 1;
        int cmp = have_best ? 0 : -1;  // sign of (current - best) once decided
        bool worse = false;
        for (int k = 0; k < n; ++k) {
            const int x = order[k];
            const int right = h[x];
            if (label[right] < 0) {
                label[right] = next;
                order[next++] = right;
            }
            cur_h[k] = label[right];
            if (cmp == 0 && cur_h[k] != best_h[k]) {
                if (cur_h[k] > best_h[k]) {
                    worse = true;
                    break;
                }
                cmp = -1;
            }
            const int up = v[x];
            if (label[up] < 0) {
                label[up] = next;
                order[next++] = up;
            }
        }
        if (worse) continue;
        for (int k = 0; k < n; ++k) {
            cur_v[k] = label[v[order[k]]];
            if (cmp == 0 && cur_v[k] != best_v[k]) {
                if (cur_v[k] > best_v[k]) {
                    worse = true;
                    break;
                }
                cmp = -1;
            }
        }
        if (worse || cmp == 0) continue;
        std::swap(best_h, cur_h);
        std::swap(best_v, cur_v);
        have_best = true;
    }
    return Origami::from_trusted(Permutation::from_trusted(std::move(best_h)), Permutation::from_trusted(std::move(best_v)));
}

enum class Generator { T, R };

inline char generator_name(Generator g) { return g == Generator::T ? 'T' : 'R'; }

/// T(h, v) = (h, v h^-1); R(h, v) = (v^-1, h). Labels are carried along, no
/// canonicalisation.
inline Origami apply_generator(const Origami& o, Generator g) {
    if (g == Generator::T) return Origami::from_trusted(o.h(), o.v() * o.h().inverse());
    return Origami::from_trusted(o.v().inverse(), o.h());
}

struct Cylinder {
    int width = 0;
    int height = 0;
    /// Rows from bottom to top, each given by the h-cycle of its squares.
    std::vector<std::vector<int>> rows;
};

struct CylinderDecomposition {
    std::vector<Cylinder> cylinders;

    /// Sum of moduli h/w over all cylinders.
    Rational modulus_sum() const {
        Rational s;
        for (const auto& c : cylinders) s += Rational::make(c.height, c.width);
        return s;
    }
    int area() const {
        int a = 0;
        for (const auto& c : cylinders) a += c.width * c.height;
        return a;
    }
};

/// Maximal horizontal cylinders. Each h-cycle is a row of squares; a row is
/// glued to the row above it into the same cylinder exactly when every top
/// corner of the row is a regular point, i.e. v(h(x)) = h(v(x)) for all x in
/// the row (equivalently the commutator fixes every square of v(row)).
/// Cylinders are listed by their lowest row, ordered by smallest square.
inline CylinderDecomposition horizontal_cylinders(const Origami& o) {
    const auto& h = o.h();
    const auto& v = o.v();
    const auto rows = h.cycles();
    const int n = o.size();

    std::vector<int> row_of(n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int x : rows[r]) row_of[x] = static_cast<int>(r);

    // above[r] = index of the row glued on top of r, or -1 across a singular boundary.
    std::vector<int> above(rows.size(), -1);
    std::vector<char> has_below(rows.size(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const bool clean = std::all_of(rows[r].begin(), rows[r].end(), [&](int x) { return v(h(x)) == h(v(x)); });
        if (clean) {
            above[r] = row_of[v(rows[r][0])];
            has_below[above[r]] = 1;
        }
    }

    CylinderDecomposition out;
    std::vector<char> used(rows.size(), 0);
    auto collect = [&](int first) {
        Cylinder c;
        c.width = static_cast<int>(rows[first].size());
        for (int r = first; r >= 0 && !used[r]; r = above[r]) {
            used[r] = 1;
            c.rows.push_back(rows[r]);
        }
        c.height = static_cast<int>(c.rows.size());
        out.cylinders.push_back(std::move(c));
    };
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (!has_below[r]) collect(static_cast<int>(r));
    // Rows left over form closed chains; only a torus cover has one.
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (!used[r]) collect(static_cast<int>(r));
    return out;
}

/// Sum over cycles c of h of 1/length(c).
inline Rational inverse_cycle_length_sum(const Permutation& p) {
    Rational s;
    for (int len : p.cycle_type()) s += Rational::make(1, len);
    return s;
}

namespace detail {

inline int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace detail

/// Vertex index of the bottom-left corner of every square. Corners are glued
/// by BL(v(h(i))) = BL(h(v(i))) (the top-right corner of square i).
inline std::vector<int> corner_vertices(const Origami& o, int* vertex_count = nullptr) {
    const int n = o.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (int i = 0; i < n; ++i) {
        const int a = detail::find_root(parent, o.v()(o.h()(i)));
        const int b = detail::find_root(parent, o.h()(o.v()(i)));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> id(n, -1), out(n);
    int count = 0;
    for (int i = 0; i < n; ++i) {
        const int r = detail::find_root(parent, i);
        if (id[r] < 0) id[r] = count++;
        out[i] = id[r];
    }
    if (vertex_count) *vertex_count = count;
    return out;
}

/// Index in Z^2 of the lattice generated by the holonomies of all closed
/// paths and of all paths joining cone points. A torus cover uses one corner
/// as its marked point. Index 1 means the origami is reduced (primitive).
inline std::int64_t lattice_index(const Origami& o) {
    const int n = o.size();
    int vcount = 0;
    const auto vert = corner_vertices(o, &vcount);
    std::vector<int> corners_at(vcount, 0);
    for (int i = 0; i < n; ++i) ++corners_at[vert[i]];

    int root = 0;
    for (int k = 0; k < vcount; ++k)
        if (corners_at[k] > 1) {
            root = k;
            break;
        }

    struct Edge {
        int from, to, dx, dy;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> incident(vcount);
    for (int i = 0; i < n; ++i) {
        edges.push_back({vert[i], vert[o.h()(i)], 1, 0});
        edges.push_back({vert[i], vert[o.v()(i)], 0, 1});
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        incident[edges[e].from].push_back(static_cast<int>(e));
        incident[edges[e].to].push_back(static_cast<int>(e));
    }

    std::vector<std::int64_t> px(vcount, 0), py(vcount, 0);
    std::vector<char> seen(vcount, 0);
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
        const int x = q.front();
        q.pop();
        for (int e : incident[x]) {
            const Edge& ed = edges[e];
            if (ed.from == x && !seen[ed.to]) {
                px[ed.to] = px[x] + ed.dx;
                py[ed.to] = py[x] + ed.dy;
                seen[ed.to] = 1;
                q.push(ed.to);
            } else if (ed.to == x && !seen[ed.from]) {
                px[ed.from] = px[x] - ed.dx;
                py[ed.from] = py[x] - ed.dy;
                seen[ed.from] = 1;
                q.push(ed.from);
            }
        }
    }

    std::vector<std::pair<std::int64_t, std::int64_t>> gens;
    for (const auto& ed : edges) gens.emplace_back(px[ed.from] + ed.dx - px[ed.to], py[ed.from] + ed.dy - py[ed.to]);
    for (int k = 0; k < vcount; ++k)
        if (corners_at[k] > 1) gens.emplace_back(px[k] - px[root], py[k] - py[root]);

    std::int64_t g = 0;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b)
            g = std::gcd(g, gens[a].first * gens[b].second - gens[a].second * gens[b].first);
    return g;
}

inline bool is_reduced(const Origami& o) { return lattice_index(o) == 1; }

}  // namespace origami

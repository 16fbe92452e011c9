#pragma once

/**
 * @file homology.hpp
 * @brief Integral first homology of an origami and the action of T and R.
 *
 * The square complex of an origami on N squares has N faces, 2N edges and one
 * vertex per commutator cycle. Edge i (0 <= i < N) is the bottom side b_i of
 * square i oriented rightwards, edge N+i is the left side l_i oriented
 * upwards. The boundary of square i is b_i + l_{h(i)} - b_{v(i)} - l_i.
 *
 * A tree-cotree decomposition gives an integral basis of H_1: one loop per
 * edge that is neither in a spanning tree of the 1-skeleton nor in a
 * spanning tree of the dual graph. The intersection form is obtained from the
 * cup product of the dual cocycles on the diagonal subdivision of the squares.
 *
 * The chain maps of the generators are
 *   T: b_i -> b_i,          l_i -> b_i + l_{h(i)}
 *   R: b_i -> l_{v^-1(i)},  l_i -> -b_i
 * so on holonomy vectors T acts by [[1,1],[0,1]] and R by [[0,-1],[1,0]].
 */

#include <array>
#include <cstdint>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "origami/errors.hpp"
#include "origami/origami.hpp"
#include "origami/rational.hpp"

namespace origami {

/// Dense integer matrix; arithmetic throws consistency_error on overflow.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    std::int64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        if (x.cols_ != y.rows_) throw consistency_error("matrix shape mismatch");
        IntMatrix z(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const std::int64_t xik = x(i, k);
                if (xik == 0) continue;
                for (int j = 0; j < y.cols_; ++j) {
                    std::int64_t p = 0;
                    if (__builtin_mul_overflow(xik, y(k, j), &p) || __builtin_add_overflow(z(i, j), p, &z(i, j)))
                        throw consistency_error("integer overflow in cocycle product");
                }
            }
        return z;
    }

    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw consistency_error("vector shape mismatch");
        std::vector<std::int64_t> y(rows_, 0);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                std::int64_t p = 0;
                if (__builtin_mul_overflow((*this)(i, j), x[j], &p) || __builtin_add_overflow(y[i], p, &y[i]))
                    throw consistency_error("integer overflow in cocycle product");
            }
        return y;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> a_;
};

using Chain = std::vector<std::int64_t>;

/// Boundary of square f as an edge chain.
inline Chain face_boundary(const Origami& o, int f) {
    const int n = o.size();
    Chain c(2 * n, 0);
    c[f] += 1;
    c[n + o.h()(f)] += 1;
    c[o.v()(f)] -= 1;
    c[n + f] -= 1;
    return c;
}

/// Sum of all horizontal edges (tau_h) and of all vertical edges (tau_v).
/// Their classes span the tautological plane.
inline std::array<Chain, 2> tautological_chains(int n) {
    Chain th(2 * n, 0), tv(2 * n, 0);
    for (int i = 0; i < n; ++i) {
        th[i] = 1;
        tv[n + i] = 1;
    }
    return {th, tv};
}

class HomologyData {
public:
    explicit HomologyData(const Origami& o) : origami_(o) { build(); }

    const Origami& origami() const { return origami_; }
    int genus() const { return genus_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    int vertex_count() const { return vertex_count_; }
    /// Vertex index of the bottom-left corner of each square.
    const std::vector<int>& corner_vertex() const { return vertex_; }
    /// Basis cycles as edge chains (length 2N).
    const std::vector<Chain>& basis() const { return basis_; }
    /// Intersection numbers of basis cycles; b_0 . l_0 = +1 on the unit torus.
    const IntMatrix& intersection_form() const { return intersection_; }

    /// Integral coordinates of the class of a cycle. Throws consistency_error
    /// when z is not a cycle.
    std::vector<std::int64_t> coordinates(const Chain& z) const {
        const int n = origami_.size();
        if (static_cast<int>(z.size()) != 2 * n) throw consistency_error("chain has the wrong length");
        Chain w = z;
        for (std::size_t k = 1; k < cotree_order_.size(); ++k) {
            const int f = cotree_order_[k];
            const int e = cotree_parent_edge_[f];
            const std::int64_t coeff = w[e] * cotree_parent_sign_[f];
            if (coeff == 0) continue;
            const Chain d = face_boundary(origami_, f);
            for (int i = 0; i < 2 * n; ++i) w[i] -= coeff * d[i];
        }
        std::vector<std::int64_t> x(basis_.size());
        for (std::size_t k = 0; k < free_edges_.size(); ++k) {
            x[k] = w[free_edges_[k]];
            for (int i = 0; i < 2 * n; ++i) w[i] -= x[k] * basis_[k][i];
        }
        for (std::int64_t r : w)
            if (r != 0) throw consistency_error("chain is not a cycle");
        return x;
    }

    /// Holonomy (x, y) of a class given by coordinates.
    std::array<std::int64_t, 2> holonomy(const std::vector<std::int64_t>& coords) const {
        std::array<std::int64_t, 2> out{0, 0};
        for (std::size_t k = 0; k < coords.size(); ++k) {
            out[0] += coords[k] * hol_[k][0];
            out[1] += coords[k] * hol_[k][1];
        }
        return out;
    }

    /// Coordinates of the classes of tau_h and tau_v.
    const std::array<std::vector<std::int64_t>, 2>& tautological() const { return taut_; }

private:
    void build() {
        const Origami& o = origami_;
        const int n = o.size();
        vertex_ = corner_vertices(o, &vertex_count_);
        genus_ = (n - vertex_count_ + 2) / 2;

        struct Edge {
            int from, to;
        };
        std::vector<Edge> edges(2 * n);
        for (int i = 0; i < n; ++i) {
            edges[i] = {vertex_[i], vertex_[o.h()(i)]};
            edges[n + i] = {vertex_[i], vertex_[o.v()(i)]};
        }

        // Spanning tree of the 1-skeleton rooted at vertex 0; path[x] is the
        // tree chain from the root to x.
        std::vector<std::vector<int>> incident(vertex_count_);
        for (int e = 0; e < 2 * n; ++e) {
            incident[edges[e].from].push_back(e);
            incident[edges[e].to].push_back(e);
        }
        std::vector<char> in_tree(2 * n, 0);
        std::vector<Chain> path(vertex_count_);
        std::vector<char> reached(vertex_count_, 0);
        path[0] = Chain(2 * n, 0);
        reached[0] = 1;
        std::queue<int> q;
        q.push(0);
        while (!q.empty()) {
            const int x = q.front();
            q.pop();
            for (int e : incident[x]) {
                const bool forward = edges[e].from == x;
                const int y = forward ? edges[e].to : edges[e].from;
                if (reached[y]) continue;
                reached[y] = 1;
                in_tree[e] = 1;
                path[y] = path[x];
                path[y][e] += forward ? 1 : -1;
                q.push(y);
            }
        }

        // Spanning tree of the dual graph through edges outside the tree.
        // Edge b_i separates squares i and v^-1(i); l_i separates i and h^-1(i).
        const Permutation hinv = o.h().inverse();
        const Permutation vinv = o.v().inverse();
        std::vector<std::array<int, 2>> faces_of(2 * n);
        for (int i = 0; i < n; ++i) {
            faces_of[i] = {i, vinv(i)};
            faces_of[n + i] = {i, hinv(i)};
        }
        std::vector<std::vector<int>> face_edges(n);
        for (int e = 0; e < 2 * n; ++e) {
            face_edges[faces_of[e][0]].push_back(e);
            if (faces_of[e][1] != faces_of[e][0]) face_edges[faces_of[e][1]].push_back(e);
        }
        std::vector<char> in_cotree(2 * n, 0);
        std::vector<char> face_seen(n, 0);
        cotree_parent_edge_.assign(n, -1);
        cotree_parent_sign_.assign(n, 0);
        cotree_order_.clear();
        cotree_order_.push_back(0);
        face_seen[0] = 1;
        for (std::size_t k = 0; k < cotree_order_.size(); ++k) {
            const int f = cotree_order_[k];
            for (int e : face_edges[f]) {
                if (in_tree[e]) continue;
                const int g = faces_of[e][0] == f ? faces_of[e][1] : faces_of[e][0];
                if (face_seen[g]) continue;
                face_seen[g] = 1;
                in_cotree[e] = 1;
                cotree_parent_edge_[g] = e;
                cotree_parent_sign_[g] = face_boundary(o, g)[e];
                cotree_order_.push_back(g);
            }
        }
        if (static_cast<int>(cotree_order_.size()) != n) throw consistency_error("dual graph is not connected");

        free_edges_.clear();
        for (int e = 0; e < 2 * n; ++e)
            if (!in_tree[e] && !in_cotree[e]) free_edges_.push_back(e);
        if (static_cast<int>(free_edges_.size()) != 2 * genus_)
            throw consistency_error("homology rank " + std::to_string(free_edges_.size()) + " does not match 2g = " + std::to_string(2 * genus_));

        basis_.clear();
        hol_.clear();
        for (int e : free_edges_) {
            Chain c(2 * n, 0);
            c[e] += 1;
            for (int i = 0; i < 2 * n; ++i) c[i] += path[edges[e].from][i] - path[edges[e].to][i];
            std::array<std::int64_t, 2> hol{0, 0};
            for (int i = 0; i < n; ++i) {
                hol[0] += c[i];
                hol[1] += c[n + i];
            }
            basis_.push_back(std::move(c));
            hol_.push_back(hol);
        }

        build_intersection_form();

        const auto tau = tautological_chains(n);
        taut_ = {coordinates(tau[0]), coordinates(tau[1])};
    }

    // Cocycles dual to the basis: 1 on their own free edge, 0 on the other free
    // edges and on the tree, solved on the cotree from the leaves up.
    std::vector<Chain> dual_cocycles() const {
        const Origami& o = origami_;
        const int n = o.size();
        std::vector<Chain> alphas;
        for (std::size_t k = 0; k < free_edges_.size(); ++k) {
            Chain a(2 * n, 0);
            a[free_edges_[k]] = 1;
            auto coboundary = [&](int f) { return a[f] + a[n + o.h()(f)] - a[o.v()(f)] - a[n + f]; };
            for (std::size_t idx = cotree_order_.size(); idx-- > 1;) {
                const int f = cotree_order_[idx];
                const int e = cotree_parent_edge_[f];
                a[e] = 0;
                a[e] = -coboundary(f) * cotree_parent_sign_[f];
            }
            if (coboundary(cotree_order_[0]) != 0) throw consistency_error("dual cocycle does not close");
            alphas.push_back(std::move(a));
        }
        return alphas;
    }

    void build_intersection_form() {
        const Origami& o = origami_;
        const int n = o.size();
        const int r = static_cast<int>(free_edges_.size());
        const auto alphas = dual_cocycles();

        // Cup product on the subdivision of each square into the triangles
        // (BL, BR, TR) and (BL, TL, TR): a(b) c(right) - a(l) c(top).
        std::vector<std::vector<Rational>> cup(r, std::vector<Rational>(r));
        for (int k = 0; k < r; ++k)
            for (int l = 0; l < r; ++l) {
                std::int64_t s = 0;
                for (int f = 0; f < n; ++f) s += alphas[k][f] * alphas[l][n + o.h()(f)] - alphas[k][n + f] * alphas[l][o.v()(f)];
                cup[k][l] = Rational(s);
            }

        // Intersection form on homology = transpose of the inverse cup matrix.
        std::vector<std::vector<Rational>> inv(r, std::vector<Rational>(r));
        for (int i = 0; i < r; ++i) inv[i][i] = Rational(1);
        for (int col = 0; col < r; ++col) {
            int piv = col;
            while (piv < r && cup[piv][col].is_zero()) ++piv;
            if (piv == r) throw consistency_error("intersection form is degenerate");
            std::swap(cup[piv], cup[col]);
            std::swap(inv[piv], inv[col]);
            const Rational p = cup[col][col];
            for (int j = 0; j < r; ++j) {
                cup[col][j] /= p;
                inv[col][j] /= p;
            }
            for (int i = 0; i < r; ++i) {
                if (i == col || cup[i][col].is_zero()) continue;
                const Rational factor = cup[i][col];
                for (int j = 0; j < r; ++j) {
                    cup[i][j] -= factor * cup[col][j];
                    inv[i][j] -= factor * inv[col][j];
                }
            }
        }
        intersection_ = IntMatrix(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                const Rational& x = inv[j][i];
                if (!x.is_integer()) throw consistency_error("intersection form is not integral");
                intersection_(i, j) = x.numerator().convert_to<std::int64_t>();
            }
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (intersection_(i, j) != -intersection_(j, i)) throw consistency_error("intersection form is not antisymmetric");
    }

    Origami origami_;
    int genus_ = 0;
    int vertex_count_ = 0;
    std::vector<int> vertex_;
    std::vector<int> free_edges_;
    std::vector<int> cotree_order_;
    std::vector<int> cotree_parent_edge_;
    std::vector<std::int64_t> cotree_parent_sign_;
    std::vector<Chain> basis_;
    std::vector<std::array<std::int64_t, 2>> hol_;
    IntMatrix intersection_;
    std::array<std::vector<std::int64_t>, 2> taut_;
};

inline HomologyData homology_data(const Origami& o) { return HomologyData(o); }

/// Image of an edge chain of o under the chain map of g, as a chain on
/// apply_generator(o, g).
inline Chain push_chain(const Origami& o, Generator g, const Chain& c) {
    const int n = o.size();
    Chain out(2 * n, 0);
    if (g == Generator::T) {
        for (int i = 0; i < n; ++i) {
            out[i] += c[i] + c[n + i];
            out[n + o.h()(i)] += c[n + i];
        }
    } else {
        const Permutation vinv = o.v().inverse();
        for (int i = 0; i < n; ++i) {
            out[n + vinv(i)] += c[i];
            out[i] -= c[n + i];
        }
    }
    return out;
}

/// 2x2 matrix of a generator acting on holonomy vectors (row-major).
inline std::array<std::int64_t, 4> holonomy_matrix(Generator g) {
    if (g == Generator::T) return {1, 1, 0, 1};
    return {0, -1, 1, 0};
}

/// Matrix of the action of g from H_1(o) to H_1(g(o)) in the tree-cotree
/// bases of source and target. Verifies A^T J' A = J and the action on the
/// tautological classes, throwing consistency_error otherwise.
inline IntMatrix generator_action(const HomologyData& src, const HomologyData& dst, Generator g) {
    const Origami& o = src.origami();
    if (!(dst.origami() == apply_generator(o, g))) throw consistency_error("target homology does not belong to g(o)");
    const int r = src.rank();
    IntMatrix a(r, r);
    for (int j = 0; j < r; ++j) {
        const auto x = dst.coordinates(push_chain(o, g, src.basis()[j]));
        for (int i = 0; i < r; ++i) a(i, j) = x[i];
    }
    if (!(a.transpose() * dst.intersection_form() * a == src.intersection_form()))
        throw consistency_error("generator action is not symplectic");
    const auto m = holonomy_matrix(g);
    for (int c = 0; c < 2; ++c) {
        const auto img = a.apply(src.tautological()[c]);
        for (int i = 0; i < r; ++i)
            if (img[i] != m[c] * dst.tautological()[0][i] + m[2 + c] * dst.tautological()[1][i])
                throw consistency_error("generator action moves the tautological plane");
    }
    return a;
}

inline IntMatrix generator_action(const Origami& o, Generator g) {
    return generator_action(HomologyData(o), HomologyData(apply_generator(o, g)), g);
}

/// Homology data memoised by labelled origami.
class HomologyCache {
public:
    const HomologyData& get(const Origami& o) {
        auto it = cache_.find(o.key());
        if (it == cache_.end()) it = cache_.emplace(o.key(), HomologyData(o)).first;
        return it->second;
    }
    std::size_t size() const { return cache_.size(); }

private:
    std::unordered_map<std::string, HomologyData> cache_;
};

struct CocycleProduct {
    IntMatrix matrix;                      ///< from H_1(start) to H_1(end)
    std::array<std::int64_t, 4> holonomy;  ///< product of the 2x2 generator matrices
    Origami end;
};

/// Composes generator_action along a word; word[0] is applied first.
inline CocycleProduct cocycle_along(const Origami& start, const std::vector<Generator>& word, HomologyCache& cache) {
    CocycleProduct p{IntMatrix::identity(cache.get(start).rank()), {1, 0, 0, 1}, start};
    for (Generator g : word) {
        const Origami next = apply_generator(p.end, g);
        p.matrix = generator_action(cache.get(p.end), cache.get(next), g) * p.matrix;
        const auto m = holonomy_matrix(g);
        const auto& h = p.holonomy;
        p.holonomy = {m[0] * h[0] + m[1] * h[2], m[0] * h[1] + m[1] * h[3], m[2] * h[0] + m[3] * h[2], m[2] * h[1] + m[3] * h[3]};
        p.end = next;
    }
    return p;
}

}  // namespace origami

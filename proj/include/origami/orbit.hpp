#pragma once

/**
 * @file orbit.hpp
 * @brief SL(2,Z)-orbits of origamis, their cusps, and exhaustive enumeration.
 */

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "origami/errors.hpp"
#include "origami/origami.hpp"
#include "origami/signature.hpp"

namespace origami {

inline constexpr std::size_t default_orbit_cap = 1'000'000;

/// Orbit cap from ORIGAMI_MAX_ORBIT when set to a positive integer.
inline std::size_t orbit_cap_from_env() {
    if (const char* s = std::getenv("ORIGAMI_MAX_ORBIT")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return default_orbit_cap;
}

/// A finite SL(2,Z)-orbit. members are canonical forms sorted increasingly;
/// t_image[i] / r_image[i] index the canonical form of T / R applied to
/// member i.
struct Orbit {
    std::vector<Origami> members;
    std::vector<int> t_image;
    std::vector<int> r_image;
    int n_squares = 0;
    AbelianSignature signature;

    std::size_t size() const { return members.size(); }
    const Origami& representative() const { return members.front(); }

    int index_of(const Origami& canonical) const {
        auto it = std::lower_bound(members.begin(), members.end(), canonical);
        if (it == members.end() || !(*it == canonical)) return -1;
        return static_cast<int>(it - members.begin());
    }
};

/// Breadth-first closure of canonical_form(o) under T and R.
inline Orbit sl2z_orbit(const Origami& o, std::size_t max_members = default_orbit_cap) {
    std::vector<Origami> found{canonical_form(o)};
    std::unordered_map<std::string, int> index{{found[0].key(), 0}};
    std::vector<int> t_raw, r_raw;

    for (std::size_t k = 0; k < found.size(); ++k) {
        for (Generator g : {Generator::T, Generator::R}) {
            Origami next = canonical_form(apply_generator(found[k], g));
            auto [it, inserted] = index.try_emplace(next.key(), static_cast<int>(found.size()));
            if (inserted) {
                if (found.size() >= max_members) throw budget_error("orbit too large (more than " + std::to_string(max_members) + " members)");
                found.push_back(std::move(next));
            }
            (g == Generator::T ? t_raw : r_raw).push_back(it->second);
        }
    }

    std::vector<int> perm(found.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return found[a] < found[b]; });
    std::vector<int> rank(found.size());
    for (std::size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = static_cast<int>(i);

    Orbit orb;
    orb.n_squares = o.size();
    orb.signature = stratum_of(o);
    orb.members.reserve(found.size());
    orb.t_image.resize(found.size());
    orb.r_image.resize(found.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        orb.members.push_back(found[perm[i]]);
        orb.t_image[i] = rank[t_raw[perm[i]]];
        orb.r_image[i] = rank[r_raw[perm[i]]];
    }
    return orb;
}

/// Cusps of the orbit: cycles of T acting on members.
struct CuspData {
    std::vector<int> widths;               ///< decreasing
    std::vector<Origami> representatives;  ///< smallest member of each cusp, aligned with widths
};

inline CuspData cusp_decomposition(const Orbit& orb) {
    std::vector<std::pair<int, int>> cusps;  // (width, smallest member index)
    std::vector<char> seen(orb.size(), 0);
    for (std::size_t i = 0; i < orb.size(); ++i) {
        if (seen[i]) continue;
        int width = 0;
        int smallest = static_cast<int>(i);
        for (int j = static_cast<int>(i); !seen[j]; j = orb.t_image[j]) {
            seen[j] = 1;
            ++width;
            smallest = std::min(smallest, j);
        }
        cusps.emplace_back(width, smallest);
    }
    std::sort(cusps.begin(), cusps.end(), [](auto a, auto b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
    CuspData out;
    for (auto [w, idx] : cusps) {
        out.widths.push_back(w);
        out.representatives.push_back(orb.members[idx]);
    }
    return out;
}

/// Partitions of n in decreasing order, each sorted decreasingly.
inline std::vector<std::vector<int>> integer_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Permutation with cycles (0..p1-1)(p1..p1+p2-1)... for a given cycle type.
inline Permutation permutation_of_type(const std::vector<int>& type) {
    std::vector<int> im;
    int base = 0;
    for (int len : type) {
        for (int j = 0; j < len; ++j) im.push_back(base + (j + 1) % len);
        base += len;
    }
    return Permutation::from_trusted(std::move(im));
}

struct EnumerationOptions {
    int max_squares = 10;
    std::size_t max_orbit = default_orbit_cap;
};

/// All SL(2,Z)-orbits of connected origamis with n squares (restricted to the
/// given stratum when sig is set), sorted by their smallest canonical member.
/// on_orbit, when set, is called for each orbit as soon as it is closed.
inline std::vector<Orbit> enumerate_stratum(int n, const std::optional<AbelianSignature>& sig,
                                            const EnumerationOptions& opts = {},
                                            const std::function<void(const Orbit&)>& on_orbit = {}) {
    if (n < 1) throw domain_error("number of squares must be positive");
    if (n > opts.max_squares) throw budget_error("enumeration budget exceeded (n = " + std::to_string(n) + " > " + std::to_string(opts.max_squares) + ")");

    std::vector<int> wanted;  // commutator cycle lengths > 1, sorted decreasingly
    if (sig) {
        if (sig->marked_points() != 0) throw domain_error("enumeration signatures cannot contain marked points");
        for (int m : sig->degrees()) wanted.push_back(m + 1);
        std::sort(wanted.begin(), wanted.end(), std::greater<>());
    }

    std::unordered_set<std::string> keys;
    std::vector<Origami> canon;
    std::vector<int> v_images(n), comm(n), hinv(n), vinv(n);
    std::vector<char> seen(n);
    std::vector<int> stack;
    stack.reserve(n);

    for (const auto& type : integer_partitions(n)) {
        const Permutation hp = permutation_of_type(type);
        const auto& h = hp.images();
        for (int i = 0; i < n; ++i) hinv[h[i]] = i;
        std::iota(v_images.begin(), v_images.end(), 0);
        do {
            const auto& v = v_images;
            for (int i = 0; i < n; ++i) vinv[v[i]] = i;
            if (sig) {
                for (int i = 0; i < n; ++i) comm[i] = h[v[hinv[vinv[i]]]];
                std::fill(seen.begin(), seen.end(), 0);
                std::vector<int> lengths;
                for (int i = 0; i < n; ++i) {
                    if (seen[i]) continue;
                    int len = 0;
                    for (int x = i; !seen[x]; x = comm[x]) {
                        seen[x] = 1;
                        ++len;
                    }
                    if (len > 1) lengths.push_back(len);
                }
                if (lengths.size() != wanted.size()) continue;
                std::sort(lengths.begin(), lengths.end(), std::greater<>());
                if (lengths != wanted) continue;
            }
            std::fill(seen.begin(), seen.end(), 0);
            seen[0] = 1;
            stack.assign(1, 0);
            int reached = 1;
            while (!stack.empty()) {
                const int x = stack.back();
                stack.pop_back();
                for (int y : {h[x], v[x]}) {
                    if (!seen[y]) {
                        seen[y] = 1;
                        ++reached;
                        stack.push_back(y);
                    }
                }
            }
            if (reached != n) continue;
            Origami c = canonical_form(Origami::from_trusted(hp, Permutation::from_trusted(v_images)));
            if (keys.insert(c.key()).second) canon.push_back(std::move(c));
        } while (std::next_permutation(v_images.begin(), v_images.end()));
    }

    std::sort(canon.begin(), canon.end());
    std::unordered_set<std::string> assigned;
    std::vector<Orbit> orbits;
    for (const auto& c : canon) {
        if (assigned.count(c.key())) continue;
        Orbit orb = sl2z_orbit(c, opts.max_orbit);
        for (const auto& m : orb.members) assigned.insert(m.key());
        if (on_orbit) on_orbit(orb);
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

}  // namespace origami

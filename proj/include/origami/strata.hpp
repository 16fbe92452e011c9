#pragma once

/**
 * @file strata.hpp
 * @brief Closed-form stratum-level quantities.
 *
 * Siegel-Veech constants are carried as pi^2 * c_area, which is rational for
 * genus-zero strata and square-tiled orbits. "svc" below always means
 * (pi^2 / 3) * c_area, the quantity that enters the Lyapunov sum formulas.
 */

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "origami/errors.hpp"
#include "origami/rational.hpp"
#include "origami/signature.hpp"

namespace origami {

struct StratumInfo {
    int genus = 0;
    int dimension = 0;
    bool known_empty = false;
};

/// dim H(m_1..m_n) = 2g + n - 1 (marked points count towards n).
inline StratumInfo stratum_info(const AbelianSignature& sig) {
    return {sig.genus(), 2 * sig.genus() + sig.point_count() - 1, false};
}

/// dim Q(d_1..d_n) = 2g + n - 2. Q(), Q(4) and Q(3,1) are flagged empty.
inline StratumInfo stratum_info(const QuadraticSignature& sig) {
    const auto& d = sig.orders();
    const bool empty = d.empty() || d == std::vector<int>{4} || d == std::vector<int>{3, 1};
    return {sig.genus(), 2 * sig.genus() + static_cast<int>(d.size()) - 2, empty};
}

/// (1/12) sum m(m+2)/(m+1).
inline Rational kappa(const AbelianSignature& sig) {
    Rational s;
    for (int m : sig.degrees()) s += Rational::make(m * (m + 2), m + 1);
    return s / 12;
}

/// (1/24) sum d(d+4)/(d+2).
inline Rational kappa(const QuadraticSignature& sig) {
    Rational s;
    for (int d : sig.orders()) s += Rational::make(d * (d + 4), d + 2);
    return s / 24;
}

struct DoubleCoverResult {
    AbelianSignature cover_signature;  ///< includes marked points (images of poles)
    int g_hat = 0;
    int g_eff = 0;
};

/// Canonical double cover: an even order d gives two zeros of degree d/2, an
/// odd order gives one zero of degree d+1 (a marked point when d = -1).
inline DoubleCoverResult double_cover(const QuadraticSignature& sig) {
    const int odd = sig.odd_count();
    if (odd % 2 != 0) throw domain_error("odd number of odd-order singularities");
    std::vector<int> degrees;
    for (int d : sig.orders()) {
        if (d % 2 == 0) {
            degrees.push_back(d / 2);
            degrees.push_back(d / 2);
        } else {
            degrees.push_back(d + 1);
        }
    }
    DoubleCoverResult r;
    r.cover_signature = AbelianSignature(std::move(degrees));
    r.g_hat = 2 * sig.genus() - 1 + odd / 2;
    r.g_eff = r.g_hat - sig.genus();
    if (r.cover_signature.genus() != r.g_hat) throw consistency_error("double cover genus mismatch");
    return r;
}

/// (1/4) sum over odd d of 1/(d+2): the gap between the lambda^- and
/// lambda^+ sums.
inline Rational odd_defect(const QuadraticSignature& sig) {
    Rational s;
    for (int d : sig.orders())
        if (d % 2 != 0) s += Rational::make(1, d + 2);
    return s / 4;
}

struct Genus0Values {
    Rational pi2_times_c;  ///< pi^2 * c_area
    Rational lambda_minus_sum;
};

inline Genus0Values genus0_values(const QuadraticSignature& sig) {
    if (sig.genus() != 0) throw domain_error("genus0_values needs a genus-zero stratum, got genus " + std::to_string(sig.genus()));
    Rational s;
    for (int d : sig.orders()) s += Rational::make(d * (d + 4), d + 2);
    return {-s / 8, odd_defect(sig)};
}

enum class HypAbelianComponent { single_zero, two_zeros };

/// lambda_1 + ... + lambda_g on H^hyp(2g-2) (g^2/(2g-1)) or H^hyp(g-1,g-1) ((g+1)/2).
inline Rational hyperelliptic_abelian_sum(int g, HypAbelianComponent c) {
    if (g < 2) throw domain_error("hyperelliptic components need genus >= 2");
    if (c == HypAbelianComponent::single_zero) return Rational::make(std::int64_t{g} * g, 2 * g - 1);
    return Rational::make(g + 1, 2);
}

enum class HypQuadraticFamily { F1, F2, F3 };

struct HypQuadraticSum {
    Rational sum;
    int g_eff = 0;
    QuadraticSignature signature;
};

/// Sum of the nonnegative lambda^- exponents on the hyperelliptic components
///   F1: Q^hyp(2(g-k)-3, 2(g-k)-3, 2k+1, 2k+1), k >= -1, g >= 1, g-k >= 2
///   F2: Q^hyp(2(g-k)-3, 2(g-k)-3, 4k+2),       k >= 0,  g >= 1, g-k >= 1
///   F3: Q^hyp(4(g-k)-6, 4k+2),                 k >= 0,  g >= 2, g-k >= 2
inline HypQuadraticSum hyperelliptic_quadratic_sum(HypQuadraticFamily family, int g, int k) {
    const int j = g - k;
    switch (family) {
        case HypQuadraticFamily::F1: {
            if (k < -1 || g < 1 || j < 2) throw domain_error("F1 needs k >= -1, g >= 1, g-k >= 2");
            Rational s = Rational::make(g + 1, 2) + Rational::make(g + 1, std::int64_t{2} * (2 * g - 2 * k - 1) * (2 * k + 3));
            return {s, g + 1, QuadraticSignature({2 * j - 3, 2 * j - 3, 2 * k + 1, 2 * k + 1})};
        }
        case HypQuadraticFamily::F2: {
            if (k < 0 || g < 1 || j < 1) throw domain_error("F2 needs k >= 0, g >= 1, g-k >= 1");
            Rational s = Rational::make(2 * g + 1, 4) + Rational::make(1, 8 * j - 4);
            return {s, g, QuadraticSignature({2 * j - 3, 2 * j - 3, 4 * k + 2})};
        }
        case HypQuadraticFamily::F3: {
            if (k < 0 || g < 2 || j < 2) throw domain_error("F3 needs k >= 0, g >= 2, g-k >= 2");
            return {Rational::make(g, 2), g - 1, QuadraticSignature({4 * j - 6, 4 * k + 2})};
        }
    }
    throw domain_error("unknown family");
}

enum class PositivityKind { abelian_general, abelian_principal, quadratic_general, quadratic_plus_principal, quadratic_minus_principal };

/// Guaranteed k such that lambda_2, ..., lambda_k are strictly positive.
///   abelian_general           g >= 7: floor((g-1)g/(6g-3)) + 1
///   abelian_principal         g >= 5: floor((g-1)/4) + 1
///   quadratic_general         g >= 7: floor((g-1)g/(6g+3)) + 1  (both lambda^+ and lambda^-)
///   quadratic_plus_principal  g >= 5: floor(5(g-1)/18) + 1
///   quadratic_minus_principal g >= 3: floor(11(g-1)/18) + 1; g = 2 gives 2
inline int positivity_bound(PositivityKind kind, int g) {
    auto need = [&](int min_g) {
        if (g < min_g) throw domain_error("positivity bound needs genus >= " + std::to_string(min_g));
    };
    const std::int64_t G = g;
    switch (kind) {
        case PositivityKind::abelian_general: need(7); return static_cast<int>((G - 1) * G / (6 * G - 3)) + 1;
        case PositivityKind::abelian_principal: need(5); return static_cast<int>((G - 1) / 4) + 1;
        case PositivityKind::quadratic_general: need(7); return static_cast<int>((G - 1) * G / (6 * G + 3)) + 1;
        case PositivityKind::quadratic_plus_principal: need(5); return static_cast<int>(5 * (G - 1) / 18) + 1;
        case PositivityKind::quadratic_minus_principal:
            need(2);
            if (g == 2) return 2;
            return static_cast<int>(11 * (G - 1) / 18) + 1;
    }
    throw domain_error("unknown positivity kind");
}

/// True when the lambda^- spectrum cannot be completely degenerate:
/// sum over odd d of 1/(d+2) > 4 and the stratum is not Q(-1^4).
inline bool nondegeneracy_check(const QuadraticSignature& sig) {
    if (sig.orders() == std::vector<int>{-1, -1, -1, -1}) return false;
    Rational s;
    for (int d : sig.orders())
        if (d % 2 != 0) s += Rational::make(1, d + 2);
    return s > Rational(4);
}

}  // namespace origami

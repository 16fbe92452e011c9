#pragma once

/**
 * @file siegel_veech.hpp
 * @brief Exact Siegel-Veech constants and Lyapunov sums of arithmetic
 *        Teichmueller discs, and the quadratic-stratum sums.
 */

#include <string>

#include "origami/errors.hpp"
#include "origami/orbit.hpp"
#include "origami/rational.hpp"
#include "origami/strata.hpp"

namespace origami {

/// pi^2 * c_area, the normalised Siegel-Veech constant.
struct SiegelVeechValue {
    Rational pi2_times_c;
};

struct NormalizedSvc {
    Rational svc;  ///< (pi^2/3) c_area = average over the orbit of sum h/w
    SiegelVeechValue c;
};

/// Average over the orbit of the sum of cylinder moduli h/w.
inline NormalizedSvc normalized_svc(const Orbit& orb) {
    Rational total;
    for (const auto& m : orb.members) total += horizontal_cylinders(m).modulus_sum();
    const Rational svc = total / Rational(static_cast<std::int64_t>(orb.size()));
    return {svc, {svc * 3}};
}

/// Average over the orbit of sum over cycles of h of 1/length.
inline Rational cycle_statistic(const Orbit& orb) {
    Rational total;
    for (const auto& m : orb.members) total += inverse_cycle_length_sum(m.h());
    return total / Rational(static_cast<std::int64_t>(orb.size()));
}

enum class SumKind { abelian_top_g, quadratic_plus, quadratic_minus };

struct LyapunovSum {
    Rational value;
    SumKind kind = SumKind::abelian_top_g;
};

/// lambda_1 + ... + lambda_g = kappa + svc for the disc of any orbit member.
inline LyapunovSum sum_exponents_abelian_orbit(const Orbit& orb) {
    return {kappa(orb.signature) + normalized_svc(orb).svc, SumKind::abelian_top_g};
}

/// lambda^+_1 + ... + lambda^+_g = kappa_q + svc. In genus zero the sum is
/// zero by convention, so a nonzero right side means the supplied svc is wrong.
inline LyapunovSum sum_exponents_quadratic_plus(const QuadraticSignature& sig, const Rational& svc) {
    const Rational s = kappa(sig) + svc;
    if (sig.genus() == 0 && !s.is_zero())
        throw consistency_error("genus-zero stratum " + sig.to_string() + " needs svc = " + (-kappa(sig)).to_string() + ", got " + svc.to_string());
    return {s, SumKind::quadratic_plus};
}

/// lambda^- sum = lambda^+ sum + odd_defect.
inline LyapunovSum sum_exponents_minus(const QuadraticSignature& sig, const Rational& plus_sum) {
    return {plus_sum + odd_defect(sig), SumKind::quadratic_minus};
}

}  // namespace origami

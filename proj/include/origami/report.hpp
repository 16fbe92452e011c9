#pragma once

// JSON reports shared by the CLI and the tests.

#include "json.hpp"

#include "origami/lyapunov.hpp"
#include "origami/orbit.hpp"
#include "origami/siegel_veech.hpp"

namespace origami {

/// {"n", "stratum", "orbit_size", "cusp_widths", "members", "primitive", "svc", "sum"}.
/// primitive flags a reduced representative (period lattice equal to Z^2).
inline nlohmann::json orbit_report(const Orbit& orb) {
    const CuspData cusps = cusp_decomposition(orb);
    nlohmann::json members = nlohmann::json::array();
    for (const auto& m : orb.members) members.push_back(m.to_string());
    return {
        {"n", orb.n_squares},
        {"stratum", orb.signature.degrees()},
        {"orbit_size", orb.size()},
        {"cusp_widths", cusps.widths},
        {"members", members},
        {"primitive", is_reduced(orb.representative())},
        {"svc", normalized_svc(orb).svc.to_string()},
        {"sum", sum_exponents_abelian_orbit(orb).value.to_string()},
    };
}

/// {"exponents", "stderr", "steps", "seed", "cf_digit_resamples"}.
inline nlohmann::json estimate_report(const LyapunovEstimate& est) {
    return {
        {"exponents", est.exponents},
        {"stderr", est.standard_errors},
        {"steps", est.steps},
        {"seed", est.seed},
        {"cf_digit_resamples", est.cf_digit_resamples},
    };
}

}  // namespace origami

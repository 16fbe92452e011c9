#pragma once

/**
 * @file cli.hpp
 * @brief The `origami` command-line front end.
 *
 * Exit codes: 0 success, 2 invalid input or parse error, 3 internal
 * consistency violation.
 */

#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "origami/errors.hpp"
#include "origami/homology.hpp"
#include "origami/lyapunov.hpp"
#include "origami/orbit.hpp"
#include "origami/origami.hpp"
#include "origami/report.hpp"
#include "origami/siegel_veech.hpp"
#include "origami/strata.hpp"

namespace origami::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_internal = 3;

namespace detail {

inline std::string join(const std::vector<int>& xs, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

inline std::string paren(const std::vector<int>& xs) { return "(" + join(xs) + ")"; }

inline HypAbelianComponent parse_component(const std::string& s) {
    if (s == "single_zero") return HypAbelianComponent::single_zero;
    if (s == "two_zeros") return HypAbelianComponent::two_zeros;
    throw domain_error("unknown component '" + s + "' (expected single_zero or two_zeros)");
}

inline HypQuadraticFamily parse_family(const std::string& s) {
    if (s == "F1") return HypQuadraticFamily::F1;
    if (s == "F2") return HypQuadraticFamily::F2;
    if (s == "F3") return HypQuadraticFamily::F3;
    throw domain_error("unknown family '" + s + "' (expected F1, F2 or F3)");
}

inline PositivityKind parse_kind(const std::string& s) {
    static const std::map<std::string, PositivityKind> kinds{
        {"abelian_general", PositivityKind::abelian_general},
        {"abelian_principal", PositivityKind::abelian_principal},
        {"quadratic_general", PositivityKind::quadratic_general},
        {"quadratic_plus_principal", PositivityKind::quadratic_plus_principal},
        {"quadratic_minus_principal", PositivityKind::quadratic_minus_principal},
    };
    auto it = kinds.find(s);
    if (it == kinds.end()) throw domain_error("unknown positivity kind '" + s + "'");
    return it->second;
}

}  // namespace detail

/// Runs the CLI on argv, writing results to out and diagnostics to err.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Siegel-Veech constants and Lyapunov exponents of square-tiled surfaces"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable JSON output");

    std::string origami_text;

    auto* stratum_cmd = app.add_subcommand("stratum", "stratum, genus and dimension of an origami");
    stratum_cmd->add_option("origami", origami_text, "n=<N>; h=<perm>; v=<perm>")->required();

    auto* orbit_cmd = app.add_subcommand("orbit", "SL(2,Z)-orbit and cusp widths");
    orbit_cmd->add_option("origami", origami_text)->required();

    auto* svc_cmd = app.add_subcommand("svc", "normalised Siegel-Veech constant of the orbit");
    svc_cmd->add_option("origami", origami_text)->required();

    auto* sum_cmd = app.add_subcommand("sum", "exact sum of the top g Lyapunov exponents");
    sum_cmd->add_option("origami", origami_text)->required();

    std::int64_t steps = 1'000'000;
    std::uint64_t seed = 1;
    int replicas = 1;
    MonteCarloOptions mc_opts;
    auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimate of individual exponents");
    mc_cmd->add_option("origami", origami_text)->required();
    mc_cmd->add_option("--steps", steps, "continued fraction digits per replica")->capture_default_str();
    mc_cmd->add_option("--seed", seed, "seed of the first replica")->capture_default_str();
    mc_cmd->add_option("--replicas", replicas, "independent replicas with seeds seed, seed+1, ...")->capture_default_str()->check(CLI::PositiveNumber);
    mc_cmd->add_option("--renormalize-every", mc_opts.renormalize_every)->capture_default_str()->check(CLI::PositiveNumber);
    mc_cmd->add_option("--max-digit", mc_opts.max_digit)->capture_default_str()->check(CLI::PositiveNumber);

    int squares = 0;
    std::string stratum_filter;
    bool have_filter = false;
    int max_squares = 10;
    auto* enum_cmd = app.add_subcommand("enumerate", "all orbits with a given number of squares");
    enum_cmd->add_option("--squares", squares)->required();
    enum_cmd->add_option("--stratum", stratum_filter, "zero degrees, e.g. 1,1 or 2; empty for the torus")->each([&](const std::string&) { have_filter = true; });
    enum_cmd->add_option("--max-squares", max_squares, "enumeration budget")->capture_default_str();

    auto* formulas = app.add_subcommand("formulas", "closed-form stratum quantities");
    formulas->require_subcommand(1);
    std::string abelian_text, quadratic_text, component = "single_zero", family = "F1", kind, svc_text;
    int genus = 0, k = 0;
    auto sig_options = [&](CLI::App* c, bool abelian) {
        if (abelian) c->add_option("--abelian", abelian_text, "zero degrees, e.g. 1,1,1,1");
        c->add_option("--quadratic", quadratic_text, "orders, e.g. 2,1,1 or =1,-1^5");
    };
    auto* f_info = formulas->add_subcommand("info", "genus, dimension and known emptiness");
    sig_options(f_info, true);
    auto* f_kappa = formulas->add_subcommand("kappa", "combinatorial term of the sum formula");
    sig_options(f_kappa, true);
    auto* f_cover = formulas->add_subcommand("double-cover", "canonical double cover of a quadratic stratum");
    sig_options(f_cover, false);
    auto* f_defect = formulas->add_subcommand("odd-defect", "lambda^- sum minus lambda^+ sum");
    sig_options(f_defect, false);
    auto* f_genus0 = formulas->add_subcommand("genus0", "Siegel-Veech constant and lambda^- sum in genus 0");
    sig_options(f_genus0, false);
    auto* f_hyp_ab = formulas->add_subcommand("hyp-abelian", "sum on a hyperelliptic Abelian component");
    f_hyp_ab->add_option("--genus", genus)->required();
    f_hyp_ab->add_option("--component", component, "single_zero or two_zeros")->capture_default_str();
    auto* f_hyp_q = formulas->add_subcommand("hyp-quadratic", "lambda^- sum on a hyperelliptic quadratic component");
    f_hyp_q->add_option("--family", family, "F1, F2 or F3")->capture_default_str();
    f_hyp_q->add_option("--genus", genus)->required();
    f_hyp_q->add_option("--k", k)->required();
    auto* f_pos = formulas->add_subcommand("positivity", "guaranteed number of positive exponents");
    f_pos->add_option("--kind", kind)->required();
    f_pos->add_option("--genus", genus)->required();
    auto* f_nondeg = formulas->add_subcommand("nondegenerate", "lambda^- spectrum cannot be completely degenerate");
    sig_options(f_nondeg, false);
    auto* f_qsums = formulas->add_subcommand("quadratic-sums", "lambda^+ and lambda^- sums from a supplied svc");
    sig_options(f_qsums, false);
    f_qsums->add_option("--svc", svc_text, "(pi^2/3) c_area as p/q")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid;
    }

    auto quadratic = [&] {
        if (quadratic_text.empty()) throw domain_error("--quadratic is required");
        return QuadraticSignature(parse_degree_list(quadratic_text));
    };

    try {
        if (stratum_cmd->parsed()) {
            const Origami o = parse_origami(origami_text);
            const AbelianSignature sig = stratum_of(o);
            const StratumInfo info = stratum_info(sig);
            if (json) {
                out << nlohmann::json{{"signature", sig.degrees()}, {"genus", sig.genus()}, {"dimension", info.dimension}, {"n", o.size()}}.dump() << "\n";
            } else {
                out << "signature " << detail::paren(sig.degrees()) << "\n"
                    << "genus " << sig.genus() << "\n"
                    << "dimension " << info.dimension << "\n";
            }
        } else if (orbit_cmd->parsed()) {
            const Orbit orb = sl2z_orbit(parse_origami(origami_text), orbit_cap_from_env());
            if (json) {
                out << orbit_report(orb).dump() << "\n";
            } else {
                const CuspData cusps = cusp_decomposition(orb);
                out << "stratum " << orb.signature.to_string() << "\n"
                    << "orbit_size " << orb.size() << "\n"
                    << "cusp_widths " << detail::join(cusps.widths, " ") << "\n"
                    << "primitive " << (is_reduced(orb.representative()) ? "true" : "false") << "\n";
                for (const auto& m : orb.members) out << "member " << m.to_string() << "\n";
            }
        } else if (svc_cmd->parsed()) {
            const Orbit orb = sl2z_orbit(parse_origami(origami_text), orbit_cap_from_env());
            const NormalizedSvc s = normalized_svc(orb);
            if (json)
                out << nlohmann::json{{"svc", s.svc.to_string()}, {"pi2_times_c", s.c.pi2_times_c.to_string()}, {"orbit_size", orb.size()}}.dump() << "\n";
            else
                out << "svc " << s.svc << "\n" << "pi2_c " << s.c.pi2_times_c << "\n";
        } else if (sum_cmd->parsed()) {
            const Orbit orb = sl2z_orbit(parse_origami(origami_text), orbit_cap_from_env());
            const LyapunovSum s = sum_exponents_abelian_orbit(orb);
            if (json)
                out << nlohmann::json{{"sum", s.value.to_string()}, {"kappa", kappa(orb.signature).to_string()}, {"svc", normalized_svc(orb).svc.to_string()}, {"stratum", orb.signature.degrees()}}.dump()
                    << "\n";
            else
                out << s.value << "\n";
        } else if (mc_cmd->parsed()) {
            const Origami o = parse_origami(origami_text);
            std::vector<LyapunovEstimate> reps;
            for (int i = 0; i < replicas; ++i) reps.push_back(estimate_spectrum(o, steps, seed + static_cast<std::uint64_t>(i), mc_opts));
            LyapunovEstimate est = aggregate_estimates(reps);
            est.seed = seed;
            if (json) {
                out << estimate_report(est).dump() << "\n";
            } else {
                std::ostringstream line;
                line << std::fixed << std::setprecision(6);
                for (std::size_t i = 0; i < est.exponents.size(); ++i)
                    line << "lambda_" << (i + 1) << " " << est.exponents[i] << " +- " << est.standard_errors[i] << "\n";
                line << "sum " << est.sum() << " +- " << est.sum_standard_error << "\n";
                out << line.str() << "steps " << est.steps << "\n" << "cf_digit_resamples " << est.cf_digit_resamples << "\n";
            }
        } else if (enum_cmd->parsed()) {
            std::optional<AbelianSignature> sig;
            if (have_filter) sig = AbelianSignature(parse_degree_list(stratum_filter));
            EnumerationOptions opts;
            opts.max_squares = max_squares;
            opts.max_orbit = orbit_cap_from_env();
            auto line = [](const Orbit& orb) {
                return "orbit " + orb.signature.to_string() + " size " + std::to_string(orb.size()) + " cusps " + detail::join(cusp_decomposition(orb).widths) +
                       " svc " + normalized_svc(orb).svc.to_string() + " sum " + sum_exponents_abelian_orbit(orb).value.to_string() + " rep " +
                       orb.representative().to_string();
            };
            auto orbits = enumerate_stratum(squares, sig, opts, [&](const Orbit& orb) {
                if (!json) out << line(orb) << "\n" << std::flush;
            });
            std::sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) {
                if (a.n_squares != b.n_squares) return a.n_squares < b.n_squares;
                if (a.signature.degrees() != b.signature.degrees()) return a.signature.degrees() < b.signature.degrees();
                return a.representative() < b.representative();
            });
            if (json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& orb : orbits) arr.push_back(orbit_report(orb));
                out << nlohmann::json{{"n", squares}, {"orbits", arr}}.dump() << "\n";
            } else {
                out << "summary " << orbits.size() << " orbits\n";
                for (const auto& orb : orbits) out << line(orb) << "\n";
            }
        } else if (f_info->parsed()) {
            StratumInfo info;
            std::string name;
            if (!abelian_text.empty()) {
                const AbelianSignature sig(parse_degree_list(abelian_text));
                info = stratum_info(sig);
                name = sig.to_string();
            } else {
                const QuadraticSignature sig = quadratic();
                info = stratum_info(sig);
                name = sig.to_string();
            }
            if (json)
                out << nlohmann::json{{"stratum", name}, {"genus", info.genus}, {"dimension", info.dimension}, {"known_empty", info.known_empty}}.dump() << "\n";
            else
                out << "stratum " << name << "\ngenus " << info.genus << "\ndimension " << info.dimension << "\nknown_empty " << (info.known_empty ? "true" : "false") << "\n";
        } else if (f_kappa->parsed()) {
            const Rational value = !abelian_text.empty() ? kappa(AbelianSignature(parse_degree_list(abelian_text))) : kappa(quadratic());
            if (json)
                out << nlohmann::json{{"kappa", value.to_string()}}.dump() << "\n";
            else
                out << value << "\n";
        } else if (f_cover->parsed()) {
            const DoubleCoverResult r = double_cover(quadratic());
            if (json)
                out << nlohmann::json{{"cover_signature", r.cover_signature.degrees()}, {"marked_points", r.cover_signature.marked_points()}, {"g_hat", r.g_hat}, {"g_eff", r.g_eff}}.dump()
                    << "\n";
            else
                out << "cover " << detail::paren(r.cover_signature.degrees()) << "\nmarked_points " << r.cover_signature.marked_points() << "\ng_hat " << r.g_hat
                    << "\ng_eff " << r.g_eff << "\n";
        } else if (f_defect->parsed()) {
            const Rational value = odd_defect(quadratic());
            if (json)
                out << nlohmann::json{{"odd_defect", value.to_string()}}.dump() << "\n";
            else
                out << value << "\n";
        } else if (f_genus0->parsed()) {
            const Genus0Values g0 = genus0_values(quadratic());
            if (json)
                out << nlohmann::json{{"pi2_times_c", g0.pi2_times_c.to_string()}, {"lambda_minus_sum", g0.lambda_minus_sum.to_string()}}.dump() << "\n";
            else
                out << "pi2_c " << g0.pi2_times_c << "\nlambda_minus_sum " << g0.lambda_minus_sum << "\n";
        } else if (f_hyp_ab->parsed()) {
            const Rational value = hyperelliptic_abelian_sum(genus, detail::parse_component(component));
            if (json)
                out << nlohmann::json{{"sum", value.to_string()}}.dump() << "\n";
            else
                out << value << "\n";
        } else if (f_hyp_q->parsed()) {
            const HypQuadraticSum r = hyperelliptic_quadratic_sum(detail::parse_family(family), genus, k);
            if (json)
                out << nlohmann::json{{"sum", r.sum.to_string()}, {"g_eff", r.g_eff}, {"stratum", r.signature.orders()}}.dump() << "\n";
            else
                out << "stratum " << r.signature.to_string() << "\nsum " << r.sum << "\ng_eff " << r.g_eff << "\n";
        } else if (f_pos->parsed()) {
            const int bound = positivity_bound(detail::parse_kind(kind), genus);
            if (json)
                out << nlohmann::json{{"k", bound}}.dump() << "\n";
            else
                out << bound << "\n";
        } else if (f_nondeg->parsed()) {
            const bool r = nondegeneracy_check(quadratic());
            if (json)
                out << nlohmann::json{{"nondegenerate", r}}.dump() << "\n";
            else
                out << (r ? "true" : "false") << "\n";
        } else if (f_qsums->parsed()) {
            const QuadraticSignature sig = quadratic();
            const Rational svc = Rational::parse(svc_text);
            const LyapunovSum plus = sum_exponents_quadratic_plus(sig, svc);
            const LyapunovSum minus = sum_exponents_minus(sig, plus.value);
            if (json)
                out << nlohmann::json{{"plus_sum", plus.value.to_string()}, {"minus_sum", minus.value.to_string()}}.dump() << "\n";
            else
                out << "plus_sum " << plus.value << "\nminus_sum " << minus.value << "\n";
        }
    } catch (const consistency_error& e) {
        err << "error: internal consistency violation: " << e.what() << "\n";
        return exit_internal;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    return exit_ok;
}

}  // namespace origami::cli

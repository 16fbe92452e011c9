#pragma once

/**
 * @file lyapunov.hpp
 * @brief Monte Carlo estimate of the individual Lyapunov exponents of the
 *        Hodge bundle over the arithmetic Teichmueller disc of an origami.
 *
 * A point x in (0,1) is drawn uniformly and its continued fraction digits
 * a_1, a_2, ... drive the walk: odd digits apply the horizontal shear T^a,
 * even digits the vertical shear U^a = [[1,0],[a,1]] (holonomy action). The
 * chain maps of these shears act on a frame of 2g cycles in the edge chain
 * space. Periodically the frame is projected onto the orthogonal complement
 * of the boundaries (the minimal-norm representatives of the homology
 * classes) and Gram-Schmidt orthonormalised; the accumulated log stretches
 * give raw exponents theta_1 >= ... >= theta_2g, reported as theta_i/theta_1.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "origami/errors.hpp"
#include "origami/homology.hpp"
#include "origami/origami.hpp"

namespace origami {

struct MonteCarloOptions {
    int renormalize_every = 16;             ///< shear steps between projections
    std::uint64_t max_digit = 1'000'000;    ///< larger digits trigger a resample of x
    int batches = 50;                       ///< batch count for standard errors
    double burn_in_fraction = 0.01;         ///< leading share of renormalisations discarded
};

inline constexpr std::int64_t min_monte_carlo_steps = 10'000;

struct LyapunovEstimate {
    std::vector<double> exponents;        ///< lambda_1 = 1 >= ... >= lambda_g
    std::vector<double> standard_errors;  ///< batch-means errors, aligned with exponents
    std::vector<double> raw;              ///< theta_1 >= ... >= theta_2g per shear step
    double sum_standard_error = 0.0;      ///< batch-means error of lambda_1 + ... + lambda_g
    double tautological_ratio = 0.0;      ///< growth of the holonomy product over theta_1
    std::int64_t steps = 0;
    std::uint64_t seed = 0;
    std::int64_t cf_digit_resamples = 0;

    double sum() const { return std::accumulate(exponents.begin(), exponents.end(), 0.0); }
};

/// Applies the chain map of the shear along `along` (h for T^a, v for U^a)
/// to a chain. For T^a: l_i -> b_i + b_{h i} + ... + b_{h^{a-1} i} + l_{h^a i},
/// b_i fixed; U^a is the same with the roles of b and l exchanged.
/// `moved` is the block that gets permuted (l for T, b for U), `fixed` the
/// block that receives the path sums.
template <class Scalar>
void shear_chain(const std::vector<std::vector<int>>& cycles, std::int64_t a, Scalar* fixed, Scalar* moved, std::vector<Scalar>& scratch) {
    for (const auto& c : cycles) {
        const auto len = static_cast<std::int64_t>(c.size());
        const std::int64_t q = a / len;
        const auto r = static_cast<std::size_t>(a % len);
        Scalar total = 0;
        for (int x : c) total += moved[x];
        scratch.assign(c.size(), Scalar(0));
        for (std::size_t p = 0; p < c.size(); ++p) {
            Scalar s = static_cast<Scalar>(q) * total;
            for (std::size_t t = 0; t < r; ++t) s += moved[c[(p + c.size() - t) % c.size()]];
            fixed[c[p]] += s;
            scratch[(p + r) % c.size()] = moved[c[p]];
        }
        for (std::size_t p = 0; p < c.size(); ++p) moved[c[p]] = scratch[p];
    }
}

/// Origami reached by T^a (horizontal = true) or U^a = R^-1 T^-a R.
inline Origami apply_shear(const Origami& o, bool horizontal, std::int64_t a) {
    if (horizontal) return Origami::from_trusted(o.h(), o.v() * o.h().power(-a));
    return Origami::from_trusted(o.h() * o.v().power(-a), o.v());
}

/// Integer chain map of T^a / U^a on an edge chain of o.
inline Chain push_chain_shear(const Origami& o, bool horizontal, std::int64_t a, const Chain& c) {
    const int n = o.size();
    Chain out = c;
    std::vector<std::int64_t> scratch;
    if (horizontal)
        shear_chain(o.h().cycles(), a, out.data(), out.data() + n, scratch);
    else
        shear_chain(o.v().cycles(), a, out.data() + n, out.data(), scratch);
    return out;
}

namespace detail {

// Orthonormal basis of the span of the square boundaries of (h, v).
inline std::vector<std::vector<double>> boundary_basis(const std::vector<int>& h, const std::vector<int>& v) {
    const int n = static_cast<int>(h.size());
    std::vector<std::vector<double>> q;
    for (int f = 0; f < n; ++f) {
        std::vector<double> d(2 * n, 0.0);
        d[f] += 1;
        d[n + h[f]] += 1;
        d[v[f]] -= 1;
        d[n + f] -= 1;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& u : q) {
                const double dot = std::inner_product(d.begin(), d.end(), u.begin(), 0.0);
                for (int i = 0; i < 2 * n; ++i) d[i] -= dot * u[i];
            }
        const double norm = std::sqrt(std::inner_product(d.begin(), d.end(), d.begin(), 0.0));
        if (norm < 1e-9) continue;
        for (double& x : d) x /= norm;
        q.push_back(std::move(d));
    }
    return q;
}

inline double mean(const std::vector<double>& x) { return x.empty() ? 0.0 : std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size()); }

inline double standard_error(const std::vector<double>& x) {
    if (x.size() < 2) return 0.0;
    const double m = mean(x);
    double ss = 0;
    for (double y : x) ss += (y - m) * (y - m);
    return std::sqrt(ss / static_cast<double>(x.size() - 1) / static_cast<double>(x.size()));
}

}  // namespace detail

/// Estimates lambda_1 .. lambda_g. Deterministic in (o, steps, seed, opts).
inline LyapunovEstimate estimate_spectrum(const Origami& o, std::int64_t steps, std::uint64_t seed, const MonteCarloOptions& opts = {}) {
    if (steps < min_monte_carlo_steps) throw domain_error("at least " + std::to_string(min_monte_carlo_steps) + " steps are required");
    if (opts.renormalize_every < 1 || opts.batches < 2 || opts.max_digit < 1) throw domain_error("invalid Monte Carlo options");

    const HomologyData hd(o);
    const int n = o.size();
    const int g = hd.genus();
    const int r = hd.rank();

    std::vector<std::vector<double>> frame;
    for (const auto& c : hd.basis()) frame.emplace_back(c.begin(), c.end());

    std::vector<int> h = o.h().images();
    std::vector<int> v = o.v().images();

    std::mt19937_64 rng(seed);
    auto draw = [&] {
        double x = 0;
        while (x == 0) x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        return x;
    };
    LyapunovEstimate est;
    est.steps = steps;
    est.seed = seed;
    double x = draw();
    auto next_digit = [&]() -> std::int64_t {
        for (;;) {
            if (!(x > 0)) x = draw();
            const double y = 1.0 / x;
            if (!std::isfinite(y) || y >= static_cast<double>(opts.max_digit) + 1.0) {
                ++est.cf_digit_resamples;
                x = draw();
                continue;
            }
            const double a = std::floor(y);
            x = y - a;
            return static_cast<std::int64_t>(a);
        }
    };

    // Renormalise every `renormalize_every` steps, and earlier once the digits
    // applied since the last renormalisation multiply past `stretch_limit`, so
    // that the frame never becomes too ill-conditioned for double precision.
    constexpr double stretch_limit = 1e4;
    const auto burn = static_cast<std::int64_t>(std::floor(opts.burn_in_fraction * static_cast<double>(steps)));
    const std::int64_t window = steps - burn;
    const int batches = static_cast<int>(std::min<std::int64_t>(opts.batches, window));
    std::vector<std::vector<double>> batch_logs(batches, std::vector<double>(r, 0.0));
    std::vector<double> total_logs(r, 0.0);

    // Holonomy product on the tautological plane, kept normalised.
    double m00 = 1, m01 = 0, m10 = 0, m11 = 1, taut_log = 0;

    std::vector<double> scratch;
    std::vector<std::vector<int>> cycles;
    std::vector<int> tmp(n);
    std::vector<int> back(n);

    // `last` is the final step covered by this renormalisation.
    auto renormalize = [&](std::int64_t last) {
        const auto q = detail::boundary_basis(h, v);
        std::vector<double> logs(r);
        for (int i = 0; i < r; ++i) {
            auto& w = frame[i];
            for (int pass = 0; pass < 2; ++pass) {
                for (const auto& u : q) {
                    const double dot = std::inner_product(w.begin(), w.end(), u.begin(), 0.0);
                    for (int k = 0; k < 2 * n; ++k) w[k] -= dot * u[k];
                }
                for (int j = 0; j < i; ++j) {
                    const double dot = std::inner_product(w.begin(), w.end(), frame[j].begin(), 0.0);
                    for (int k = 0; k < 2 * n; ++k) w[k] -= dot * frame[j][k];
                }
            }
            const double norm = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
            if (!(norm > 0) || !std::isfinite(norm)) throw consistency_error("frame collapsed during renormalisation");
            for (double& y : w) y /= norm;
            logs[i] = std::log(norm);
        }
        const double s = std::max({std::abs(m00), std::abs(m01), std::abs(m10), std::abs(m11)});
        m00 /= s;
        m01 /= s;
        m10 /= s;
        m11 /= s;
        if (last >= burn) {
            const auto b = static_cast<int>((last - burn) * batches / window);
            for (int i = 0; i < r; ++i) {
                batch_logs[b][i] += logs[i];
                total_logs[i] += logs[i];
            }
            taut_log += std::log(s);
        }
    };

    int since = 0;
    double stretch = 1;
    std::int64_t window_steps = 0;
    std::int64_t first_open = 0;  // first step not yet covered by a renormalisation
    for (std::int64_t step = 0; step < steps; ++step) {
        const std::int64_t a = next_digit();
        const bool horizontal = step % 2 == 0;
        const std::vector<int>& along = horizontal ? h : v;

        cycles.clear();
        std::fill(tmp.begin(), tmp.end(), 0);
        for (int i = 0; i < n; ++i) {
            if (tmp[i]) continue;
            std::vector<int> c;
            for (int y = i; !tmp[y]; y = along[y]) {
                tmp[y] = 1;
                c.push_back(y);
            }
            cycles.push_back(std::move(c));
        }
        for (auto& w : frame) {
            if (horizontal)
                shear_chain(cycles, a, w.data(), w.data() + n, scratch);
            else
                shear_chain(cycles, a, w.data() + n, w.data(), scratch);
        }

        // along^{-a}: shift each cycle backwards by a.
        for (const auto& c : cycles) {
            const auto len = static_cast<std::int64_t>(c.size());
            const auto shift = static_cast<std::size_t>(a % len);
            for (std::size_t p = 0; p < c.size(); ++p) back[c[(p + shift) % c.size()]] = c[p];
        }
        const auto ad = static_cast<double>(a);
        if (horizontal) {
            for (int i = 0; i < n; ++i) tmp[i] = v[back[i]];
            v = tmp;
            // [[1,a],[0,1]] * M
            m00 += ad * m10;
            m01 += ad * m11;
        } else {
            for (int i = 0; i < n; ++i) tmp[i] = h[back[i]];
            h = tmp;
            // [[1,0],[a,1]] * M
            m10 += ad * m00;
            m11 += ad * m01;
        }

        ++since;
        stretch *= ad + 1;
        if (since >= opts.renormalize_every || stretch > stretch_limit || step + 1 == steps) {
            if (step >= burn) window_steps += step + 1 - first_open;
            renormalize(step);
            first_open = step + 1;
            since = 0;
            stretch = 1;
        }
    }

    const double theta1 = total_logs[0];
    if (!(theta1 > 0)) throw consistency_error("top exponent is not positive; run more steps");
    for (int i = 0; i < r; ++i) est.raw.push_back(total_logs[i] / static_cast<double>(window_steps));
    std::vector<std::vector<double>> ratios(g);
    std::vector<double> sums;
    for (const auto& b : batch_logs) {
        if (!(b[0] > 0)) continue;
        double s = 0;
        for (int i = 0; i < g; ++i) {
            ratios[i].push_back(b[i] / b[0]);
            s += b[i] / b[0];
        }
        sums.push_back(s);
    }
    for (int i = 0; i < g; ++i) {
        est.exponents.push_back(i == 0 ? 1.0 : total_logs[i] / theta1);
        est.standard_errors.push_back(i == 0 ? 0.0 : detail::standard_error(ratios[i]));
    }
    est.sum_standard_error = detail::standard_error(sums);
    est.tautological_ratio = taut_log / theta1;
    return est;
}

/// Inverse-variance weighted combination of independent replicas. Exponents
/// with zero reported error (lambda_1) are averaged with equal weights.
inline LyapunovEstimate aggregate_estimates(const std::vector<LyapunovEstimate>& reps) {
    if (reps.empty()) throw domain_error("no replicas to aggregate");
    LyapunovEstimate out = reps.front();
    const std::size_t g = out.exponents.size();
    out.steps = 0;
    out.cf_digit_resamples = 0;
    for (const auto& e : reps) {
        if (e.exponents.size() != g) throw domain_error("replicas disagree on genus");
        out.steps += e.steps;
        out.cf_digit_resamples += e.cf_digit_resamples;
    }
    auto combine = [&](auto value_of, auto error_of, double& value, double& error) {
        double wsum = 0, vsum = 0;
        bool all_positive = true;
        for (const auto& e : reps) all_positive = all_positive && error_of(e) > 0;
        for (const auto& e : reps) {
            const double w = all_positive ? 1.0 / (error_of(e) * error_of(e)) : 1.0;
            wsum += w;
            vsum += w * value_of(e);
        }
        value = vsum / wsum;
        error = all_positive ? std::sqrt(1.0 / wsum) : 0.0;
    };
    for (std::size_t i = 0; i < g; ++i)
        combine([i](const LyapunovEstimate& e) { return e.exponents[i]; }, [i](const LyapunovEstimate& e) { return e.standard_errors[i]; },
                out.exponents[i], out.standard_errors[i]);
    double sum_value = 0;
    combine([](const LyapunovEstimate& e) { return e.sum(); }, [](const LyapunovEstimate& e) { return e.sum_standard_error; }, sum_value,
            out.sum_standard_error);
    for (std::size_t i = 0; i < out.raw.size(); ++i) {
        double s = 0;
        for (const auto& e : reps) s += e.raw[i];
        out.raw[i] = s / static_cast<double>(reps.size());
    }
    double t = 0;
    for (const auto& e : reps) t += e.tautological_ratio;
    out.tautological_ratio = t / static_cast<double>(reps.size());
    return out;
}

}  // namespace origami

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "schlicht/rng.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

struct Atom {
    double t;  // angle in [0, 2*pi)
    double w;  // real weight, may be negative

    bool operator==(const Atom&) const = default;
};

/// Finite atomic representing measure for the bounded-rotation classes.
/// Normalized convention: sum(w) = 1 and sum(|w|) <= m/2, which gives
/// P(0) = 1 and the coefficient bound |p_n| <= m.
struct AtomicMeasure {
    std::vector<Atom> atoms;

    double weight_sum() const;
    double abs_weight_sum() const;
    /// Throws InvalidMeasure unless the atoms satisfy the invariants for
    /// class parameter m.
    void validate(double m) const;

    bool operator==(const AtomicMeasure&) const = default;
};

/// Class parameters: rotation budget m >= 2, shift 0 <= beta < 1, the
/// optional complex alpha of the derivative-blend condition, and the fixed
/// convolution kernel k.
struct ClassSpec {
    double m = 2.0;
    double beta = 0.0;
    std::optional<Complex> alpha;  // absent for the ratio condition
    NormalizedFunction kernel;

    Complex k2() const { return kernel.a(2); }
    Complex k3() const { return kernel.a(3); }
    /// Throws ParamOutOfRange / ExcludedAlpha on invalid parameters.
    void validate() const;
};

/// The boundary kernel (1 - z e^{it})/(1 + z e^{it}) as a series:
/// 1 + sum_{n>=1} 2 (-1)^n e^{int} z^n. Positive real part on the disk.
TruncatedSeries kernel_series(double t, int order);

/// P(z) = sum_j w_j * kernel(t_j); requires sum(w) = 1 and at least one atom.
TruncatedSeries pm_from_measure(const AtomicMeasure& mu, int order);

/// (m/4 + 1/2) p1 - (m/4 - 1/2) p2 for Caratheodory-type inputs
/// (constant term 1); the convex-signed split behind the |p_n| <= m bound.
TruncatedSeries pm_from_pair(const TruncatedSeries& p1, const TruncatedSeries& p2, double m);

/// Phi = (1 - beta) p + beta, so h_n = (1 - beta) p_n for n >= 1.
TruncatedSeries shift_beta(const TruncatedSeries& p, double beta);

/// Draws a measure meeting the invariants for spec.m: angles uniform on
/// [0, 2*pi), raw weights uniform on [-1, 1] shifted affinely onto
/// sum(w) = 1, then shrunk toward the uniform positive measure until
/// sum(|w|) <= m/2. Deterministic given the rng state.
AtomicMeasure draw_measure(Rng& rng, double m, int n_atoms);

/// draw_measure keyed by seed, plus the resulting shifted series in P_m(beta).
std::pair<AtomicMeasure, TruncatedSeries> random_pm_beta(const ClassSpec& spec, uint64_t seed,
                                                         int n_atoms, int order);

struct RadiusCheck {
    double radius = 0.0;
    double integral = 0.0;
    bool passed = false;
};

struct MembershipDiagnostics {
    std::vector<RadiusCheck> checks;
    double limit = 0.0;      // m * pi
    double tolerance = 0.0;  // absolute slack on the integral
    double max_integral = 0.0;
    double max_radius = 0.0;
    bool passed = false;
};

inline constexpr double kMembershipTolScale = 1e-3;  // of m*pi
inline constexpr int kDefaultNTheta = 4096;
inline constexpr double kDefaultRadii[] = {0.5, 0.8, 0.95};

/// Trapezoid approximation of the rotation integral
/// int |Re P(r e^{i theta}) - beta| / (1 - beta) d theta at each radius,
/// compared against m*pi + tolerance. A pass is "not refuted at the tested
/// radii": the definition quantifies over all r < 1, so only failures are
/// conclusive.
MembershipDiagnostics membership_quadrature(const TruncatedSeries& P, const ClassSpec& spec,
                                            std::span<const double> radii = kDefaultRadii,
                                            int n_theta = kDefaultNTheta,
                                            std::optional<double> tolerance = std::nullopt);

struct CheckResult {
    bool passed = false;
    std::optional<int> first_violation;
    double max_abs = 0.0;  // max_n |h_n|
    double limit = 0.0;    // m (1 - beta)
};

inline constexpr double kCoeffCheckSlack = 1e-9;

/// Necessary condition |h_n| <= m (1 - beta) + slack for all retained n >= 1.
CheckResult coefficient_bound_check(const TruncatedSeries& Phi, const ClassSpec& spec);

nlohmann::json to_json(const AtomicMeasure& mu);
AtomicMeasure measure_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ClassSpec& spec);
ClassSpec spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MembershipDiagnostics& d);
MembershipDiagnostics membership_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CheckResult& c);
CheckResult check_from_json(const nlohmann::json& j);

}  // namespace schlicht

#pragma once

#include <optional>
#include <utility>

#include <json.hpp>

#include "schlicht/series.hpp"

namespace schlicht {

/// The quantities the coefficient bounds speak about, extracted from one
/// constructed function and its inverse-side series.
struct ExtractedCoefficients {
    Complex a2{0.0};
    Complex a3{0.0};
    Complex p1{0.0};
    Complex p2{0.0};
    Complex q2{0.0};

    /// Always recomputed from a2 and a3, never stored independently.
    Complex combo() const { return 2.0 * a2 * a2 - a3; }
};

/// Ratio condition: (f*k)(z)/z, constant term 1, n-th coefficient
/// a_{n+1} k_{n+1}.
TruncatedSeries r_operator(const NormalizedFunction& f, const NormalizedFunction& k);

/// Derivative-blend condition with F = f*k:
///   (1-alpha) z F'/F + alpha (1 + z F''/F').
/// Throws DegenerateConvolution if F's linear term vanishes.
TruncatedSeries v_operator(const NormalizedFunction& f, const NormalizedFunction& k,
                           Complex alpha);

/// Closed forms of the blend's first two coefficients:
///   c1 = (1+alpha) a2 k2
///   c2 = 2 (1+2 alpha) a3 k3 - (1+3 alpha) a2^2 k2^2
std::pair<Complex, Complex> v_expansion_closed_form(Complex a2, Complex a3, Complex k2,
                                                    Complex k3, Complex alpha);

/// The condition series of the inverse g = revert(f): the ratio condition
/// when alpha is absent, the blend otherwise.
TruncatedSeries inverse_side_series(const NormalizedFunction& f, const NormalizedFunction& k,
                                    std::optional<Complex> alpha = std::nullopt);

struct RatioConstruction {
    NormalizedFunction f;
    /// Set when a vanishing kernel coefficient forced truncation: the first
    /// unsolvable index.
    std::optional<int> truncated_at;
};

/// Solves the ratio condition for f: a_n = p_{n-1} / k_n wherever k_n != 0,
/// truncating at the last solvable order otherwise.
RatioConstruction construct_f_from_p_br(const TruncatedSeries& p, const NormalizedFunction& k);

// Constructions reject alpha this close to the excluded points -1 and -1/2.
inline constexpr double kAlphaGuard = 1e-6;

/// Solves the blend condition for f through order 3 (only a2 and a3 are
/// determined by the first two coefficients):
///   a2 = p1 / ((1+alpha) k2)
///   a3 = [p2 + (1+3 alpha)/(1+alpha)^2 p1^2] / (2 (1+2 alpha) k3)
NormalizedFunction construct_f_from_p_bv(const TruncatedSeries& p, const NormalizedFunction& k,
                                         Complex alpha);

/// Residuals of the four inverse relations that the blend-condition bounds
/// rest on, evaluated by computing p1, p2, q2 forward from (a2, a3) and
/// re-deriving a2 and a3 back from them.
struct IdentityReport {
    double a2sq_from_pq = 0.0;      // |a2^2 - (p2+q2)/(4(1+2a)k3 - 2(1+3a)k2^2)|
    double a3_from_sum_diff = 0.0;  // via (p2+q2) and (p2-q2)
    double a3_from_p_side = 0.0;    // via p2 and p1^2
    double a3_from_q_side = 0.0;    // via q2 and p1^2
    double max_deviation = 0.0;
    /// Reciprocal of the smallest denominator modulus encountered; grows
    /// near the excluded alpha set.
    double condition = 0.0;
};

IdentityReport identity_suite(Complex a2, Complex a3, Complex k2, Complex k3, Complex alpha);

nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const ExtractedCoefficients& e);
ExtractedCoefficients extracted_from_json(const nlohmann::json& j);

}  // namespace schlicht

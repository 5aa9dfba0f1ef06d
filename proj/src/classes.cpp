#include "schlicht/classes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace schlicht {

namespace {

constexpr double kPi = std::numbers::pi;

double sum_abs_mixed(const std::vector<double>& w, double s, double uniform_w) {
    double acc = 0.0;
    for (double wi : w) acc += std::abs((1.0 - s) * wi + s * uniform_w);
    return acc;
}

}  // namespace

double AtomicMeasure::weight_sum() const {
    double s = 0.0;
    for (const Atom& a : atoms) s += a.w;
    return s;
}

double AtomicMeasure::abs_weight_sum() const {
    double s = 0.0;
    for (const Atom& a : atoms) s += std::abs(a.w);
    return s;
}

void AtomicMeasure::validate(double m) const {
    if (atoms.empty()) throw InvalidMeasure("measure needs at least one atom");
    if (std::abs(weight_sum() - 1.0) > 1e-12)
        throw InvalidMeasure("measure weights must sum to 1");
    if (abs_weight_sum() > m / 2.0 + 1e-12)
        throw InvalidMeasure("total variation exceeds m/2");
}

void ClassSpec::validate() const {
    if (!(m >= 2.0)) throw ParamOutOfRange("class parameter m must be >= 2");
    if (!(beta >= 0.0 && beta < 1.0)) throw ParamOutOfRange("beta must lie in [0, 1)");
    if (alpha && *alpha == Complex{-1.0})
        throw ExcludedAlpha("alpha = -1 is excluded by the class hypotheses");
}

TruncatedSeries kernel_series(double t, int order) {
    std::vector<Complex> c(order + 1);
    c[0] = 1.0;
    const Complex eit = std::polar(1.0, t);
    Complex p{1.0};
    for (int n = 1; n <= order; ++n) {
        p *= -eit;
        c[n] = 2.0 * p;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries pm_from_measure(const AtomicMeasure& mu, int order) {
    if (mu.atoms.empty()) throw InvalidMeasure("measure needs at least one atom");
    if (std::abs(mu.weight_sum() - 1.0) > 1e-12)
        throw InvalidMeasure("measure weights must sum to 1");

    // p_n = 2 (-1)^n sum_j w_j e^{i n t_j}
    std::vector<Complex> c(order + 1, Complex{0.0});
    c[0] = 1.0;
    for (const Atom& a : mu.atoms) {
        const Complex eit = std::polar(1.0, a.t);
        Complex p{1.0};
        for (int n = 1; n <= order; ++n) {
            p *= -eit;
            c[n] += 2.0 * a.w * p;
        }
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries pm_from_pair(const TruncatedSeries& p1, const TruncatedSeries& p2, double m) {
    if (p1.coeff(0) != Complex{1.0} || p2.coeff(0) != Complex{1.0})
        throw BadConstantTerm("Caratheodory-type inputs must have constant term 1");
    if (!(m >= 2.0)) throw ParamOutOfRange("class parameter m must be >= 2");
    const double wp = m / 4.0 + 0.5;
    const double wm = m / 4.0 - 0.5;
    TruncatedSeries out = sub(scale(p1, wp), scale(p2, wm));
    // wp - wm = 1 analytically; keep the constant term exact.
    std::vector<Complex> c(out.coeffs().begin(), out.coeffs().end());
    c[0] = 1.0;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries shift_beta(const TruncatedSeries& p, double beta) {
    if (!(beta >= 0.0 && beta < 1.0)) throw ParamOutOfRange("beta must lie in [0, 1)");
    std::vector<Complex> c(p.order() + 1);
    // (1-beta) p_0 + beta, kept exact at the normalization point p(0) = 1.
    c[0] = p.coeff(0) == Complex{1.0} ? Complex{1.0} : (1.0 - beta) * p.coeff(0) + beta;
    for (int n = 1; n <= p.order(); ++n) c[n] = (1.0 - beta) * p.coeff(n);
    return TruncatedSeries(std::move(c));
}

AtomicMeasure draw_measure(Rng& rng, double m, int n_atoms) {
    if (n_atoms < 1) throw ParamOutOfRange("need at least one atom");
    std::vector<double> t(n_atoms), w(n_atoms);
    for (int i = 0; i < n_atoms; ++i) t[i] = rng.uniform(0.0, 2.0 * kPi);
    double raw_sum = 0.0;
    for (int i = 0; i < n_atoms; ++i) {
        w[i] = rng.uniform(-1.0, 1.0);
        raw_sum += w[i];
    }
    const double shift = (1.0 - raw_sum) / n_atoms;
    for (double& wi : w) wi += shift;

    // Shrink toward the uniform positive measure (sum |w| = 1 <= m/2) until
    // the total-variation budget holds; bisection on the mix parameter.
    const double budget = m / 2.0;
    const double uw = 1.0 / n_atoms;
    if (sum_abs_mixed(w, 0.0, uw) > budget) {
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            (sum_abs_mixed(w, mid, uw) > budget ? lo : hi) = mid;
        }
        for (double& wi : w) wi = (1.0 - hi) * wi + hi * uw;
    }

    AtomicMeasure mu;
    mu.atoms.reserve(n_atoms);
    for (int i = 0; i < n_atoms; ++i) mu.atoms.push_back({t[i], w[i]});
    return mu;
}

std::pair<AtomicMeasure, TruncatedSeries> random_pm_beta(const ClassSpec& spec, uint64_t seed,
                                                         int n_atoms, int order) {
    spec.validate();
    Rng rng(seed);
    AtomicMeasure mu = draw_measure(rng, spec.m, n_atoms);
    TruncatedSeries phi = shift_beta(pm_from_measure(mu, order), spec.beta);
    return {std::move(mu), std::move(phi)};
}

MembershipDiagnostics membership_quadrature(const TruncatedSeries& P, const ClassSpec& spec,
                                            std::span<const double> radii, int n_theta,
                                            std::optional<double> tolerance) {
    spec.validate();
    if (n_theta < 256) throw ParamOutOfRange("membership quadrature needs n_theta >= 256");

    MembershipDiagnostics d;
    d.limit = spec.m * kPi;
    d.tolerance = tolerance.value_or(kMembershipTolScale * d.limit);
    d.max_integral = 0.0;
    d.passed = true;

    const double inv = 1.0 / (1.0 - spec.beta);
    for (double r : radii) {
        if (!(r > 0.0 && r < 1.0)) throw RadiusOutOfRange("radii must lie in (0, 1)");
        // Trapezoid rule on the periodic grid theta_j = 2*pi*j/n.
        double acc = 0.0;
        for (int j = 0; j < n_theta; ++j) {
            const Complex z = std::polar(r, 2.0 * kPi * j / n_theta);
            acc += std::abs(eval(P, z).real() - spec.beta) * inv;
        }
        const double integral = acc * 2.0 * kPi / n_theta;
        const bool ok = integral <= d.limit + d.tolerance;
        d.checks.push_back({r, integral, ok});
        d.passed = d.passed && ok;
        if (integral >= d.max_integral) {
            d.max_integral = integral;
            d.max_radius = r;
        }
    }
    return d;
}

CheckResult coefficient_bound_check(const TruncatedSeries& Phi, const ClassSpec& spec) {
    CheckResult res;
    res.limit = spec.m * (1.0 - spec.beta);
    res.passed = true;
    for (int n = 1; n <= Phi.order(); ++n) {
        const double a = std::abs(Phi.coeff(n));
        res.max_abs = std::max(res.max_abs, a);
        if (a > res.limit + kCoeffCheckSlack && !res.first_violation) {
            res.first_violation = n;
            res.passed = false;
        }
    }
    return res;
}

nlohmann::json to_json(const AtomicMeasure& mu) {
    nlohmann::json atoms = nlohmann::json::array();
    for (const Atom& a : mu.atoms) atoms.push_back({{"t", a.t}, {"w", a.w}});
    return nlohmann::json{{"atoms", std::move(atoms)}};
}

AtomicMeasure measure_from_json(const nlohmann::json& j) {
    AtomicMeasure mu;
    for (const auto& a : j.at("atoms"))
        mu.atoms.push_back({a.at("t").get<double>(), a.at("w").get<double>()});
    return mu;
}

nlohmann::json to_json(const ClassSpec& spec) {
    nlohmann::json j{{"m", spec.m}, {"beta", spec.beta}, {"kernel", to_json(spec.kernel.series())}};
    if (spec.alpha)
        j["alpha"] = {{"re", spec.alpha->real()}, {"im", spec.alpha->imag()}};
    return j;
}

ClassSpec spec_from_json(const nlohmann::json& j) {
    ClassSpec spec{j.at("m").get<double>(), j.at("beta").get<double>(), std::nullopt,
                   NormalizedFunction(series_from_json(j.at("kernel")))};
    if (j.contains("alpha"))
        spec.alpha = Complex{j["alpha"].at("re").get<double>(), j["alpha"].at("im").get<double>()};
    return spec;
}

nlohmann::json to_json(const MembershipDiagnostics& d) {
    nlohmann::json checks = nlohmann::json::array();
    for (const RadiusCheck& c : d.checks)
        checks.push_back({{"radius", c.radius}, {"integral", c.integral}, {"passed", c.passed}});
    return nlohmann::json{{"checks", std::move(checks)},   {"limit", d.limit},
                          {"tolerance", d.tolerance},      {"max_integral", d.max_integral},
                          {"max_radius", d.max_radius},    {"passed", d.passed}};
}

MembershipDiagnostics membership_from_json(const nlohmann::json& j) {
    MembershipDiagnostics d;
    for (const auto& c : j.at("checks"))
        d.checks.push_back({c.at("radius").get<double>(), c.at("integral").get<double>(),
                            c.at("passed").get<bool>()});
    d.limit = j.at("limit").get<double>();
    d.tolerance = j.at("tolerance").get<double>();
    d.max_integral = j.at("max_integral").get<double>();
    d.max_radius = j.at("max_radius").get<double>();
    d.passed = j.at("passed").get<bool>();
    return d;
}

nlohmann::json to_json(const CheckResult& c) {
    nlohmann::json j{{"passed", c.passed}, {"max_abs", c.max_abs}, {"limit", c.limit}};
    if (c.first_violation) j["first_violation"] = *c.first_violation;
    return j;
}

CheckResult check_from_json(const nlohmann::json& j) {
    CheckResult c;
    c.passed = j.at("passed").get<bool>();
    c.max_abs = j.at("max_abs").get<double>();
    c.limit = j.at("limit").get<double>();
    if (j.contains("first_violation")) c.first_violation = j["first_violation"].get<int>();
    return c;
}

}  // namespace schlicht

#include "schlicht/operators.hpp"

#include <algorithm>
#include <cmath>

namespace schlicht {

TruncatedSeries r_operator(const NormalizedFunction& f, const NormalizedFunction& k) {
    return shift_down(hadamard(f.series(), k.series()));
}

TruncatedSeries v_operator(const NormalizedFunction& f, const NormalizedFunction& k,
                           Complex alpha) {
    const TruncatedSeries F = hadamard(f.series(), k.series());
    if (F.coeff(1) == Complex{0.0})
        throw DegenerateConvolution("linear coefficient of f*k vanishes");

    const TruncatedSeries Fp = derivative(F);
    // z F'/F = F' / (F/z); both sides have constant term 1.
    const TruncatedSeries starlike = div(Fp, shift_down(F));
    // 1 + z F''/F'
    TruncatedSeries convex = div(shift_up(derivative(Fp)), Fp);
    convex = add(convex, TruncatedSeries::constant(1.0, convex.order()));

    const int n = std::min(starlike.order(), convex.order());
    return add(scale(starlike, 1.0 - alpha).with_order(n), scale(convex, alpha).with_order(n));
}

std::pair<Complex, Complex> v_expansion_closed_form(Complex a2, Complex a3, Complex k2,
                                                    Complex k3, Complex alpha) {
    const Complex c1 = (1.0 + alpha) * a2 * k2;
    const Complex c2 =
        2.0 * (1.0 + 2.0 * alpha) * a3 * k3 - (1.0 + 3.0 * alpha) * a2 * a2 * k2 * k2;
    return {c1, c2};
}

TruncatedSeries inverse_side_series(const NormalizedFunction& f, const NormalizedFunction& k,
                                    std::optional<Complex> alpha) {
    const NormalizedFunction g{revert(f)};
    return alpha ? v_operator(g, k, *alpha) : r_operator(g, k);
}

RatioConstruction construct_f_from_p_br(const TruncatedSeries& p, const NormalizedFunction& k) {
    if (p.coeff(0) != Complex{1.0})
        throw BadConstantTerm("ratio data must have constant term 1");

    const int order = std::min(p.order() + 1, k.order());
    std::vector<Complex> a(order + 1, Complex{0.0});
    a[1] = 1.0;
    std::optional<int> truncated_at;
    for (int n = 2; n <= order; ++n) {
        if (k.a(n) == Complex{0.0}) {
            truncated_at = n;
            a.resize(n);  // keep a_1..a_{n-1}
            break;
        }
        a[n] = p.coeff(n - 1) / k.a(n);
    }
    return {NormalizedFunction(TruncatedSeries(std::move(a))), truncated_at};
}

NormalizedFunction construct_f_from_p_bv(const TruncatedSeries& p, const NormalizedFunction& k,
                                         Complex alpha) {
    if (p.coeff(0) != Complex{1.0})
        throw BadConstantTerm("blend data must have constant term 1");
    if (std::abs(alpha + 1.0) < kAlphaGuard || std::abs(alpha + 0.5) < kAlphaGuard)
        throw ExcludedAlpha("alpha too close to an excluded point (-1 or -1/2)");
    if (k.a(2) == Complex{0.0}) throw KernelCoefficientZero("kernel coefficient k_2 vanishes", 2);
    if (k.a(3) == Complex{0.0}) throw KernelCoefficientZero("kernel coefficient k_3 vanishes", 3);

    const Complex p1 = p.coeff(1);
    const Complex p2 = p.coeff(2);
    const Complex one_a = 1.0 + alpha;
    const Complex a2 = p1 / (one_a * k.a(2));
    const Complex a3 =
        (p2 + (1.0 + 3.0 * alpha) / (one_a * one_a) * p1 * p1) / (2.0 * (1.0 + 2.0 * alpha) * k.a(3));
    return NormalizedFunction(TruncatedSeries({Complex{0.0}, Complex{1.0}, a2, a3}));
}

IdentityReport identity_suite(Complex a2, Complex a3, Complex k2, Complex k3, Complex alpha) {
    const Complex one_a = 1.0 + alpha;
    const Complex one_2a = 1.0 + 2.0 * alpha;
    const Complex one_3a = 1.0 + 3.0 * alpha;
    const Complex D = 2.0 * one_2a * k3 - one_3a * k2 * k2;
    if (D == Complex{0.0})
        throw HypothesisViolated("2(1+2a)k3 - (1+3a)k2^2 must be nonzero");
    if (one_a == Complex{0.0} || one_2a == Complex{0.0})
        throw HypothesisViolated("alpha in {-1, -1/2} leaves the inverse relations undefined");
    if (k2 == Complex{0.0} || k3 == Complex{0.0})
        throw HypothesisViolated("kernel coefficients k2, k3 must be nonzero");

    // Forward: the three condition coefficients determined by (a2, a3).
    const Complex p1 = one_a * a2 * k2;
    const Complex p2 = 2.0 * one_2a * a3 * k3 - one_3a * a2 * a2 * k2 * k2;
    const Complex q2 = (4.0 * one_2a * k3 - one_3a * k2 * k2) * a2 * a2 - 2.0 * one_2a * a3 * k3;

    // Backward along each published route.
    const Complex a2sq = (p2 + q2) / (2.0 * D);
    const Complex a3_sum_diff = a2sq + (p2 - q2) / (4.0 * one_2a * k3);
    const Complex a3_p_side = (p2 + one_3a / (one_a * one_a) * p1 * p1) / (2.0 * one_2a * k3);
    const Complex a3_q_side =
        (-q2 + (4.0 * one_2a * k3 - one_3a * k2 * k2) / (k2 * k2 * one_a * one_a) * p1 * p1) /
        (2.0 * one_2a * k3);

    IdentityReport r;
    r.a2sq_from_pq = std::abs(a2 * a2 - a2sq);
    r.a3_from_sum_diff = std::abs(a3 - a3_sum_diff);
    r.a3_from_p_side = std::abs(a3 - a3_p_side);
    r.a3_from_q_side = std::abs(a3 - a3_q_side);
    r.max_deviation = std::max({r.a2sq_from_pq, r.a3_from_sum_diff, r.a3_from_p_side,
                                r.a3_from_q_side});
    const double min_denom =
        std::min({std::abs(D), std::abs(one_a), std::abs(one_2a), std::abs(k2), std::abs(k3)});
    r.condition = 1.0 / min_denom;
    return r;
}

nlohmann::json to_json(const IdentityReport& r) {
    return nlohmann::json{{"a2sq_from_pq", r.a2sq_from_pq},
                          {"a3_from_sum_diff", r.a3_from_sum_diff},
                          {"a3_from_p_side", r.a3_from_p_side},
                          {"a3_from_q_side", r.a3_from_q_side},
                          {"max_deviation", r.max_deviation},
                          {"condition", r.condition}};
}

nlohmann::json to_json(const ExtractedCoefficients& e) {
    auto c = [](Complex z) { return nlohmann::json{{"re", z.real()}, {"im", z.imag()}}; };
    return nlohmann::json{{"a2", c(e.a2)}, {"a3", c(e.a3)}, {"combo", c(e.combo())},
                          {"p1", c(e.p1)}, {"p2", c(e.p2)}, {"q2", c(e.q2)}};
}

ExtractedCoefficients extracted_from_json(const nlohmann::json& j) {
    auto c = [&](const char* key) {
        return Complex{j.at(key).at("re").get<double>(), j.at(key).at("im").get<double>()};
    };
    ExtractedCoefficients e;
    e.a2 = c("a2");
    e.a3 = c("a3");
    e.p1 = c("p1");
    e.p2 = c("p2");
    e.q2 = c("q2");
    return e;
}

}  // namespace schlicht

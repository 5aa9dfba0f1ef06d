#pragma once

#include <complex>
#include <span>
#include <vector>

#include <json.hpp>

#include "schlicht/errors.hpp"

namespace schlicht {

using Complex = std::complex<double>;

/// A complex MacLaurin series truncated at an explicit order N, i.e. the
/// coefficients c_0..c_N of c_0 + c_1 z + ... + c_N z^N. Coefficients beyond
/// the order are unknown, not zero; arithmetic truncates results to the
/// shortest reliable order rather than padding.
class TruncatedSeries {
public:
    /// Takes ownership of the coefficient list; order() == coeffs.size() - 1.
    /// All coefficients must be finite.
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    static TruncatedSeries zero(int order);
    static TruncatedSeries constant(Complex c, int order);
    /// The monomial z at the given order.
    static TruncatedSeries identity(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// c_n for 0 <= n <= order(); 0 beyond the order.
    Complex coeff(int n) const;
    std::span<const Complex> coeffs() const { return coeffs_; }

    /// Index of the lowest nonzero coefficient, or -1 if identically zero.
    int valuation() const;

    /// Copy truncated or zero-padded to the requested order. Padding is an
    /// explicit caller decision (exact polynomials only).
    TruncatedSeries with_order(int order) const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<Complex> coeffs_;
};

// Arithmetic. add/sub pad the shorter operand; mul/hadamard/compose truncate
// to the shortest operand's order.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, Complex factor);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Series quotient a/b. The divisor's valuation must not exceed the
/// dividend's; the common power of z is factored out first. Throws
/// DivisorVanishes otherwise.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);

/// Term-wise derivative; the order drops by one (constants stay order 0).
TruncatedSeries derivative(const TruncatedSeries& a);

/// Coefficient-wise (Hadamard) product (f*g)_n = f_n g_n.
TruncatedSeries hadamard(const TruncatedSeries& f, const TruncatedSeries& g);

/// outer(inner(z)) truncated to min(orders). Throws InnerNotVanishing unless
/// inner(0) == 0.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// Horner evaluation of the truncated polynomial at z.
Complex eval(const TruncatedSeries& a, Complex z);

/// Multiply by z (order grows by one) / divide by z (requires c_0 == 0).
TruncatedSeries shift_up(const TruncatedSeries& a);
TruncatedSeries shift_down(const TruncatedSeries& a);

/// A series normalized to c_0 = 0 and c_1 = 1 exactly (f(0)=0, f'(0)=1).
class NormalizedFunction {
public:
    explicit NormalizedFunction(TruncatedSeries s);

    const TruncatedSeries& series() const { return series_; }
    /// The MacLaurin coefficient a_n.
    Complex a(int n) const { return series_.coeff(n); }
    int order() const { return series_.order(); }

    bool operator==(const NormalizedFunction&) const = default;

private:
    TruncatedSeries series_;
};

/// Compositional inverse: the series g with compose(f, g) = z to truncation
/// order. The first coefficients satisfy the closed forms
///   b_2 = -a_2,  b_3 = 2 a_2^2 - a_3,  b_4 = -(5 a_2^3 - 5 a_2 a_3 + a_4).
TruncatedSeries revert(const NormalizedFunction& f);

// Built-in kernels, all normalized.
NormalizedFunction koebe(int order);       // z/(1-z)^2, coefficients n
NormalizedFunction halfplane(int order);   // z/(1-z), coefficients 1
NormalizedFunction log_kernel(int order);  // -log(1-z), coefficients 1/n

// JSON form {"order": N, "re": [...], "im": [...]}; exact round-trip.
nlohmann::json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

}  // namespace schlicht

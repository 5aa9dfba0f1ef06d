#include "schlicht/series.hpp"

#include <algorithm>
#include <cmath>

namespace schlicht {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

// Cauchy product of a and b, truncated to the given order.
std::vector<Complex> cauchy(std::span<const Complex> a, std::span<const Complex> b, int order) {
    std::vector<Complex> c(order + 1, Complex{0.0});
    const int na = static_cast<int>(a.size()) - 1;
    const int nb = static_cast<int>(b.size()) - 1;
    for (int i = 0; i <= std::min(order, na); ++i) {
        if (a[i] == Complex{0.0}) continue;
        const int jmax = std::min(order - i, nb);
        for (int j = 0; j <= jmax; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("series needs at least one coefficient");
    for (const Complex& c : coeffs_)
        if (!finite(c)) throw Error("series coefficients must be finite");
}

TruncatedSeries TruncatedSeries::zero(int order) {
    return TruncatedSeries(std::vector<Complex>(order + 1, Complex{0.0}));
}

TruncatedSeries TruncatedSeries::constant(Complex c, int order) {
    std::vector<Complex> v(order + 1, Complex{0.0});
    v[0] = c;
    return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::identity(int order) {
    std::vector<Complex> v(order + 1, Complex{0.0});
    if (order >= 1) v[1] = 1.0;
    return TruncatedSeries(std::move(v));
}

Complex TruncatedSeries::coeff(int n) const {
    if (n < 0) throw Error("negative coefficient index");
    return n <= order() ? coeffs_[static_cast<size_t>(n)] : Complex{0.0};
}

int TruncatedSeries::valuation() const {
    for (int n = 0; n <= order(); ++n)
        if (coeffs_[static_cast<size_t>(n)] != Complex{0.0}) return n;
    return -1;
}

TruncatedSeries TruncatedSeries::with_order(int order) const {
    std::vector<Complex> v(order + 1, Complex{0.0});
    const int n = std::min(order, this->order());
    std::copy_n(coeffs_.begin(), n + 1, v.begin());
    return TruncatedSeries(std::move(v));
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::max(a.order(), b.order());
    std::vector<Complex> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = a.coeff(i) + b.coeff(i);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::max(a.order(), b.order());
    std::vector<Complex> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = a.coeff(i) - b.coeff(i);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(const TruncatedSeries& a, Complex factor) {
    std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
    for (Complex& x : c) x *= factor;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    return TruncatedSeries(cauchy(a.coeffs(), b.coeffs(), n));
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int vb = b.valuation();
    if (vb < 0) throw DivisorVanishes("divisor is identically zero to truncation order");
    const int va = a.valuation();
    if (va >= 0 && vb > va)
        throw DivisorVanishes("divisor valuation exceeds dividend valuation");
    const int n = std::min(a.order(), b.order()) - vb;
    if (n < 0) throw DivisorVanishes("no reliable quotient coefficients at these orders");

    // Long division after factoring z^vb out of both operands.
    std::vector<Complex> q(n + 1);
    for (int i = 0; i <= n; ++i) {
        Complex acc = a.coeff(i + vb);
        for (int j = 0; j < i; ++j) acc -= q[j] * b.coeff(i - j + vb);
        q[i] = acc / b.coeff(vb);
    }
    return TruncatedSeries(std::move(q));
}

TruncatedSeries derivative(const TruncatedSeries& a) {
    if (a.order() == 0) return TruncatedSeries::zero(0);
    std::vector<Complex> c(a.order());
    for (int i = 1; i <= a.order(); ++i) c[i - 1] = static_cast<double>(i) * a.coeff(i);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries hadamard(const TruncatedSeries& f, const TruncatedSeries& g) {
    const int n = std::min(f.order(), g.order());
    std::vector<Complex> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = f.coeff(i) * g.coeff(i);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (inner.coeff(0) != Complex{0.0})
        throw InnerNotVanishing("inner series must vanish at the origin");
    const int n = std::min(outer.order(), inner.order());

    // Horner on series: res <- res*inner + outer_k, truncating at order n.
    std::vector<Complex> res(n + 1, Complex{0.0});
    res[0] = outer.coeff(n);
    for (int k = n - 1; k >= 0; --k) {
        res = cauchy(res, inner.coeffs(), n);
        res[0] += outer.coeff(k);
    }
    return TruncatedSeries(std::move(res));
}

Complex eval(const TruncatedSeries& a, Complex z) {
    Complex res{0.0};
    for (int i = a.order(); i >= 0; --i) res = res * z + a.coeff(i);
    return res;
}

TruncatedSeries shift_up(const TruncatedSeries& a) {
    std::vector<Complex> c(a.order() + 2, Complex{0.0});
    std::copy(a.coeffs().begin(), a.coeffs().end(), c.begin() + 1);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries shift_down(const TruncatedSeries& a) {
    if (a.coeff(0) != Complex{0.0}) throw Error("cannot shift down: constant term is nonzero");
    if (a.order() == 0) return TruncatedSeries::zero(0);
    std::vector<Complex> c(a.coeffs().begin() + 1, a.coeffs().end());
    return TruncatedSeries(std::move(c));
}

NormalizedFunction::NormalizedFunction(TruncatedSeries s) : series_(std::move(s)) {
    if (series_.order() < 1 || series_.coeff(0) != Complex{0.0} || series_.coeff(1) != Complex{1.0})
        throw NotNormalized("series must have c_0 = 0 and c_1 = 1 exactly");
}

TruncatedSeries revert(const NormalizedFunction& f) {
    const int n = f.order();
    std::vector<Complex> g(n + 1, Complex{0.0});
    g[1] = 1.0;

    // One pass per order: with g correct through order m-1, the w^m
    // coefficient of f(g(w)) depends on g_m with unit slope (f'(0) = 1),
    // so a single correction zeroes it.
    for (int m = 2; m <= n; ++m) {
        const TruncatedSeries fm = f.series().with_order(m);
        const TruncatedSeries gm = TruncatedSeries(std::vector<Complex>(g.begin(), g.begin() + m + 1));
        g[m] -= compose(fm, gm).coeff(m);
    }
    return TruncatedSeries(std::move(g));
}

NormalizedFunction koebe(int order) {
    std::vector<Complex> c(order + 1, Complex{0.0});
    for (int i = 1; i <= order; ++i) c[i] = static_cast<double>(i);
    return NormalizedFunction(TruncatedSeries(std::move(c)));
}

NormalizedFunction halfplane(int order) {
    std::vector<Complex> c(order + 1, Complex{1.0});
    c[0] = 0.0;
    return NormalizedFunction(TruncatedSeries(std::move(c)));
}

NormalizedFunction log_kernel(int order) {
    std::vector<Complex> c(order + 1, Complex{0.0});
    for (int i = 1; i <= order; ++i) c[i] = 1.0 / static_cast<double>(i);
    return NormalizedFunction(TruncatedSeries(std::move(c)));
}

nlohmann::json to_json(const TruncatedSeries& s) {
    std::vector<double> re(s.order() + 1), im(s.order() + 1);
    for (int i = 0; i <= s.order(); ++i) {
        re[i] = s.coeff(i).real();
        im[i] = s.coeff(i).imag();
    }
    return nlohmann::json{{"order", s.order()}, {"re", re}, {"im", im}};
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
    const int order = j.at("order").get<int>();
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (static_cast<int>(re.size()) != order + 1 || re.size() != im.size())
        throw Error("series JSON: coefficient arrays do not match the order");
    std::vector<Complex> c(re.size());
    for (size_t i = 0; i < re.size(); ++i) c[i] = Complex{re[i], im[i]};
    return TruncatedSeries(std::move(c));
}

}  // namespace schlicht

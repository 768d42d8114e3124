#include "fockcut/decay.hpp"

#include <algorithm>
#include <cmath>

namespace fockcut {

namespace {

// integral_z^inf u^n exp(-beta u) du for integer n >= 0, z >= 0.
double upper_gamma_integral(int n, double beta, double z) {
    // e^{-beta z} sum_{j=0}^{n} (n!/j!) z^j / beta^{n+1-j}
    double sum = 0.0;
    double factor = 1.0;  // n!/j! built downward from j=n
    for (int j = n; j >= 0; --j) {
        sum += factor * std::pow(z, j) / std::pow(beta, n + 1 - j);
        factor *= j;  // moving j -> j-1 multiplies n!/j! by j
    }
    return std::exp(-beta * z) * sum;
}

}  // namespace

ExpDecay::ExpDecay(double beta) : beta_(beta) {
    if (!(beta > 0.0)) throw ConfigError("exp decay needs beta > 0");
}

double ExpDecay::operator()(double x) const { return std::exp(-beta_ * x); }

std::string ExpDecay::name() const { return "exp(beta=" + std::to_string(beta_) + ")"; }

double ExpDecay::tail_power_sum(long S, double q) const {
    // Sum terms until the ratio bound exp(-beta)(1+1/r)^q drops below 1,
    // then close with the geometric majorant.
    long r = std::max(S + 1, 1L);
    double total = 0.0;
    for (int step = 0; step < 100000; ++step) {
        const double term = std::exp(-beta_ * r) * std::pow(double(r), q);
        const double ratio = std::exp(-beta_) * std::pow(1.0 + 1.0 / double(r), q);
        if (ratio < 1.0) return total + term / (1.0 - ratio);
        total += term;
        ++r;
    }
    throw Error("exp decay tail failed to certify");
}

std::unique_ptr<DecayFunction> ExpDecay::clone() const {
    return std::make_unique<ExpDecay>(beta_);
}

SqrtExpDecay::SqrtExpDecay(double beta) : beta_(beta) {
    if (!(beta > 0.0)) throw ConfigError("sqrt-exp decay needs beta > 0");
}

double SqrtExpDecay::operator()(double x) const { return std::exp(-beta_ * std::sqrt(std::max(x, 0.0))); }

std::string SqrtExpDecay::name() const { return "exp_sqrt(beta=" + std::to_string(beta_) + ")"; }

double SqrtExpDecay::tail_power_sum(long S, double q) const {
    // g(x) = exp(-beta sqrt(x)) x^q decreases once sqrt(x) > 2q/beta; sum
    // explicitly up to that point, then bound by the integral, which after
    // u = sqrt(x) becomes 2 integral u^{2q+1} exp(-beta u) du.
    const double turn = std::pow(2.0 * q / beta_, 2.0);
    long r = std::max(S + 1, 1L);
    double total = 0.0;
    while (double(r) <= std::max(turn, 1.0)) {
        total += (*this)(double(r)) * std::pow(double(r), q);
        ++r;
    }
    const int n = static_cast<int>(std::ceil(2.0 * q + 1.0));
    const double z = std::sqrt(double(r - 1));
    // u^{2q+1} <= u^n for u >= 1.
    total += 2.0 * upper_gamma_integral(n, beta_, std::max(z, 1.0));
    if (z < 1.0) {
        // cover the integrand gap on [z^2, 1] by one explicit bound
        total += (*this)(double(r - 1)) * std::pow(double(std::max(r - 1, 1L)), q);
    }
    return total;
}

std::unique_ptr<DecayFunction> SqrtExpDecay::clone() const {
    return std::make_unique<SqrtExpDecay>(beta_);
}

TiltedDecay::TiltedDecay(const DecayFunction& inner) : inner_(inner.clone()) {}

double TiltedDecay::operator()(double x) const { return x * (*inner_)(x); }

std::string TiltedDecay::name() const { return "x*" + inner_->name(); }

double TiltedDecay::tail_power_sum(long S, double q) const {
    return inner_->tail_power_sum(S, q + 1.0);
}

std::unique_ptr<DecayFunction> TiltedDecay::clone() const {
    return std::make_unique<TiltedDecay>(*inner_);
}

std::unique_ptr<DecayFunction> make_decay(const std::string& name, double beta) {
    if (name == "exp") return std::make_unique<ExpDecay>(beta);
    if (name == "exp_sqrt") return std::make_unique<SqrtExpDecay>(beta);
    throw ConfigError("unknown decay function '" + name + "' (expected exp or exp_sqrt)");
}

bool is_admissible(const DecayFunction& f, int kmax, double bound) {
    const double f0 = f(0.0);
    if (!(f0 > 0.0) || !std::isfinite(f0)) return false;
    for (double x = 1e-3; x <= 1e6; x *= 1.6) {
        const double v = f(x);
        if (!(v > 0.0) || !std::isfinite(v)) return false;
        if (v > f0 * (1.0 + 1e-12)) return false;  // bounded by its value at 0
        if (v * std::pow(1.0 + x, kmax) > bound) return false;
    }
    return true;
}

double tail_weighted(const DecayFunction& f, long S, double q, double pow_shift) {
    if (pow_shift < 0.0) throw Error("tail_weighted: pow_shift must be >= 0");
    return std::pow(1.0 + pow_shift, q) * f.tail_power_sum(S, q);
}

double tail_from_row_profile(const DecayFunction& f, long S, double q) {
    // sum_{s>S} f(s-1) s^q = sum_{u>S-1} f(u) (u+1)^q
    if (S < 1) {
        return f(0.0) + tail_weighted(f, 0, q, 1.0);
    }
    return tail_weighted(f, S - 1, q, 1.0);
}

double decay_weight_sum(const DecayFunction& f, int k) {
    const long head = 256;
    double sum = 0.0;
    for (long l = 1; l <= head; ++l) sum += f(double(l)) * std::pow(double(l), k);
    return sum + f.tail_power_sum(head, double(k));
}

}  // namespace fockcut

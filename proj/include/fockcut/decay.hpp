#pragma once

#include <memory>
#include <string>

#include "fockcut/types.hpp"

namespace fockcut {

// A weight function from the admissible class: positive, bounded,
// continuous on [0,inf), decreasing faster than any inverse power.
// tail_power_sum must return a certified upper bound, never an estimate.
class DecayFunction {
public:
    virtual ~DecayFunction() = default;

    virtual double operator()(double x) const = 0;
    virtual std::string name() const = 0;
    // Certified upper bound for sum_{r>S} f(r) r^q, q >= 0.
    virtual double tail_power_sum(long S, double q) const = 0;
    virtual std::unique_ptr<DecayFunction> clone() const = 0;
};

// f(x) = exp(-beta x)
class ExpDecay final : public DecayFunction {
public:
    explicit ExpDecay(double beta = 1.0);
    double operator()(double x) const override;
    std::string name() const override;
    double tail_power_sum(long S, double q) const override;
    std::unique_ptr<DecayFunction> clone() const override;
    double beta() const { return beta_; }

private:
    double beta_;
};

// f(x) = exp(-beta sqrt(x))
class SqrtExpDecay final : public DecayFunction {
public:
    explicit SqrtExpDecay(double beta = 1.0);
    double operator()(double x) const override;
    std::string name() const override;
    double tail_power_sum(long S, double q) const override;
    std::unique_ptr<DecayFunction> clone() const override;
    double beta() const { return beta_; }

private:
    double beta_;
};

// x |-> x f(x); the class is closed under this map.
class TiltedDecay final : public DecayFunction {
public:
    explicit TiltedDecay(const DecayFunction& inner);
    double operator()(double x) const override;
    std::string name() const override;
    double tail_power_sum(long S, double q) const override;
    std::unique_ptr<DecayFunction> clone() const override;

private:
    std::unique_ptr<DecayFunction> inner_;
};

// Factory keyed by the names used in run configs: "exp", "exp_sqrt".
std::unique_ptr<DecayFunction> make_decay(const std::string& name, double beta);

// Numeric membership check: positive, bounded by f(0+), and
// f(x)(1+x)^k bounded for k up to kmax on a logarithmic grid.
bool is_admissible(const DecayFunction& f, int kmax = 12, double bound = 1e12);

// Certified upper bound for sum_{r>S} f(r) (r + pow_shift)^q with
// pow_shift >= 0; reduces to tail_power_sum via (r+c)^q <= ((1+c) r)^q.
double tail_weighted(const DecayFunction& f, long S, double q, double pow_shift);

// Certified upper bound for sum_{s>S} f(s-1) s^q (the form entering the
// free-model gap estimates).
double tail_from_row_profile(const DecayFunction& f, long S, double q);

// sum_{l>=1} f(l) l^k plus a certified tail; finite for every admissible f.
double decay_weight_sum(const DecayFunction& f, int k);

}  // namespace fockcut

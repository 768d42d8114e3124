#pragma once

#include "fockcut/decay.hpp"
#include "fockcut/fock.hpp"

namespace fockcut {

// Number-operator weighting for the boson seminorms. NumberN weights level
// l by l (spectrum of N); ShiftedM weights it by l+1 (spectrum of M = N+1,
// used alongside the spin-boson models so weights start at 1).
enum class Weighting { NumberN, ShiftedM };

inline int weight_shift(Weighting w) { return w == Weighting::NumberN ? 0 : 1; }

struct SummedSeminorm {
    double value = 0.0;       // sum over the trusted block
    double tail_bound = 0.0;  // certified bound for the omitted part
    double upper() const { return value + tail_bound; }
};

// Summed form: sum_{l,s} f(w(l)) w(s)^k |Pi_l X Pi_s| over the trusted
// block, plus a certified tail from the operator's growth declaration.
// Throws UnboundedTailError when the tail cannot be certified.
SummedSeminorm lassner_sum(const FockOperator& x, const DecayFunction& f, int k,
                           Weighting w = Weighting::NumberN);

// Operator-norm form: max(|f(W) X W^k|, |W^k X f(W)|) on the trusted block,
// W the diagonal number weighting.
double lassner_opnorm(const FockOperator& x, const DecayFunction& f, int k,
                      Weighting w = Weighting::NumberN);

}  // namespace fockcut

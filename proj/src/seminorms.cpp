#include "fockcut/seminorms.hpp"

#include <cmath>

namespace fockcut {

namespace {

double pow_weight(int s, int k, int shift) {
    return std::pow(double(s + shift), k);
}

// Certified bound on the seminorm mass outside the trusted block [0..T]^2.
double tail_outside_trusted(const FockOperator& x, const DecayFunction& f, int k,
                            int shift) {
    if (x.numeric_support() <= x.trusted()) return 0.0;
    if (!x.growth().known)
        throw UnboundedTailError("unbounded tail: operator '" + x.label() +
                                 "' carries no growth declaration");

    const GrowthProfile& g = x.growth();
    const int reach = x.shape().reach();
    const long T = x.trusted();
    // Entries outside the block satisfy max(r,c) > T and |r-c| <= reach, so
    // r > T - reach. Bound each term by the declared profile and collapse
    // the column sum into a bandwidth factor.
    const double width = 2.0 * reach + 1.0;
    const double q = double(k) + 0.5 * g.degree;
    // f(r+shift) <= f(r) and (c+shift)^k (profile base)^(deg/2)
    //   <= (r + reach + shift + degree + offset)^q.
    const double pow_shift = double(reach + shift + g.degree + g.offset);
    const long start = std::max(T - reach, 0L);
    double tail = g.scale * width * tail_weighted(f, start, q, pow_shift);
    // Rows r <= start with columns beyond T sit inside the band too; the
    // start index above already covers them because c <= r + reach <= T.
    return tail;
}

}  // namespace

SummedSeminorm lassner_sum(const FockOperator& x, const DecayFunction& f, int k,
                           Weighting w) {
    if (x.trusted() < 0)
        throw TrustedRegionError("lassner_sum: operator '" + x.label() +
                                 "' has an empty trusted region");
    const int shift = weight_shift(w);
    const int T = x.trusted();
    SummedSeminorm out;
    for (int l = 0; l <= T; ++l) {
        const double fl = f(double(l + shift));
        for (int s = 0; s <= T; ++s) {
            const double mod = std::abs(x.entry(l, s));
            if (mod == 0.0) continue;
            out.value += fl * pow_weight(s, k, shift) * mod;
        }
    }
    out.tail_bound = tail_outside_trusted(x, f, k, shift);
    return out;
}

double lassner_opnorm(const FockOperator& x, const DecayFunction& f, int k,
                      Weighting w) {
    if (x.trusted() < 0)
        throw TrustedRegionError("lassner_opnorm: operator '" + x.label() +
                                 "' has an empty trusted region");
    const int shift = weight_shift(w);
    const int n = x.trusted() + 1;
    Eigen::VectorXd fw(n), pw(n);
    for (int l = 0; l < n; ++l) {
        fw(l) = f(double(l + shift));
        pw(l) = pow_weight(l, k, shift);
    }
    const Matrix block = x.entries().topLeftCorner(n, n);
    const Matrix left = fw.cast<cplx>().asDiagonal() * block * pw.cast<cplx>().asDiagonal();
    const Matrix right = pw.cast<cplx>().asDiagonal() * block * fw.cast<cplx>().asDiagonal();
    return std::max(spectral_norm(left), spectral_norm(right));
}

}  // namespace fockcut

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fockcut/types.hpp"

namespace fockcut {

// Bound on matrix elements outside the trusted block:
//   |<r|X|c>| <= scale * (max(r,c) + degree + offset)^(degree/2).
// Monomials of degree d in the ladder operators declare degree d.
struct GrowthProfile {
    bool known = true;
    double scale = 1.0;
    int degree = 0;
    int offset = 0;

    double bound(int r, int c) const;
};

// Declared structure of the infinite-dimensional operator the matrix
// represents. band_up bounds col-row over nonzero entries, band_lo bounds
// row-col; support, when set, bounds both indices of every nonzero entry.
struct OperatorShape {
    int band_up = 0;
    int band_lo = 0;
    std::optional<int> support;

    int reach() const { return std::max({0, band_up, band_lo}); }
};

// Dense operator in the number basis |0>..|D> with exactness tracking:
// all entries <r|X|c> with r,c <= trusted equal the infinite-dimensional
// matrix elements.
class FockOperator {
public:
    FockOperator(Matrix entries, int trusted, std::string label,
                 OperatorShape shape, GrowthProfile growth);

    int dim() const { return static_cast<int>(entries_.rows()); }
    int ambient() const { return dim() - 1; }
    int trusted() const { return trusted_; }
    const Matrix& entries() const { return entries_; }
    const std::string& label() const { return label_; }
    const OperatorShape& shape() const { return shape_; }
    const GrowthProfile& growth() const { return growth_; }

    cplx entry(int r, int c) const { return entries_(r, c); }

    FockOperator adjoint() const;
    FockOperator with_label(std::string label) const;
    FockOperator with_trusted(int trusted) const;

    // Largest row or col index carrying an entry that is not exactly zero;
    // -1 for the zero matrix.
    int numeric_support() const;

    bool is_hermitian(double tol = 1e-12) const;

private:
    Matrix entries_;
    int trusted_;
    std::string label_;
    OperatorShape shape_;
    GrowthProfile growth_;
};

FockOperator annihilation(const TruncationSpec& spec);
FockOperator creation(const TruncationSpec& spec);
FockOperator number_operator(const TruncationSpec& spec);
FockOperator shifted_number_operator(const TruncationSpec& spec);  // N + 1
FockOperator identity_operator(const TruncationSpec& spec);
FockOperator zero_operator(const TruncationSpec& spec);
FockOperator projection_pi(int l, const TruncationSpec& spec);
FockOperator projection_q(int L, const TruncationSpec& spec);
// Q_L a Q_L and its adjoint; exact everywhere in the ambient space.
FockOperator regularized_annihilation(int L, const TruncationSpec& spec);
FockOperator regularized_creation(int L, const TruncationSpec& spec);
// Wraps an externally produced matrix, trusting nothing beyond what the
// caller declares.
FockOperator wrap_matrix(Matrix entries, int trusted, std::string label,
                         OperatorShape shape, GrowthProfile growth);

FockOperator compose(const FockOperator& x, const FockOperator& y);
FockOperator add(const FockOperator& x, const FockOperator& y);
FockOperator subtract(const FockOperator& x, const FockOperator& y);
FockOperator scale(cplx alpha, const FockOperator& x);
FockOperator commutator(const FockOperator& x, const FockOperator& y);

inline FockOperator operator*(const FockOperator& x, const FockOperator& y) { return compose(x, y); }
inline FockOperator operator+(const FockOperator& x, const FockOperator& y) { return add(x, y); }
inline FockOperator operator-(const FockOperator& x, const FockOperator& y) { return subtract(x, y); }
inline FockOperator operator*(cplx alpha, const FockOperator& x) { return scale(alpha, x); }
inline FockOperator operator*(double alpha, const FockOperator& x) { return scale(cplx(alpha, 0.0), x); }
inline FockOperator operator-(const FockOperator& x) { return scale(cplx(-1.0, 0.0), x); }

double max_abs_diff(const FockOperator& x, const FockOperator& y);
// Max deviation restricted to entries with row,col <= bound.
double max_abs_diff_within(const FockOperator& x, const FockOperator& y, int bound);

struct IdentityDeviation {
    std::string identity;
    int index_a = -1;
    int index_b = -1;
    double deviation = 0.0;
};

struct LadderIdentityReport {
    std::vector<IdentityDeviation> checks;

    double worst() const;
    const IdentityDeviation* worst_check() const;
    bool all_within(double tol) const;
    const IdentityDeviation* first_violation(double tol) const;
};

// Exercises the exact ladder/projector identities over all indices up to
// max_index: projector shifts past a and a-dagger, cumulative-projector
// shifts and commutators, block norms |Pi_l a Pi_s| = sqrt(s) delta_{l,s-1},
// projector algebra, the CCR below the ambient edge, and the coincidence
// of the two cutoff regularizations of the number operator.
LadderIdentityReport verify_ladder_identities(const TruncationSpec& spec, int max_index);
// Same suite but with a caller-supplied candidate for the annihilation
// operator (negative-control hook).
LadderIdentityReport verify_ladder_identities(const TruncationSpec& spec, int max_index,
                                              const FockOperator& ladder);

}  // namespace fockcut

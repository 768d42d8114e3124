#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace fockcut {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct RangeError : Error {
    using Error::Error;
};

// Raised when an operation would need matrix elements outside the region
// where the finite matrix provably equals the infinite-dimensional operator.
struct TrustedRegionError : Error {
    using Error::Error;
};

// Raised when a seminorm tail cannot be certified because the operator
// carries no growth declaration for its untrusted entries.
struct UnboundedTailError : Error {
    using Error::Error;
};

struct NotHermitianError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

// Ambient number-basis truncation: matrices act on span{|0>..|D>}.
// L is the occupation-number cutoff, G the guard margin between the
// cutoff and the ambient edge.
struct TruncationSpec {
    int ambient_dim = 40;  // D
    int cutoff = 8;        // L
    int guard = 6;         // G

    int dim() const { return ambient_dim + 1; }
    void validate() const;
    TruncationSpec with_cutoff(int L) const;
};

double spectral_norm(const Matrix& m);
double max_abs(const Matrix& m);
double hermiticity_defect(const Matrix& m);

}  // namespace fockcut

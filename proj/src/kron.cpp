#include "fockcut/kron.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace fockcut {

KronOp KronOp::single(Matrix spin, Matrix boson) {
    KronOp op(static_cast<int>(spin.rows()), static_cast<int>(boson.rows()));
    op.push(std::move(spin), std::move(boson));
    return op;
}

KronOp KronOp::identity(int sdim, int bdim) {
    return single(Matrix::Identity(sdim, sdim), Matrix::Identity(bdim, bdim));
}

KronOp KronOp::spin_only(Matrix spin, int bdim) {
    return single(std::move(spin), Matrix::Identity(bdim, bdim));
}

KronOp KronOp::boson_only(int sdim, Matrix boson) {
    return single(Matrix::Identity(sdim, sdim), std::move(boson));
}

void KronOp::push(Matrix spin, Matrix boson) {
    if (spin_dim == 0) spin_dim = static_cast<int>(spin.rows());
    if (boson_dim == 0) boson_dim = static_cast<int>(boson.rows());
    if (spin.rows() != spin_dim || spin.cols() != spin_dim ||
        boson.rows() != boson_dim || boson.cols() != boson_dim)
        throw DimensionError("KronOp: factor dimensions differ");
    terms.push_back(Term{std::move(spin), std::move(boson)});
}

KronOp& KronOp::operator+=(const KronOp& other) {
    if (terms.empty() && spin_dim == 0) {
        spin_dim = other.spin_dim;
        boson_dim = other.boson_dim;
    }
    if (other.spin_dim != spin_dim || other.boson_dim != boson_dim)
        throw DimensionError("KronOp: tensor dimensions differ");
    for (const auto& t : other.terms) terms.push_back(t);
    return *this;
}

KronOp KronOp::adjoint() const {
    KronOp out(spin_dim, boson_dim);
    for (const auto& t : terms) out.push(t.spin.adjoint(), t.boson.adjoint());
    return out;
}

Matrix KronOp::dense() const {
    Matrix m = Matrix::Zero(spin_dim * boson_dim, spin_dim * boson_dim);
    for (const auto& t : terms) m += kronecker(t.spin, t.boson);
    return m;
}

KronOp KronOp::pruned(double tol) const {
    KronOp out(spin_dim, boson_dim);
    for (const auto& t : terms) {
        if (max_abs(t.spin) <= tol || max_abs(t.boson) <= tol) continue;
        out.terms.push_back(t);
    }
    return out;
}

KronOp operator+(const KronOp& x, const KronOp& y) {
    KronOp out = x;
    out += y;
    return out;
}

KronOp operator-(const KronOp& x, const KronOp& y) {
    return x + (cplx(-1.0, 0.0) * y);
}

KronOp operator*(cplx alpha, const KronOp& x) {
    KronOp out(x.spin_dim, x.boson_dim);
    for (const auto& t : x.terms) out.push(alpha * t.spin, t.boson);
    return out;
}

KronOp operator*(const KronOp& x, const KronOp& y) {
    if (x.spin_dim != y.spin_dim || x.boson_dim != y.boson_dim)
        throw DimensionError("KronOp product: tensor dimensions differ");
    KronOp out(x.spin_dim, x.boson_dim);
    for (const auto& tx : x.terms)
        for (const auto& ty : y.terms)
            out.push(tx.spin * ty.spin, tx.boson * ty.boson);
    return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

namespace {

Eigen::VectorXd shifted_weights(int bdim, const DecayFunction& f) {
    Eigen::VectorXd w(bdim);
    for (int l = 0; l < bdim; ++l) w(l) = f(double(l + 1));
    return w;
}

Eigen::VectorXd shifted_powers(int bdim, int k) {
    Eigen::VectorXd w(bdim);
    for (int l = 0; l < bdim; ++l) w(l) = std::pow(double(l + 1), k);
    return w;
}

}  // namespace

double combined_seminorm(const KronOp& y, const DecayFunction& f, int k,
                         const RelevantState& psi) {
    if (psi.psi.size() != y.spin_dim)
        throw DimensionError("combined_seminorm: spin dimension differs");
    const int bdim = y.boson_dim;
    const Eigen::VectorXd fw = shifted_weights(bdim, f);
    const Eigen::VectorXd pw = shifted_powers(bdim, k);
    // Map phi -> sum_j (S_j psi) (x) (f(M) B_j M^k phi) as a tall matrix.
    Matrix tall = Matrix::Zero(static_cast<long>(y.spin_dim) * bdim, bdim);
    for (const auto& t : y.terms) {
        const Vector spsi = t.spin * psi.psi;
        const Matrix weighted =
            fw.cast<cplx>().asDiagonal() * t.boson * pw.cast<cplx>().asDiagonal();
        for (int s = 0; s < y.spin_dim; ++s) {
            if (spsi(s) == cplx(0.0, 0.0)) continue;
            tall.block(static_cast<long>(s) * bdim, 0, bdim, bdim) += spsi(s) * weighted;
        }
    }
    return spectral_norm(tall);
}

double combined_seminorm_dense(const Matrix& y, int spin_dim, int boson_dim,
                               const DecayFunction& f, int k, const RelevantState& psi) {
    if (y.rows() != static_cast<long>(spin_dim) * boson_dim)
        throw DimensionError("combined_seminorm_dense: dimensions differ");
    if (psi.psi.size() != spin_dim)
        throw DimensionError("combined_seminorm_dense: spin dimension differs");
    const Eigen::VectorXd fw = shifted_weights(boson_dim, f);
    const Eigen::VectorXd pw = shifted_powers(boson_dim, k);
    Matrix tall(static_cast<long>(spin_dim) * boson_dim, boson_dim);
    Vector col(static_cast<long>(spin_dim) * boson_dim);
    for (int c = 0; c < boson_dim; ++c) {
        // psi (x) M^k e_c
        col.setZero();
        for (int s = 0; s < spin_dim; ++s)
            col(static_cast<long>(s) * boson_dim + c) = psi.psi(s) * pw(c);
        Vector image = y * col;
        for (int s = 0; s < spin_dim; ++s)
            for (int b = 0; b < boson_dim; ++b)
                image(static_cast<long>(s) * boson_dim + b) *= fw(b);
        tall.col(c) = image;
    }
    return spectral_norm(tall);
}

}  // namespace fockcut

#pragma once

#include <vector>

#include "fockcut/decay.hpp"
#include "fockcut/spin.hpp"

namespace fockcut {

// Operator on the spin (x) boson tensor space held as a sum of Kronecker
// terms sum_j S_j (x) B_j. Keeps spin-boson dynamics affordable without
// materializing (2^|V| (D+1))^2 matrices.
struct KronOp {
    int spin_dim = 0;
    int boson_dim = 0;

    struct Term {
        Matrix spin;
        Matrix boson;
    };
    std::vector<Term> terms;

    KronOp() = default;
    KronOp(int sdim, int bdim) : spin_dim(sdim), boson_dim(bdim) {}

    static KronOp single(Matrix spin, Matrix boson);
    static KronOp identity(int sdim, int bdim);
    static KronOp spin_only(Matrix spin, int bdim);
    static KronOp boson_only(int sdim, Matrix boson);

    void push(Matrix spin, Matrix boson);
    KronOp& operator+=(const KronOp& other);
    KronOp adjoint() const;

    Matrix dense() const;
    // Drop terms whose factors vanish below tol (in max-abs).
    KronOp pruned(double tol = 1e-15) const;
};

KronOp operator+(const KronOp& x, const KronOp& y);
KronOp operator-(const KronOp& x, const KronOp& y);
KronOp operator*(cplx alpha, const KronOp& x);
KronOp operator*(const KronOp& x, const KronOp& y);

Matrix kronecker(const Matrix& a, const Matrix& b);

// Combined seminorm: with Z = (1 (x) f(M)) Y (1 (x) M^k), the spectral norm
// of the map phi -> Z (psi (x) phi) from the boson space into the tensor
// space. M = N + 1 is the shifted number weighting. For a product operator
// A (x) X this equals |A psi| * |f(M) X M^k|.
double combined_seminorm(const KronOp& y, const DecayFunction& f, int k,
                         const RelevantState& psi);
double combined_seminorm_dense(const Matrix& y, int spin_dim, int boson_dim,
                               const DecayFunction& f, int k, const RelevantState& psi);

}  // namespace fockcut

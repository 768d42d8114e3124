#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "fockcut/fock.hpp"
#include "fockcut/kron.hpp"
#include "fockcut/spin.hpp"

namespace fockcut {

struct FreeModel {
    TruncationSpec trunc;
};

// H = a^+ a + gamma (a + a^+), rewritten as b^+ b - gamma^2 with b = a + gamma.
struct DisplacedModel {
    double gamma = 0.2;
    TruncationSpec trunc;
};

// Two coupled radiation modes; diagonal in the rotated frame A, B.
struct TwoModeModel {
    TruncationSpec per_mode;  // ambient dimension per mode
};

// Mean-field spins coupled to one frozen boson mode:
//   H_{V,L} = J |V| (s3V)^2 + gamma (a_L + a_L^+) s3V.
struct SpinBosonModel {
    double coupling_j = 1.0;
    double gamma = 0.5;
    SpinSystem sys;
    TruncationSpec trunc;
    std::optional<int> volume_exponent;  // links |V| = L^r in studies
};

struct SpinBosonMultiModel {
    double coupling_j = 1.0;
    std::vector<double> gammas;
    SpinSystem sys;
    TruncationSpec trunc;  // shared ambient per mode
};

using ModelSpec =
    std::variant<FreeModel, DisplacedModel, TwoModeModel, SpinBosonModel, SpinBosonMultiModel>;

std::string model_name(const ModelSpec& spec);

// ---- expression grammar -------------------------------------------------
// Hamiltonians are finite sums of (coefficient, optional spin factor,
// boson word); regularization substitutes a -> a_L inside every word.

enum class Ladder { Lower, Raise };

struct BosonWord {
    std::vector<Ladder> factors;  // leftmost factor first
};

struct HamiltonianTerm {
    cplx coeff = 1.0;
    std::optional<Matrix> spin;  // identity when absent
    BosonWord word;
};

using HamiltonianExpr = std::vector<HamiltonianTerm>;

// Product of plain ladder operators for the word (no cutoff).
FockOperator word_operator(const BosonWord& word, const TruncationSpec& spec);
// Same word with every ladder factor replaced by its cutoff version.
FockOperator regularize_word(const BosonWord& word, int L, const TruncationSpec& spec);
// Boson-only expressions (no spin factors allowed).
FockOperator regularize_expr(const HamiltonianExpr& expr, int L, const TruncationSpec& spec);
// Full expressions on the spin (x) boson space.
KronOp regularize_expr(const HamiltonianExpr& expr, int spin_dim, int L,
                       const TruncationSpec& spec);

HamiltonianExpr free_boson_expr();
HamiltonianExpr displaced_boson_expr(double gamma);
HamiltonianExpr spin_boson_expr(const SpinBosonModel& model);

// ---- regularized Hamiltonians -------------------------------------------

struct RegularizedFree {
    FockOperator substituted;  // a_L^+ a_L
    FockOperator projected;    // Q_L N Q_L
    double coincidence;        // max-abs difference; zero in exact arithmetic
};

RegularizedFree regularize(const FreeModel& model);
RegularizedFree regularize(const FreeModel& model, int L);

KronOp regularize(const SpinBosonModel& model);
KronOp regularize(const SpinBosonModel& model, int L);

// Boson-side Hamiltonian within the magnetization sector of eigenvalue m.
Matrix sector_hamiltonian(const SpinBosonModel& model, int L, double m);

// ---- displaced frame -----------------------------------------------------

struct DisplacedFrame {
    TruncationSpec spec;
    double gamma = 0.0;
    FockOperator b;      // a + gamma
    Matrix displace;     // V = exp(gamma (a - a^+)); V a V^+ = a + gamma
    double defect = 0.0; // unitarity and intertwining deviation on the guarded block

    Matrix projection_q_displaced(int L) const;
    Matrix projection_pi_displaced(int l) const;
    FockOperator b_cut(int L) const;  // Q^b_L b Q^b_L
    // Spectrum of b_L^+ b_L restricted to the range of Q^b_L, ascending.
    Eigen::VectorXd cutoff_spectrum(int L) const;
};

DisplacedFrame displaced_frame(double gamma, const TruncationSpec& spec, double tol = 1e-8);

// ---- two-mode frame --------------------------------------------------------

struct TwoModeFrame {
    TruncationSpec per_mode;
    int mode_dim = 0;
    int dim = 0;
    Matrix a1, a2;            // kron(a, 1), kron(1, a)
    Matrix rot;               // beamsplitter unitary
    Matrix mode_sum;          // A = (a1 + a2)/sqrt(2) as rot a2 rot^+
    Matrix mode_diff;         // B = (a1 - a2)/sqrt(2) as rot a1 rot^+
    Matrix coupled_h;         // a1^+a1 + a2^+a2 + a1^+a2 + a2^+a1
    Eigen::VectorXi total_quanta;

    Matrix projection_q_sum(int L) const;      // cutoff on the A-mode quanta
    Matrix cutoff_hamiltonian(int L) const;    // 2 A_L^+ A_L
    int trusted_total() const { return per_mode.ambient_dim; }
};

TwoModeFrame two_mode_frame(const TruncationSpec& per_mode);
// Max-abs of x restricted to tensor-basis states with total quanta <= cap.
double max_abs_on_quanta_block(const TwoModeFrame& frame, const Matrix& x, int cap);

// ---- multi-mode boson space ------------------------------------------------

struct MultiModeSpace {
    TruncationSpec per_mode;
    int nmodes = 0;
    int dim = 0;  // (D+1)^n
    std::vector<Matrix> lower;  // a_j on the tensor space

    Matrix regularized_lower(int mode, int L) const;  // a_{j,L}
};

MultiModeSpace multi_mode_space(int nmodes, const TruncationSpec& per_mode);
Matrix sector_hamiltonian(const SpinBosonMultiModel& model, const MultiModeSpace& space,
                          int L, double m);

}  // namespace fockcut

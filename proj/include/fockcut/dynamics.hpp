#pragma once

#include "fockcut/models.hpp"
#include "fockcut/seminorms.hpp"

namespace fockcut {

enum class EvolveMethod { Oracle, Series, ClosedForm, Sectored };

struct EvolutionResult {
    FockOperator op;
    double t = 0.0;
    EvolveMethod method = EvolveMethod::Oracle;
    int cutoff = -1;
    int series_terms = 0;
    double remainder_bound = 0.0;
    double unitarity_defect = 0.0;
};

// Heisenberg conjugation e^{iHt} X e^{-iHt} through a dense Hermitian
// eigendecomposition; the reference every closed form is checked against.
EvolutionResult evolve_oracle(const FockOperator& h, const FockOperator& x, double t,
                              double herm_tol = 1e-10);
Matrix evolve_oracle_dense(const Matrix& h, const Matrix& x, double t,
                           double herm_tol = 1e-10);
Matrix unitary_of(const Matrix& h, double t, double herm_tol = 1e-10);

// Iterated commutator [H, X]_m with trusted-region bookkeeping; throws
// TrustedRegionError naming the depth at which exactness ran out.
FockOperator multiple_commutator(const FockOperator& h, const FockOperator& x, int m);

// Partial sum sum_{m<=M} (it)^m/m! [H, X]_m with the crude remainder bound
// sum_{m>M} |t|^m (2|H|)^m |X| / m! <= tol.
EvolutionResult evolve_series(const FockOperator& h, const FockOperator& x, double t,
                              double tol, int max_terms = 400);

// Phase factor of the free cutoff evolution: 1 - Q_L + e^{itL} Pi_L +
// e^{-it} Q_{L-1}. Diagonal, commutes with every Pi_l, norm 1 (<= 3).
FockOperator free_phase_factor(int L, double t, const TruncationSpec& spec);
// Closed form of the free cutoff evolution of a: free_phase_factor * a.
EvolutionResult free_evolution_closed_form(int L, double t, const TruncationSpec& spec);

// ---- spin-boson dynamics ---------------------------------------------------

// Propagators of the sector-blocked evolution: within the magnetization
// sector of eigenvalue m the Hamiltonian acts as
// J|V| m^2 + gamma m (a_L + a_L^+) on the boson factor alone.
struct SectorPropagators {
    std::vector<MagnetizationSector> sectors;
    std::vector<Matrix> forward;  // e^{i h_m t}
    double t = 0.0;
    int cutoff = -1;
};

SectorPropagators sector_propagators(const SpinBosonModel& model, int L, double t);

// Conjugation U X U^+ with U assembled sector by sector; equals the dense
// full-space oracle wherever both are affordable.
KronOp evolve_spin_boson_sectored(const SpinBosonModel& model, const KronOp& x, int L,
                                  double t);
// Interaction part only (the free spin term dropped): the beta evolution.
KronOp evolve_spin_boson_interaction(const SpinBosonModel& model, const KronOp& x, int L,
                                     double t);
// Dense variant for cross-checks at small dimensions.
Matrix evolve_spin_boson_dense(const SpinBosonModel& model, const Matrix& x, int L, double t);
Matrix spin_boson_unitary_dense(const SpinBosonModel& model, int L, double t);

// Evolution generated by J|W|(s3W)^2 + gamma (a_L + a_L^+) s3W, where W is
// the sub-lattice of the first active_sites sites of the embedding system.
// Lets evolutions at different volumes be compared on one spin space.
KronOp evolve_embedded_spin_boson(const SpinSystem& big, int active_sites, double coupling_j,
                                  double gamma, const TruncationSpec& trunc, int L, double t,
                                  const KronOp& x);

// ---- spin observables -------------------------------------------------------

// Large-volume candidate for the evolved single-site Pauli operator:
//   s_a cos^2(S) - 2 eps_{3ab} s_b sin(S)cos(S) + s_3 s_a s_3 sin^2(S),
// with S = 2 J t s3V. A pure spin operator.
Matrix spin_evolution_limit_candidate(const SpinBosonModel& model, Axis axis, int site,
                                      double t);

// Finite-volume product form: the same trig combination with each Pauli
// factor replaced by its interaction-picture evolution.
KronOp spin_evolution_product_form(const SpinBosonModel& model, Axis axis, int site, int L,
                                   double t);

struct SpinClosedFormResult {
    Matrix candidate;          // limit candidate on the spin factor
    double residual_limit;     // combined-seminorm distance, limit candidate
    double residual_product;   // combined-seminorm distance, product form
};

SpinClosedFormResult spin_closed_form(const SpinBosonModel& model, Axis axis, int site,
                                      int L, double t, const DecayFunction& f, int k,
                                      const RelevantState& psi);

// ---- multi-mode --------------------------------------------------------------

KronOp evolve_spin_boson_multi(const SpinBosonMultiModel& model, const MultiModeSpace& space,
                               const KronOp& x, int L, double t);

}  // namespace fockcut

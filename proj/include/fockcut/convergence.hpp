#pragma once

#include <memory>

#include "fockcut/dynamics.hpp"
#include "fockcut/report.hpp"

namespace fockcut {

// ---- analytic bounds --------------------------------------------------------

// 2 sum_{s=M+1}^{L} f(s-1) s^{k+1/2}; dominates the free-model gap between
// cutoffs M < L. Empty range (M == L) gives zero.
double free_cauchy_bound(const DecayFunction& f, int k, int M, int L);

// (2/|V|)^l for the iterated commutator of the mean magnetization with a
// single-site Pauli operator; l = 0 gives 1.
double mean_spin_commutator_bound(int volume, int l);

// c_k (exp(|2 t gamma| (2^k + 1)(L+1)^{3/2} / |V|) - 1) with
// c_k = sum_{l>=1} f(l) l^k; dominates the interaction-picture tail of the
// evolved Pauli operator.
double interaction_power_bound(const DecayFunction& f, int k, int L, int volume, double t,
                               double gamma);

// c_k ((2^k+1)(L+1)^{3/2})^l; dominates |f(M)(a_L+a_L^+)^l M^k|.
double interaction_power_term_bound(const DecayFunction& f, int k, int L, int l);

// Measurable surrogate for the cutoff envelope of the iterated interaction
// commutators: max_{2<=n<=nmax} |[a_L+a_L^+, a]_n|^{f,k} / (6 * 4^{n-2}),
// in the shifted (M) weighting.
double commutator_seminorm_envelope(const TruncationSpec& spec, int L, const DecayFunction& f,
                                    int k, int nmax = 5);

// ---- measured quantities -----------------------------------------------------

enum class GapRoute { ClosedForm, Oracle };

struct GapValue {
    double sum_form = 0.0;     // summed seminorm over the trusted block
    double sum_tail = 0.0;     // certified omitted-tail bound
    double opnorm_form = 0.0;  // operator-norm seminorm
    double upper() const { return sum_form + sum_tail; }
};

// Seminorm distance between the free cutoff evolutions of a^power at two
// cutoffs, on a shared ambient space of max(L,M) + guard.
GapValue free_cauchy_gap(const TruncationSpec& base, int L, int M, double t,
                         const DecayFunction& f, int k, GapRoute route, int power = 1);

// Combined-seminorm distance between spin-boson evolutions of 1 (x) a at two
// (volume, cutoff) pairs, evolved on a shared embedding lattice.
double spin_boson_gap(const SpinBosonModel& base, int big_sites, int v1, int l1, int v2,
                      int l2, double t, const DecayFunction& f, int k,
                      const RelevantState& psi);
KronOp evolve_embedded_lower(const SpinBosonModel& base, int big_sites, int volume, int L,
                             double t);

struct TailSeminorm {
    double measured = 0.0;  // distance of the evolution from its first-order form
    double envelope = 0.0;  // (3/2) e^{|4 t gamma|} * commutator envelope
};

// Combined seminorm of alpha_{V,L}^t(a) minus its zeroth+first order
// interaction expansion a + i gamma t s3V (x) [a_L+a_L^+, a]_1.
TailSeminorm interaction_tail_seminorm(const SpinBosonModel& model, int L, double t,
                                       const DecayFunction& f, int k,
                                       const RelevantState& psi);

// Combined seminorm of the interaction-picture deviation
// beta_{V,L}^t(s_alpha^i) - s_alpha^i, paired with its analytic bound.
struct BetaTail {
    double measured = 0.0;
    double bound = 0.0;
};
BetaTail beta_tail(const SpinBosonModel& model, Axis axis, int site, int L, double t,
                   const DecayFunction& f, int k, const RelevantState& psi);

// ---- study driver -------------------------------------------------------------

struct StudyOptions {
    ModelSpec model;
    std::vector<int> schedule;  // ascending cutoffs
    std::vector<double> t_grid;
    std::shared_ptr<const DecayFunction> decay;
    std::vector<int> k_list;
    std::string observable = "a";
    int jobs = 1;
    unsigned long long seed = 12345;
};

struct ConvergenceRow {
    std::string kind;
    long long L = -1;
    long long M = -1;
    long long volume = -1;
    double t = 0.0;
    std::string f_name;
    long long k = -1;
    double measured = 0.0;
    double measured_opnorm = 0.0;
    bool has_bound = false;
    double bound = 0.0;
    bool ok = true;
    std::string note;
};

struct ConvergenceReport {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<ConvergenceRow> rows;

    bool all_ok() const;
    Report to_report() const;
};

ConvergenceReport run_convergence_study(const StudyOptions& options);

// Deterministic worker pool over [0, count); results land by index.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

}  // namespace fockcut

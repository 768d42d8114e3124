#include "fockcut/dynamics.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace fockcut {

namespace {

struct EigenSystem {
    Eigen::VectorXd values;
    Matrix vectors;
};

EigenSystem hermitian_eigensystem(const Matrix& h, double herm_tol) {
    const double defect = hermiticity_defect(h);
    if (defect > herm_tol)
        throw NotHermitianError("Hamiltonian deviates from Hermitian by " +
                                std::to_string(defect));
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    if (es.info() != Eigen::Success) throw Error("hermitian eigensolve failed");
    return EigenSystem{es.eigenvalues(), es.eigenvectors()};
}

Matrix unitary_from(const EigenSystem& sys, double t) {
    Vector phases(sys.values.size());
    for (long i = 0; i < phases.size(); ++i) phases(i) = std::exp(cplx(0, sys.values(i) * t));
    return sys.vectors * phases.asDiagonal() * sys.vectors.adjoint();
}

bool is_declared_diagonal(const FockOperator& op) {
    return op.shape().band_up <= 0 && op.shape().band_lo <= 0;
}

}  // namespace

Matrix unitary_of(const Matrix& h, double t, double herm_tol) {
    return unitary_from(hermitian_eigensystem(h, herm_tol), t);
}

Matrix evolve_oracle_dense(const Matrix& h, const Matrix& x, double t, double herm_tol) {
    if (h.rows() != x.rows()) throw DimensionError("evolve: dimensions differ");
    if (t == 0.0) return x;
    const Matrix u = unitary_of(h, t, herm_tol);
    return u * x * u.adjoint();
}

EvolutionResult evolve_oracle(const FockOperator& h, const FockOperator& x, double t,
                              double herm_tol) {
    if (h.dim() != x.dim()) throw DimensionError("evolve: ambient dimensions differ");
    if (t == 0.0)
        return EvolutionResult{x, 0.0, EvolveMethod::Oracle, -1, 0, 0.0, 0.0};

    const EigenSystem sys = hermitian_eigensystem(h.entries(), herm_tol);
    const Matrix u = unitary_from(sys, t);
    const double unit_defect =
        max_abs(u.adjoint() * u - Matrix::Identity(h.dim(), h.dim()));
    if (unit_defect > herm_tol)
        throw Error("evolution unitary defect " + std::to_string(unit_defect));
    Matrix evolved = u * x.entries() * u.adjoint();

    // Exactness transfer: a diagonal generator conjugates entries by pure
    // phases; a generator supported inside the trusted block only stirs
    // indices below it.
    int trusted = -1;
    OperatorShape shape = x.shape();
    GrowthProfile growth = x.growth();
    if (is_declared_diagonal(h)) {
        trusted = std::min(h.trusted(), x.trusted());
    } else if (h.shape().support && *h.shape().support <= std::min(h.trusted(), x.trusted())) {
        const int block = *h.shape().support;
        trusted = x.trusted();
        shape.band_up = std::max(x.shape().band_up, 0) + block;
        shape.band_lo = std::max(x.shape().band_lo, 0) + block;
        if (x.shape().support)
            shape.support = std::max(*x.shape().support, block + x.shape().reach());
        if (growth.known) {
            growth.offset += block + x.shape().reach();
            growth.scale *= 2.0 * x.shape().reach() + 1.0;
        }
    } else {
        growth.known = false;
    }

    FockOperator op(std::move(evolved), trusted, "alpha_t(" + x.label() + ")", shape, growth);
    return EvolutionResult{std::move(op), t, EvolveMethod::Oracle, -1, 0, 0.0, unit_defect};
}

FockOperator multiple_commutator(const FockOperator& h, const FockOperator& x, int m) {
    if (m < 0) throw RangeError("multiple_commutator: negative depth");
    FockOperator cur = x;
    for (int depth = 1; depth <= m; ++depth) {
        cur = commutator(h, cur);
        if (cur.trusted() < 0)
            throw TrustedRegionError("trusted region exhausted at commutator depth " +
                                     std::to_string(depth));
    }
    return cur;
}

EvolutionResult evolve_series(const FockOperator& h, const FockOperator& x, double t,
                              double tol, int max_terms) {
    if (h.dim() != x.dim()) throw DimensionError("evolve: ambient dimensions differ");
    if (t == 0.0)
        return EvolutionResult{x, 0.0, EvolveMethod::Series, -1, 0, 0.0, 0.0};

    const double hnorm = spectral_norm(h.entries());
    const double xnorm = spectral_norm(x.entries());
    const double rate = 2.0 * std::abs(t) * hnorm;

    FockOperator sum = x;
    FockOperator bracket = x;
    cplx factor(1.0, 0.0);
    double term_bound = xnorm;
    int m = 0;
    double remainder = 0.0;
    bool certified = false;
    while (m < max_terms) {
        ++m;
        bracket = commutator(h, bracket);
        if (bracket.trusted() < 0)
            throw TrustedRegionError(
                "series remainder not certifiable: trusted region exhausted at depth " +
                std::to_string(m));
        factor *= cplx(0, t) / double(m);
        sum = add(sum, scale(factor, bracket));
        term_bound *= rate / double(m);
        // geometric majorant once the term ratio rate/(m+1) falls below 1
        if (rate < double(m + 1)) {
            const double ratio = rate / double(m + 1);
            remainder = term_bound * ratio / (1.0 - ratio);
            if (remainder <= tol) {
                certified = true;
                break;
            }
        }
    }
    if (!certified)
        throw Error("series did not certify remainder <= " + std::to_string(tol) + " within " +
                    std::to_string(max_terms) + " terms");
    return EvolutionResult{sum.with_label("series_t(" + x.label() + ")"),
                           t, EvolveMethod::Series, -1, m, remainder, 0.0};
}

FockOperator free_phase_factor(int L, double t, const TruncationSpec& spec) {
    spec.validate();
    if (L < 0 || L + 2 > spec.ambient_dim)
        throw RangeError("free closed form needs L + 2 <= ambient_dim");
    Matrix m = Matrix::Identity(spec.dim(), spec.dim());
    for (int l = 0; l <= L - 1; ++l) m(l, l) = std::exp(cplx(0, -t));
    m(L, L) = std::exp(cplx(0, t * L));
    return FockOperator(std::move(m), spec.ambient_dim, "F_" + std::to_string(L),
                        OperatorShape{0, 0, std::nullopt}, GrowthProfile{true, 1.0, 0, 0});
}

EvolutionResult free_evolution_closed_form(int L, double t, const TruncationSpec& spec) {
    FockOperator op = compose(free_phase_factor(L, t, spec), annihilation(spec))
                          .with_label("alpha_" + std::to_string(L) + "(a)");
    return EvolutionResult{std::move(op), t, EvolveMethod::ClosedForm, L, 0, 0.0, 0.0};
}

// ---- spin-boson -------------------------------------------------------------

SectorPropagators sector_propagators(const SpinBosonModel& model, int L, double t) {
    model.sys.validate();
    model.trunc.validate();
    SectorPropagators props;
    props.sectors = sector_decompose(model.sys);
    props.t = t;
    props.cutoff = L;
    props.forward.reserve(props.sectors.size());
    for (const auto& sector : props.sectors) {
        const Matrix h = sector_hamiltonian(model, L, sector.m);
        props.forward.push_back(unitary_of(h, t));
    }
    return props;
}

namespace {

Matrix masked_block(const Matrix& spin, const std::vector<int>& rows,
                    const std::vector<int>& cols, int dim) {
    Matrix out = Matrix::Zero(dim, dim);
    double mass = 0.0;
    for (int r : rows)
        for (int c : cols) {
            out(r, c) = spin(r, c);
            mass = std::max(mass, std::abs(spin(r, c)));
        }
    if (mass == 0.0) return Matrix();
    return out;
}

KronOp sectored_conjugate(const SectorPropagators& props, const KronOp& x) {
    KronOp out(x.spin_dim, x.boson_dim);
    const size_t ns = props.sectors.size();
    for (const auto& term : x.terms) {
        for (size_t p = 0; p < ns; ++p) {
            for (size_t q = 0; q < ns; ++q) {
                Matrix blk = masked_block(term.spin, props.sectors[p].indices,
                                          props.sectors[q].indices, x.spin_dim);
                if (blk.size() == 0) continue;
                out.push(std::move(blk),
                         props.forward[p] * term.boson * props.forward[q].adjoint());
            }
        }
    }
    return out.pruned();
}

}  // namespace

KronOp evolve_spin_boson_sectored(const SpinBosonModel& model, const KronOp& x, int L,
                                  double t) {
    if (x.spin_dim != model.sys.dim() || x.boson_dim != model.trunc.dim())
        throw DimensionError("sectored evolution: tensor dimensions differ");
    if (t == 0.0) return x;
    return sectored_conjugate(sector_propagators(model, L, t), x);
}

KronOp evolve_embedded_spin_boson(const SpinSystem& big, int active_sites, double coupling_j,
                                  double gamma, const TruncationSpec& trunc, int L, double t,
                                  const KronOp& x) {
    if (x.spin_dim != big.dim() || x.boson_dim != trunc.dim())
        throw DimensionError("embedded evolution: tensor dimensions differ");
    if (t == 0.0) return x;
    SectorPropagators props;
    props.sectors = sector_decompose_active(big, active_sites);
    props.t = t;
    props.cutoff = L;
    SpinBosonModel slab;
    slab.coupling_j = coupling_j;
    slab.gamma = gamma;
    slab.sys = SpinSystem{active_sites};
    slab.trunc = trunc;
    for (const auto& sector : props.sectors)
        props.forward.push_back(unitary_of(sector_hamiltonian(slab, L, sector.m), t));
    return sectored_conjugate(props, x);
}

KronOp evolve_spin_boson_interaction(const SpinBosonModel& model, const KronOp& x, int L,
                                     double t) {
    SpinBosonModel frozen = model;
    frozen.coupling_j = 0.0;
    return evolve_spin_boson_sectored(frozen, x, L, t);
}

Matrix spin_boson_unitary_dense(const SpinBosonModel& model, int L, double t) {
    const SectorPropagators props = sector_propagators(model, L, t);
    const int sdim = model.sys.dim();
    const int bdim = model.trunc.dim();
    Matrix u = Matrix::Zero(static_cast<long>(sdim) * bdim, static_cast<long>(sdim) * bdim);
    for (size_t p = 0; p < props.sectors.size(); ++p)
        for (int idx : props.sectors[p].indices)
            u.block(static_cast<long>(idx) * bdim, static_cast<long>(idx) * bdim, bdim, bdim) =
                props.forward[p];
    return u;
}

Matrix evolve_spin_boson_dense(const SpinBosonModel& model, const Matrix& x, int L, double t) {
    const Matrix u = spin_boson_unitary_dense(model, L, t);
    return u * x * u.adjoint();
}

// ---- spin observables ---------------------------------------------------------

namespace {

int levi_civita_3(Axis alpha, Axis beta) {
    // epsilon_{z alpha beta}
    if (alpha == Axis::X && beta == Axis::Y) return 1;
    if (alpha == Axis::Y && beta == Axis::X) return -1;
    return 0;
}

Axis partner_axis(Axis alpha) {
    return alpha == Axis::X ? Axis::Y : Axis::X;
}

}  // namespace

Matrix spin_evolution_limit_candidate(const SpinBosonModel& model, Axis axis, int site,
                                      double t) {
    const SpinSystem& sys = model.sys;
    const Matrix sa = site_pauli(axis, site, sys);
    if (axis == Axis::Z) return sa;

    const Eigen::VectorXd s3v = mean_magnetization_diagonal(sys);
    const int dim = sys.dim();
    Eigen::VectorXd cosv(dim), sinv(dim);
    for (int b = 0; b < dim; ++b) {
        const double angle = 2.0 * model.coupling_j * t * s3v(b);
        cosv(b) = std::cos(angle);
        sinv(b) = std::sin(angle);
    }
    const Matrix cs = cosv.cast<cplx>().asDiagonal();
    const Matrix sn = sinv.cast<cplx>().asDiagonal();

    const Axis beta = partner_axis(axis);
    const Matrix sb = site_pauli(beta, site, sys);
    const Matrix s3 = site_pauli(Axis::Z, site, sys);
    const double eps = levi_civita_3(axis, beta);

    return sa * cs * cs - 2.0 * eps * sb * sn * cs + s3 * sa * s3 * sn * sn;
}

KronOp spin_evolution_product_form(const SpinBosonModel& model, Axis axis, int site, int L,
                                   double t) {
    const SpinSystem& sys = model.sys;
    const int bdim = model.trunc.dim();
    const Matrix sa = site_pauli(axis, site, sys);
    if (axis == Axis::Z) return KronOp::spin_only(sa, bdim);

    const Eigen::VectorXd s3v = mean_magnetization_diagonal(sys);
    Eigen::VectorXd cosv(sys.dim()), sinv(sys.dim());
    for (int b = 0; b < sys.dim(); ++b) {
        const double angle = 2.0 * model.coupling_j * t * s3v(b);
        cosv(b) = std::cos(angle);
        sinv(b) = std::sin(angle);
    }
    const Matrix cs = cosv.cast<cplx>().asDiagonal();
    const Matrix sn = sinv.cast<cplx>().asDiagonal();

    const Axis beta = partner_axis(axis);
    const Matrix sb = site_pauli(beta, site, sys);
    const Matrix s3 = site_pauli(Axis::Z, site, sys);
    const double eps = levi_civita_3(axis, beta);

    const KronOp beta_a =
        evolve_spin_boson_interaction(model, KronOp::spin_only(sa, bdim), L, t);
    const KronOp beta_b =
        evolve_spin_boson_interaction(model, KronOp::spin_only(sb, bdim), L, t);

    KronOp out = beta_a * KronOp::spin_only(cs * cs, bdim);
    out += cplx(-2.0 * eps, 0.0) * (beta_b * KronOp::spin_only(sn * cs, bdim));
    out += KronOp::spin_only(s3, bdim) * beta_a * KronOp::spin_only(s3 * sn * sn, bdim);
    return out.pruned();
}

SpinClosedFormResult spin_closed_form(const SpinBosonModel& model, Axis axis, int site,
                                      int L, double t, const DecayFunction& f, int k,
                                      const RelevantState& psi) {
    const int bdim = model.trunc.dim();
    const Matrix candidate = spin_evolution_limit_candidate(model, axis, site, t);
    const KronOp exact = evolve_spin_boson_sectored(
        model, KronOp::spin_only(site_pauli(axis, site, model.sys), bdim), L, t);

    const KronOp diff_limit = exact - KronOp::spin_only(candidate, bdim);
    const KronOp product = spin_evolution_product_form(model, axis, site, L, t);
    const KronOp diff_product = exact - product;

    return SpinClosedFormResult{
        candidate,
        combined_seminorm(diff_limit, f, k, psi),
        combined_seminorm(diff_product, f, k, psi),
    };
}

// ---- multi-mode -----------------------------------------------------------------

KronOp evolve_spin_boson_multi(const SpinBosonMultiModel& model, const MultiModeSpace& space,
                               const KronOp& x, int L, double t) {
    model.sys.validate();
    if (static_cast<int>(model.gammas.size()) != space.nmodes)
        throw ConfigError("multi-mode model: one gamma per mode required");
    if (x.spin_dim != model.sys.dim() || x.boson_dim != space.dim)
        throw DimensionError("multi-mode evolution: tensor dimensions differ");
    if (t == 0.0) return x;

    const auto sectors = sector_decompose(model.sys);
    std::vector<Matrix> forward;
    forward.reserve(sectors.size());
    for (const auto& sector : sectors)
        forward.push_back(unitary_of(sector_hamiltonian(model, space, L, sector.m), t));

    KronOp out(x.spin_dim, x.boson_dim);
    for (const auto& term : x.terms) {
        for (size_t p = 0; p < sectors.size(); ++p) {
            for (size_t q = 0; q < sectors.size(); ++q) {
                Matrix blk =
                    masked_block(term.spin, sectors[p].indices, sectors[q].indices, x.spin_dim);
                if (blk.size() == 0) continue;
                out.push(std::move(blk), forward[p] * term.boson * forward[q].adjoint());
            }
        }
    }
    return out.pruned();
}

}  // namespace fockcut

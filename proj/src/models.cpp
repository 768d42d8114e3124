#include "fockcut/models.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace fockcut {

std::string model_name(const ModelSpec& spec) {
    return std::visit(
        [](const auto& m) -> std::string {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, FreeModel>) return "free";
            else if constexpr (std::is_same_v<T, DisplacedModel>) return "displaced";
            else if constexpr (std::is_same_v<T, TwoModeModel>) return "two_mode";
            else if constexpr (std::is_same_v<T, SpinBosonModel>) return "spin_boson";
            else return "spin_boson_multi";
        },
        spec);
}

FockOperator word_operator(const BosonWord& word, const TruncationSpec& spec) {
    FockOperator out = identity_operator(spec);
    const FockOperator a = annihilation(spec);
    const FockOperator ad = creation(spec);
    for (Ladder l : word.factors) out = compose(out, l == Ladder::Lower ? a : ad);
    return out;
}

FockOperator regularize_word(const BosonWord& word, int L, const TruncationSpec& spec) {
    FockOperator out = identity_operator(spec);
    const FockOperator a_l = regularized_annihilation(L, spec);
    const FockOperator ad_l = regularized_creation(L, spec);
    for (Ladder l : word.factors) out = compose(out, l == Ladder::Lower ? a_l : ad_l);
    return out;
}

FockOperator regularize_expr(const HamiltonianExpr& expr, int L, const TruncationSpec& spec) {
    FockOperator out = zero_operator(spec);
    for (const auto& term : expr) {
        if (term.spin)
            throw DimensionError("boson-only regularization given a spin factor");
        out = add(out, scale(term.coeff, regularize_word(term.word, L, spec)));
    }
    return out;
}

KronOp regularize_expr(const HamiltonianExpr& expr, int spin_dim, int L,
                       const TruncationSpec& spec) {
    KronOp out(spin_dim, spec.dim());
    for (const auto& term : expr) {
        Matrix spin = term.spin ? *term.spin : Matrix::Identity(spin_dim, spin_dim);
        out.push(term.coeff * spin, regularize_word(term.word, L, spec).entries());
    }
    return out;
}

HamiltonianExpr free_boson_expr() {
    return {HamiltonianTerm{1.0, std::nullopt, BosonWord{{Ladder::Raise, Ladder::Lower}}}};
}

HamiltonianExpr displaced_boson_expr(double gamma) {
    HamiltonianExpr expr = free_boson_expr();
    expr.push_back(HamiltonianTerm{gamma, std::nullopt, BosonWord{{Ladder::Lower}}});
    expr.push_back(HamiltonianTerm{gamma, std::nullopt, BosonWord{{Ladder::Raise}}});
    return expr;
}

HamiltonianExpr spin_boson_expr(const SpinBosonModel& model) {
    const Matrix s3v = mean_magnetization(model.sys);
    const double vol = model.sys.nsites;
    HamiltonianExpr expr;
    expr.push_back(HamiltonianTerm{model.coupling_j * vol, s3v * s3v, BosonWord{}});
    expr.push_back(HamiltonianTerm{model.gamma, s3v, BosonWord{{Ladder::Lower}}});
    expr.push_back(HamiltonianTerm{model.gamma, s3v, BosonWord{{Ladder::Raise}}});
    return expr;
}

RegularizedFree regularize(const FreeModel& model) {
    return regularize(model, model.trunc.cutoff);
}

RegularizedFree regularize(const FreeModel& model, int L) {
    const TruncationSpec& spec = model.trunc;
    FockOperator substituted =
        regularize_expr(free_boson_expr(), L, spec).with_label("H_" + std::to_string(L));
    const FockOperator q = projection_q(L, spec);
    FockOperator projected = compose(compose(q, number_operator(spec)), q);
    const double coincidence = max_abs_diff(substituted, projected);
    return RegularizedFree{std::move(substituted), std::move(projected), coincidence};
}

KronOp regularize(const SpinBosonModel& model) {
    return regularize(model, model.trunc.cutoff);
}

KronOp regularize(const SpinBosonModel& model, int L) {
    return regularize_expr(spin_boson_expr(model), model.sys.dim(), L, model.trunc);
}

Matrix sector_hamiltonian(const SpinBosonModel& model, int L, double m) {
    const TruncationSpec& spec = model.trunc;
    const FockOperator a_l = regularized_annihilation(L, spec);
    Matrix h = model.gamma * m * (a_l.entries() + a_l.entries().adjoint().eval());
    h += model.coupling_j * model.sys.nsites * m * m *
         Matrix::Identity(spec.dim(), spec.dim());
    return h;
}

// ---- displaced frame -------------------------------------------------------

namespace {

// exp(K) for skew-Hermitian K via the Hermitian eigensolve of -iK.
Matrix exp_skew(const Matrix& k) {
    const Matrix herm = cplx(0, -1) * k;
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
    if (es.info() != Eigen::Success) throw Error("eigensolve failed");
    const Eigen::VectorXd lam = es.eigenvalues();
    Vector phases(lam.size());
    for (long i = 0; i < lam.size(); ++i) phases(i) = std::exp(cplx(0, lam(i)));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

DisplacedFrame displaced_frame(double gamma, const TruncationSpec& spec, double tol) {
    spec.validate();
    DisplacedFrame frame;
    frame.spec = spec;
    frame.gamma = gamma;

    const FockOperator a = annihilation(spec);
    frame.b = add(a, scale(gamma, identity_operator(spec))).with_label("b");

    const Matrix gen = gamma * (a.entries() - a.entries().adjoint().eval());
    frame.displace = exp_skew(gen);

    const double unit = max_abs(frame.displace.adjoint() * frame.displace -
                                Matrix::Identity(spec.dim(), spec.dim()));
    // V^+ b V should reproduce a away from the ambient edge.
    const Matrix back = frame.displace.adjoint() * frame.b.entries() * frame.displace;
    const int block = std::max(spec.ambient_dim - spec.guard, 0);
    const double inter =
        max_abs((back - a.entries()).topLeftCorner(block + 1, block + 1));
    frame.defect = std::max(unit, inter);
    if (frame.defect > tol)
        throw RangeError("ambient dimension too small for displacement gamma=" +
                         std::to_string(gamma) + " (defect " + std::to_string(frame.defect) + ")");
    return frame;
}

Matrix DisplacedFrame::projection_q_displaced(int L) const {
    if (L < 0 || L > spec.ambient_dim) throw RangeError("displaced cutoff beyond ambient");
    const Matrix sub = displace.leftCols(L + 1);
    return sub * sub.adjoint();
}

Matrix DisplacedFrame::projection_pi_displaced(int l) const {
    if (l < 0 || l > spec.ambient_dim) throw RangeError("displaced level beyond ambient");
    const Vector col = displace.col(l);
    return col * col.adjoint();
}

FockOperator DisplacedFrame::b_cut(int L) const {
    const Matrix q = projection_q_displaced(L);
    Matrix m = q * b.entries() * q;
    OperatorShape shape;
    shape.band_up = spec.ambient_dim;
    shape.band_lo = spec.ambient_dim;
    shape.support = spec.ambient_dim;  // numerically localized near the displaced levels
    return wrap_matrix(std::move(m), spec.ambient_dim, "b_" + std::to_string(L), shape,
                       GrowthProfile{true, 1.0 + std::abs(gamma), 1, 0});
}

Eigen::VectorXd DisplacedFrame::cutoff_spectrum(int L) const {
    const Matrix sub = displace.leftCols(L + 1);
    const Matrix bl = b_cut(L).entries();
    const Matrix restricted = sub.adjoint() * (bl.adjoint() * bl) * sub;
    Eigen::SelfAdjointEigenSolver<Matrix> es(restricted);
    if (es.info() != Eigen::Success) throw Error("eigensolve failed");
    return es.eigenvalues();
}

// ---- two-mode frame ---------------------------------------------------------

TwoModeFrame two_mode_frame(const TruncationSpec& per_mode) {
    per_mode.validate();
    TwoModeFrame f;
    f.per_mode = per_mode;
    f.mode_dim = per_mode.dim();
    f.dim = f.mode_dim * f.mode_dim;

    const Matrix a = annihilation(per_mode).entries();
    const Matrix id = Matrix::Identity(f.mode_dim, f.mode_dim);
    f.a1 = kronecker(a, id);
    f.a2 = kronecker(id, a);

    // Quanta-preserving rotation with rot a1 rot^+ = (a1 - a2)/sqrt(2) and
    // rot a2 rot^+ = (a1 + a2)/sqrt(2).
    const Matrix gen = (f.a1.adjoint() * f.a2 - f.a1 * f.a2.adjoint()).eval();
    const Matrix herm = cplx(0, -1) * gen;
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
    if (es.info() != Eigen::Success) throw Error("eigensolve failed");
    const double theta = M_PI / 4.0;
    Vector phases(es.eigenvalues().size());
    for (long i = 0; i < phases.size(); ++i)
        phases(i) = std::exp(cplx(0, theta * es.eigenvalues()(i)));
    f.rot = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();

    f.mode_diff = f.rot * f.a1 * f.rot.adjoint();
    f.mode_sum = f.rot * f.a2 * f.rot.adjoint();
    f.coupled_h = (f.a1.adjoint() * f.a1 + f.a2.adjoint() * f.a2 +
                   f.a1.adjoint() * f.a2 + f.a2.adjoint() * f.a1)
                      .eval();

    f.total_quanta.resize(f.dim);
    for (int n1 = 0; n1 < f.mode_dim; ++n1)
        for (int n2 = 0; n2 < f.mode_dim; ++n2)
            f.total_quanta(n1 * f.mode_dim + n2) = n1 + n2;
    return f;
}

Matrix TwoModeFrame::projection_q_sum(int L) const {
    if (L < 0 || L > per_mode.ambient_dim) throw RangeError("two-mode cutoff beyond ambient");
    Matrix q2 = Matrix::Zero(mode_dim, mode_dim);
    for (int l = 0; l <= L; ++l) q2(l, l) = 1.0;
    const Matrix id = Matrix::Identity(mode_dim, mode_dim);
    return rot * kronecker(id, q2) * rot.adjoint();
}

Matrix TwoModeFrame::cutoff_hamiltonian(int L) const {
    const Matrix q = projection_q_sum(L);
    const Matrix a_l = q * mode_sum * q;
    return 2.0 * (a_l.adjoint() * a_l).eval();
}

double max_abs_on_quanta_block(const TwoModeFrame& frame, const Matrix& x, int cap) {
    double worst = 0.0;
    for (int r = 0; r < frame.dim; ++r) {
        if (frame.total_quanta(r) > cap) continue;
        for (int c = 0; c < frame.dim; ++c) {
            if (frame.total_quanta(c) > cap) continue;
            worst = std::max(worst, std::abs(x(r, c)));
        }
    }
    return worst;
}

// ---- multi-mode -------------------------------------------------------------

MultiModeSpace multi_mode_space(int nmodes, const TruncationSpec& per_mode) {
    per_mode.validate();
    if (nmodes < 1) throw ConfigError("multi-mode space needs at least one mode");
    MultiModeSpace space;
    space.per_mode = per_mode;
    space.nmodes = nmodes;
    const int d = per_mode.dim();
    space.dim = 1;
    for (int i = 0; i < nmodes; ++i) space.dim *= d;
    if (space.dim > 1 << 16) throw ConfigError("multi-mode tensor space too large");

    const Matrix a = annihilation(per_mode).entries();
    for (int mode = 0; mode < nmodes; ++mode) {
        Matrix op = Matrix::Identity(1, 1);
        for (int j = 0; j < nmodes; ++j)
            op = kronecker(op, j == mode ? a : Matrix::Identity(d, d)).eval();
        space.lower.push_back(std::move(op));
    }
    return space;
}

Matrix MultiModeSpace::regularized_lower(int mode, int L) const {
    if (mode < 0 || mode >= nmodes) throw RangeError("unknown mode");
    const Matrix q1 = projection_q(L, per_mode).entries();
    Matrix q = Matrix::Identity(1, 1);
    for (int j = 0; j < nmodes; ++j)
        q = kronecker(q, j == mode ? q1 : Matrix::Identity(per_mode.dim(), per_mode.dim()))
                .eval();
    return q * lower[mode] * q;
}

Matrix sector_hamiltonian(const SpinBosonMultiModel& model, const MultiModeSpace& space,
                          int L, double m) {
    Matrix h = model.coupling_j * model.sys.nsites * m * m *
               Matrix::Identity(space.dim, space.dim);
    for (int mode = 0; mode < space.nmodes; ++mode) {
        const Matrix al = space.regularized_lower(mode, L);
        h += model.gammas.at(mode) * m * (al + al.adjoint().eval());
    }
    return h;
}

}  // namespace fockcut

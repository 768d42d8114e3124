#include "fockcut/fock.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace fockcut {

void TruncationSpec::validate() const {
    if (ambient_dim < 0) throw ConfigError("ambient_dim must be nonnegative");
    if (cutoff < 0) throw ConfigError("cutoff must be nonnegative");
    if (guard < 1) throw ConfigError("guard must be at least 1");
    if (cutoff + guard > ambient_dim)
        throw ConfigError("cutoff + guard exceeds ambient dimension");
}

TruncationSpec TruncationSpec::with_cutoff(int L) const {
    TruncationSpec out = *this;
    out.cutoff = L;
    return out;
}

double spectral_norm(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    Eigen::BDCSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

double max_abs(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Matrix& m) {
    return max_abs(m - m.adjoint().eval());
}

double GrowthProfile::bound(int r, int c) const {
    const double base = std::max(r, c) + degree + offset;
    return scale * std::pow(std::max(base, 1.0), 0.5 * degree);
}

namespace {

std::string join_label(const std::string& a, const char* op, const std::string& b) {
    if (a.size() + b.size() > 48) return "expr";
    return "(" + a + op + b + ")";
}

int clamp_trusted(long long t, int ambient) {
    return static_cast<int>(std::clamp<long long>(t, -1, ambient));
}

}  // namespace

FockOperator::FockOperator(Matrix entries, int trusted, std::string label,
                           OperatorShape shape, GrowthProfile growth)
    : entries_(std::move(entries)),
      trusted_(trusted),
      label_(std::move(label)),
      shape_(shape),
      growth_(growth) {
    if (entries_.rows() != entries_.cols())
        throw DimensionError("operator matrix must be square");
    trusted_ = clamp_trusted(trusted_, ambient());
}

FockOperator FockOperator::adjoint() const {
    OperatorShape s = shape_;
    std::swap(s.band_up, s.band_lo);
    return FockOperator(entries_.adjoint(), trusted_, label_ + "^+", s, growth_);
}

FockOperator FockOperator::with_label(std::string label) const {
    FockOperator out = *this;
    out.label_ = std::move(label);
    return out;
}

FockOperator FockOperator::with_trusted(int trusted) const {
    FockOperator out = *this;
    out.trusted_ = clamp_trusted(trusted, ambient());
    return out;
}

int FockOperator::numeric_support() const {
    int supp = -1;
    for (int c = 0; c < dim(); ++c)
        for (int r = 0; r < dim(); ++r)
            if (entries_(r, c) != cplx(0.0, 0.0)) supp = std::max({supp, r, c});
    return supp;
}

bool FockOperator::is_hermitian(double tol) const {
    return hermiticity_defect(entries_) <= tol;
}

FockOperator annihilation(const TruncationSpec& spec) {
    spec.validate();
    Matrix m = Matrix::Zero(spec.dim(), spec.dim());
    for (int l = 1; l <= spec.ambient_dim; ++l) m(l - 1, l) = std::sqrt(double(l));
    return FockOperator(std::move(m), spec.ambient_dim, "a",
                        OperatorShape{1, -1, std::nullopt}, GrowthProfile{true, 1.0, 1, 0});
}

FockOperator creation(const TruncationSpec& spec) {
    return annihilation(spec).adjoint().with_label("a^+");
}

FockOperator number_operator(const TruncationSpec& spec) {
    spec.validate();
    Matrix m = Matrix::Zero(spec.dim(), spec.dim());
    for (int l = 0; l <= spec.ambient_dim; ++l) m(l, l) = double(l);
    return FockOperator(std::move(m), spec.ambient_dim, "N",
                        OperatorShape{0, 0, std::nullopt}, GrowthProfile{true, 1.0, 2, 0});
}

FockOperator shifted_number_operator(const TruncationSpec& spec) {
    spec.validate();
    Matrix m = Matrix::Zero(spec.dim(), spec.dim());
    for (int l = 0; l <= spec.ambient_dim; ++l) m(l, l) = double(l + 1);
    return FockOperator(std::move(m), spec.ambient_dim, "M",
                        OperatorShape{0, 0, std::nullopt}, GrowthProfile{true, 1.0, 2, 0});
}

FockOperator identity_operator(const TruncationSpec& spec) {
    spec.validate();
    return FockOperator(Matrix::Identity(spec.dim(), spec.dim()), spec.ambient_dim, "1",
                        OperatorShape{0, 0, std::nullopt}, GrowthProfile{true, 1.0, 0, 0});
}

FockOperator zero_operator(const TruncationSpec& spec) {
    spec.validate();
    return FockOperator(Matrix::Zero(spec.dim(), spec.dim()), spec.ambient_dim, "0",
                        OperatorShape{0, 0, -1}, GrowthProfile{true, 0.0, 0, 0});
}

FockOperator projection_pi(int l, const TruncationSpec& spec) {
    spec.validate();
    if (l < 0 || l > spec.ambient_dim)
        throw RangeError("projection index " + std::to_string(l) + " beyond ambient dimension " +
                         std::to_string(spec.ambient_dim));
    Matrix m = Matrix::Zero(spec.dim(), spec.dim());
    m(l, l) = 1.0;
    return FockOperator(std::move(m), spec.ambient_dim, "Pi_" + std::to_string(l),
                        OperatorShape{0, 0, l}, GrowthProfile{true, 1.0, 0, 0});
}

FockOperator projection_q(int L, const TruncationSpec& spec) {
    spec.validate();
    if (L < 0 || L > spec.ambient_dim)
        throw RangeError("cumulative projection index " + std::to_string(L) +
                         " beyond ambient dimension " + std::to_string(spec.ambient_dim));
    Matrix m = Matrix::Zero(spec.dim(), spec.dim());
    for (int l = 0; l <= L; ++l) m(l, l) = 1.0;
    return FockOperator(std::move(m), spec.ambient_dim, "Q_" + std::to_string(L),
                        OperatorShape{0, 0, L}, GrowthProfile{true, 1.0, 0, 0});
}

FockOperator regularized_annihilation(int L, const TruncationSpec& spec) {
    const FockOperator q = projection_q(L, spec);
    return compose(compose(q, annihilation(spec)), q).with_label("a_" + std::to_string(L));
}

FockOperator regularized_creation(int L, const TruncationSpec& spec) {
    return regularized_annihilation(L, spec).adjoint().with_label("a_" + std::to_string(L) + "^+");
}

FockOperator wrap_matrix(Matrix entries, int trusted, std::string label,
                         OperatorShape shape, GrowthProfile growth) {
    return FockOperator(std::move(entries), trusted, std::move(label), shape, growth);
}

FockOperator compose(const FockOperator& x, const FockOperator& y) {
    if (x.dim() != y.dim()) throw DimensionError("compose: ambient dimensions differ");
    const int ambient = x.ambient();
    const int tmin = std::min(x.trusted(), y.trusted());

    // The intermediate index in sum_k <r|X|k><k|Y|c> stays below tmin when
    // either factor has declared support below it; otherwise each factor's
    // band reach is surrendered.
    bool refined = false;
    if (x.shape().support && *x.shape().support <= tmin) refined = true;
    if (y.shape().support && *y.shape().support <= tmin) refined = true;
    const int trusted = refined
        ? tmin
        : clamp_trusted(static_cast<long long>(tmin) - x.shape().reach() - y.shape().reach(), ambient);

    OperatorShape shape;
    shape.band_up = x.shape().band_up + y.shape().band_up;
    shape.band_lo = x.shape().band_lo + y.shape().band_lo;
    std::optional<int> supp;
    if (x.shape().support)
        supp = *x.shape().support + std::max(0, y.shape().band_up);
    if (y.shape().support) {
        const int cand = *y.shape().support + std::max(0, x.shape().band_lo);
        supp = supp ? std::min(*supp, cand) : cand;
    }
    if (supp) shape.support = std::max(-1, *supp);

    GrowthProfile growth;
    growth.known = x.growth().known && y.growth().known;
    if (growth.known) {
        const int wx = std::max(0, x.shape().band_up + x.shape().band_lo) + 1;
        const int wy = std::max(0, y.shape().band_up + y.shape().band_lo) + 1;
        growth.scale = x.growth().scale * y.growth().scale * std::max(wx, wy);
        growth.degree = x.growth().degree + y.growth().degree;
        growth.offset = std::max(x.growth().offset, y.growth().offset) +
                        x.shape().reach() + y.shape().reach();
    }

    Matrix m(x.dim(), x.dim());
    m.noalias() = x.entries() * y.entries();
    return FockOperator(std::move(m), trusted, join_label(x.label(), "*", y.label()),
                        shape, growth);
}

FockOperator add(const FockOperator& x, const FockOperator& y) {
    if (x.dim() != y.dim()) throw DimensionError("add: ambient dimensions differ");
    OperatorShape shape;
    shape.band_up = std::max(x.shape().band_up, y.shape().band_up);
    shape.band_lo = std::max(x.shape().band_lo, y.shape().band_lo);
    if (x.shape().support && y.shape().support)
        shape.support = std::max(*x.shape().support, *y.shape().support);
    GrowthProfile growth;
    growth.known = x.growth().known && y.growth().known;
    if (growth.known) {
        growth.scale = x.growth().scale + y.growth().scale;
        growth.degree = std::max(x.growth().degree, y.growth().degree);
        growth.offset = std::max(x.growth().offset, y.growth().offset);
    }
    return FockOperator(x.entries() + y.entries(), std::min(x.trusted(), y.trusted()),
                        join_label(x.label(), "+", y.label()), shape, growth);
}

FockOperator subtract(const FockOperator& x, const FockOperator& y) {
    return add(x, scale(cplx(-1.0, 0.0), y));
}

FockOperator scale(cplx alpha, const FockOperator& x) {
    GrowthProfile growth = x.growth();
    growth.scale *= std::abs(alpha);
    return FockOperator(alpha * x.entries(), x.trusted(), x.label(), x.shape(), growth);
}

FockOperator commutator(const FockOperator& x, const FockOperator& y) {
    return subtract(compose(x, y), compose(y, x));
}

double max_abs_diff(const FockOperator& x, const FockOperator& y) {
    if (x.dim() != y.dim()) throw DimensionError("max_abs_diff: dimensions differ");
    return max_abs(x.entries() - y.entries());
}

double max_abs_diff_within(const FockOperator& x, const FockOperator& y, int bound) {
    if (x.dim() != y.dim()) throw DimensionError("max_abs_diff_within: dimensions differ");
    const int n = std::min(bound + 1, x.dim());
    if (n <= 0) return 0.0;
    return max_abs(x.entries().topLeftCorner(n, n) - y.entries().topLeftCorner(n, n));
}

double LadderIdentityReport::worst() const {
    double w = 0.0;
    for (const auto& c : checks) w = std::max(w, c.deviation);
    return w;
}

const IdentityDeviation* LadderIdentityReport::worst_check() const {
    const IdentityDeviation* out = nullptr;
    for (const auto& c : checks)
        if (!out || c.deviation > out->deviation) out = &c;
    return out;
}

bool LadderIdentityReport::all_within(double tol) const {
    return worst() <= tol;
}

const IdentityDeviation* LadderIdentityReport::first_violation(double tol) const {
    for (const auto& c : checks)
        if (c.deviation > tol) return &c;
    return nullptr;
}

LadderIdentityReport verify_ladder_identities(const TruncationSpec& spec, int max_index) {
    return verify_ladder_identities(spec, max_index, annihilation(spec));
}

LadderIdentityReport verify_ladder_identities(const TruncationSpec& spec, int max_index,
                                              const FockOperator& ladder) {
    spec.validate();
    const int D = spec.ambient_dim;
    if (max_index < 1 || max_index > D - 2)
        throw RangeError("identity range max_index=" + std::to_string(max_index) +
                         " needs 1 <= max_index <= ambient_dim-2 (ambient_dim=" +
                         std::to_string(D) + ")");

    const FockOperator& a = ladder;
    const FockOperator ad = a.adjoint();
    const FockOperator n = number_operator(spec);
    LadderIdentityReport report;
    auto push = [&report](std::string name, int ia, int ib, double dev) {
        report.checks.push_back(IdentityDeviation{std::move(name), ia, ib, dev});
    };

    for (int l = 1; l <= max_index; ++l) {
        const FockOperator pi_prev = projection_pi(l - 1, spec);
        const FockOperator pi = projection_pi(l, spec);
        push("pi_shift", l, -1, max_abs_diff(pi_prev * a, a * pi));
        push("pi_shift_dag", l, -1, max_abs_diff(ad * pi_prev, pi * ad));
    }

    for (int L = 0; L <= max_index; ++L) {
        const FockOperator q = projection_q(L, spec);
        const FockOperator q_next = projection_q(L + 1, spec);
        const FockOperator pi = projection_pi(L, spec);
        push("q_shift", L, -1, max_abs_diff(q * a, a * q_next));
        if (L >= 1) {
            const FockOperator q_prev = projection_q(L - 1, spec);
            push("q_shift_dag", L, -1, max_abs_diff(q * ad, ad * q_prev));
        }
        push("q_commutator", L, -1, max_abs_diff(commutator(q, a), pi * a));
        push("q_commutator_dag", L, -1, max_abs_diff(commutator(q, ad), -(ad * pi)));
        push("cutoff_absorb", L, -1, max_abs_diff(q * a * q, a * q));
        push("regularization_coincidence", L, -1,
             max_abs_diff(regularized_creation(L, spec) * regularized_annihilation(L, spec),
                          q * n * q));
    }

    // Block norms |Pi_l a Pi_s|; each block is rank one, so its spectral
    // norm is the entry modulus.
    for (int l = 0; l <= max_index; ++l) {
        for (int s = 0; s <= max_index; ++s) {
            const double expected = (l == s - 1) ? std::sqrt(double(s)) : 0.0;
            const double got = std::abs(a.entry(l, s));
            push("block_norm", l, s, std::abs(got - expected));
        }
    }

    {
        const FockOperator ccr = commutator(a, ad);
        push("ccr", D - 1, -1,
             max_abs_diff_within(ccr, identity_operator(spec), D - 1));
    }

    for (int k = 0; k <= max_index; ++k) {
        const FockOperator pik = projection_pi(k, spec);
        for (int l = 0; l <= max_index; ++l) {
            const FockOperator pil = projection_pi(l, spec);
            const FockOperator prod = pik * pil;
            const double dev = (k == l) ? max_abs_diff(prod, pil) : max_abs(prod.entries());
            push("pi_algebra", k, l, dev);
        }
    }

    for (int L = 0; L <= max_index; ++L) {
        const FockOperator qL = projection_q(L, spec);
        for (int M = L; M <= max_index; ++M) {
            const FockOperator qM = projection_q(M, spec);
            push("q_nesting", L, M, max_abs_diff(qL * qM, qL));
        }
    }
    push("q_full", D, -1, max_abs_diff(projection_q(D, spec), identity_operator(spec)));

    return report;
}

}  // namespace fockcut

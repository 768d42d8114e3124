#include "fockcut/spin.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace fockcut {

Axis axis_from_string(const std::string& s) {
    if (s == "x" || s == "X") return Axis::X;
    if (s == "y" || s == "Y") return Axis::Y;
    if (s == "z" || s == "Z") return Axis::Z;
    throw ConfigError("unknown axis '" + s + "'");
}

std::string axis_name(Axis a) {
    switch (a) {
        case Axis::X: return "x";
        case Axis::Y: return "y";
        default: return "z";
    }
}

void SpinSystem::validate(int cap) const {
    if (nsites < 1) throw ConfigError("spin system needs at least one site");
    if (nsites > cap)
        throw ConfigError("spin system with " + std::to_string(nsites) +
                          " sites exceeds the dense-arithmetic cap of " + std::to_string(cap));
}

Eigen::Matrix2cd pauli_matrix(Axis a) {
    Eigen::Matrix2cd m;
    switch (a) {
        case Axis::X:
            m << 0.0, 1.0, 1.0, 0.0;
            break;
        case Axis::Y:
            m << cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0);
            break;
        default:
            m << 1.0, 0.0, 0.0, -1.0;
            break;
    }
    return m;
}

namespace {

int site_mask(int site, const SpinSystem& sys) {
    return 1 << (sys.nsites - 1 - site);
}

}  // namespace

int site_sign(int index, int site, const SpinSystem& sys) {
    return (index & site_mask(site, sys)) ? -1 : 1;
}

Matrix site_pauli(Axis a, int site, const SpinSystem& sys) {
    sys.validate();
    if (site < 0 || site >= sys.nsites)
        throw RangeError("unknown site " + std::to_string(site));
    const int dim = sys.dim();
    const int mask = site_mask(site, sys);
    Matrix m = Matrix::Zero(dim, dim);
    for (int b = 0; b < dim; ++b) {
        const bool down = (b & mask) != 0;
        switch (a) {
            case Axis::X:
                m(b ^ mask, b) = 1.0;
                break;
            case Axis::Y:
                m(b ^ mask, b) = down ? cplx(0, -1) : cplx(0, 1);
                break;
            default:
                m(b, b) = down ? -1.0 : 1.0;
                break;
        }
    }
    return m;
}

Eigen::VectorXd mean_magnetization_diagonal(const SpinSystem& sys) {
    sys.validate();
    Eigen::VectorXd d(sys.dim());
    for (int b = 0; b < sys.dim(); ++b) {
        const int downs = std::popcount(static_cast<unsigned>(b));
        d(b) = double(sys.nsites - 2 * downs) / double(sys.nsites);
    }
    return d;
}

Matrix mean_magnetization(const SpinSystem& sys) {
    return mean_magnetization_diagonal(sys).cast<cplx>().asDiagonal();
}

std::vector<MagnetizationSector> sector_decompose(const SpinSystem& sys) {
    return sector_decompose_active(sys, sys.nsites);
}

Eigen::VectorXd mean_magnetization_diagonal_active(const SpinSystem& sys, int active_sites) {
    sys.validate();
    if (active_sites < 1 || active_sites > sys.nsites)
        throw RangeError("active sub-lattice size out of range");
    const unsigned mask = ((1u << active_sites) - 1u) << (sys.nsites - active_sites);
    Eigen::VectorXd d(sys.dim());
    for (int b = 0; b < sys.dim(); ++b) {
        const int downs = std::popcount(static_cast<unsigned>(b) & mask);
        d(b) = double(active_sites - 2 * downs) / double(active_sites);
    }
    return d;
}

std::vector<MagnetizationSector> sector_decompose_active(const SpinSystem& sys,
                                                         int active_sites) {
    sys.validate();
    if (active_sites < 1 || active_sites > sys.nsites)
        throw RangeError("active sub-lattice size out of range");
    const unsigned mask = ((1u << active_sites) - 1u) << (sys.nsites - active_sites);
    std::vector<MagnetizationSector> sectors(active_sites + 1);
    for (int k = 0; k <= active_sites; ++k) {
        sectors[k].up_count = active_sites - k;
        sectors[k].m = double(active_sites - 2 * k) / double(active_sites);
    }
    for (int b = 0; b < sys.dim(); ++b)
        sectors[std::popcount(static_cast<unsigned>(b) & mask)].indices.push_back(b);
    return sectors;
}

RelevantState all_up_state(const SpinSystem& sys) {
    sys.validate();
    Vector psi = Vector::Zero(sys.dim());
    psi(0) = 1.0;
    return RelevantState{psi, 1.0};
}

RelevantState product_state(const SpinSystem& sys, const std::vector<int>& down_sites) {
    sys.validate();
    int index = 0;
    for (int s : down_sites) {
        if (s < 0 || s >= sys.nsites) throw RangeError("unknown site " + std::to_string(s));
        index |= site_mask(s, sys);
    }
    Vector psi = Vector::Zero(sys.dim());
    psi(index) = 1.0;
    const double m =
        double(sys.nsites - 2 * int(down_sites.size())) / double(sys.nsites);
    return RelevantState{psi, m};
}

RelevantState sector_state(const SpinSystem& sys, const MagnetizationSector& sector,
                           const Vector& coeffs) {
    if (coeffs.size() != static_cast<long>(sector.indices.size()))
        throw DimensionError("sector_state: coefficient count does not match sector size");
    Vector psi = Vector::Zero(sys.dim());
    for (size_t i = 0; i < sector.indices.size(); ++i) psi(sector.indices[i]) = coeffs(i);
    const double norm = psi.norm();
    if (norm == 0.0) throw Error("sector_state: zero vector");
    psi /= norm;
    RelevantState state{psi, sector.m};
    // eigenvector property must hold exactly by construction
    const Eigen::VectorXd d = mean_magnetization_diagonal(sys);
    double dev = 0.0;
    for (int b = 0; b < sys.dim(); ++b)
        dev = std::max(dev, std::abs((d(b) - sector.m) * psi(b)));
    if (dev > 1e-12) throw Error("sector_state: not a magnetization eigenvector");
    return state;
}

RelevantState random_sector_state(const SpinSystem& sys, const MagnetizationSector& sector,
                                  std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector coeffs(sector.indices.size());
    for (long i = 0; i < coeffs.size(); ++i) coeffs(i) = cplx(gauss(rng), gauss(rng));
    return sector_state(sys, sector, coeffs);
}

double strong_seminorm(const Matrix& x, const RelevantState& psi) {
    if (x.cols() != psi.psi.size())
        throw DimensionError("strong_seminorm: dimensions differ");
    return (x * psi.psi).norm();
}

Matrix iterated_commutator(const Matrix& a, const Matrix& b, int l) {
    if (l < 0) throw RangeError("iterated_commutator: negative depth");
    Matrix cur = b;
    for (int i = 0; i < l; ++i) cur = a * cur - cur * a;
    return cur;
}

Vector random_unit_vector(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = cplx(gauss(rng), gauss(rng));
    v /= v.norm();
    return v;
}

}  // namespace fockcut

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fockcut/types.hpp"

namespace fockcut {

enum class Axis { X, Y, Z };

Axis axis_from_string(const std::string& s);
std::string axis_name(Axis a);

// Finite lattice of spin-1/2 sites. Site i maps to bit (nsites-1-i) of the
// computational basis index; bit 0 means spin up.
struct SpinSystem {
    int nsites = 1;

    int dim() const { return 1 << nsites; }
    void validate(int cap = 12) const;
};

Eigen::Matrix2cd pauli_matrix(Axis a);

// sigma_alpha at one site, dense on the full 2^|V| space.
Matrix site_pauli(Axis a, int site, const SpinSystem& sys);

// Eigenvalue of sigma_z at `site` on computational basis state `index`.
int site_sign(int index, int site, const SpinSystem& sys);

// Diagonal of the mean magnetization (1/|V|) sum_i sigma_z^i.
Eigen::VectorXd mean_magnetization_diagonal(const SpinSystem& sys);
Matrix mean_magnetization(const SpinSystem& sys);

struct MagnetizationSector {
    double m = 0.0;
    int up_count = 0;
    std::vector<int> indices;  // computational basis states with this m
};

// Sectors ordered by decreasing m; multiplicity of up_count k is C(|V|,k).
std::vector<MagnetizationSector> sector_decompose(const SpinSystem& sys);

// Mean magnetization over the sub-lattice of the first active_sites sites,
// still acting on the full system; used to compare evolutions at different
// volumes inside one embedding lattice.
Eigen::VectorXd mean_magnetization_diagonal_active(const SpinSystem& sys, int active_sites);
std::vector<MagnetizationSector> sector_decompose_active(const SpinSystem& sys,
                                                         int active_sites);

// Unit vector on which the mean magnetization acts as the scalar m.
struct RelevantState {
    Vector psi;
    double m = 0.0;
};

RelevantState all_up_state(const SpinSystem& sys);
RelevantState product_state(const SpinSystem& sys, const std::vector<int>& down_sites);
RelevantState sector_state(const SpinSystem& sys, const MagnetizationSector& sector,
                           const Vector& coeffs);
RelevantState random_sector_state(const SpinSystem& sys, const MagnetizationSector& sector,
                                  std::mt19937_64& rng);

// |X psi|; the strong seminorm attached to a relevant vector.
double strong_seminorm(const Matrix& x, const RelevantState& psi);

// Iterated commutator [A, B]_l = [A, [A, B]_{l-1}], [A, B]_0 = B.
Matrix iterated_commutator(const Matrix& a, const Matrix& b, int l);

// Random unit vector on the full spin space.
Vector random_unit_vector(int dim, std::mt19937_64& rng);

}  // namespace fockcut

// Copyright 2026 The bellcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "bellcorr/classical.hpp"
#include "bellcorr/inequality.hpp"

namespace bellcorr {

using Complex = std::complex<double>;
using StateVector = Eigen::VectorXcd;
using Bloch = std::array<double, 3>;

/// Wraps an angle into [0, 2pi).
double reduce_angle(double angle);

/// Global phase phi0 plus one phase per site. Angles are stored as given;
/// reduced() wraps them into [0, 2pi).
class PhaseVector {
  public:
    PhaseVector() = default;
    explicit PhaseVector(std::vector<double> phi, double phi0 = 0.0);

    int n() const { return static_cast<int>(phi_.size()); }
    double phi0() const { return phi0_; }
    const std::vector<double> &phi() const { return phi_; }
    double phi(int k) const { return phi_[k]; }
    PhaseVector reduced() const;

  private:
    double phi0_ = 0.0;
    std::vector<double> phi_;
};

/// Two +-1-valued qubit observables a.sigma per site, one per choice.
class ObservableSpec {
  public:
    ObservableSpec() = default;
    /// Bloch vectors are normalized; zero vectors are rejected.
    explicit ObservableSpec(std::vector<std::array<Bloch, 2>> bloch);
    /// Observables cos(t) sigma_x + sin(t) sigma_y, angles[k][choice] = t.
    static ObservableSpec from_xy_angles(const std::vector<std::array<double, 2>> &angles);

    int n() const { return static_cast<int>(bloch_.size()); }
    /// site is 0-based.
    const Bloch &bloch(int site, int choice) const { return bloch_[site][choice]; }
    Eigen::Matrix2cd matrix(int site, int choice) const;
    /// Per-site angles if every vector lies in the x-y plane.
    std::optional<std::vector<std::array<double, 2>>> xy_angles() const;

    nlohmann::json to_json() const;
    static ObservableSpec from_json(const nlohmann::json &j);

  private:
    std::vector<std::array<Bloch, 2>> bloch_;
};

inline constexpr int kMaxDensitySites = 10;

/// Validated n-qubit density matrix (Hermitian, unit trace, PSD).
class DensityMatrix {
  public:
    DensityMatrix(int n, Eigen::MatrixXcd rho);
    static DensityMatrix pure(const StateVector &psi);

    int n() const { return n_; }
    const Eigen::MatrixXcd &matrix() const { return rho_; }

  private:
    int n_;
    Eigen::MatrixXcd rho_;
};

/// |T(phi)| with T(phi) = sum_s beta(s) exp(i sum_k phi_k s_k); phi0 is ignored.
double violation_value(const BellTable &beta, const PhaseVector &phases);

/// |T|^2 with analytic first and second derivatives in phi.
struct SquaredModulus {
    double value = 0.0;
    Eigen::VectorXd gradient;
    Eigen::MatrixXd hessian;
};

SquaredModulus squared_modulus(const BellTable &beta, std::span<const double> phi);

struct MaxViolationOptions {
    std::uint64_t seed = 20020101;
    int random_starts = 32;
    /// Starts on {0, pi/2, pi, 3pi/2}^n are added when n <= grid_max_sites.
    int grid_max_sites = 8;
    int max_iterations = 500;
    double gradient_tolerance = 1e-12;
};

struct MaxViolationResult {
    double value = 0.0;
    PhaseVector argmax;
    double gradient_norm = 0.0;
    int starts = 0;
    bool converged = false;
};

/// Global maximum of violation_value over the phase torus by multi-start
/// Newton / gradient ascent on |T|^2.
MaxViolationResult max_violation(const BellTable &beta, const MaxViolationOptions &opts = {});

/// 2^((n-1)/2), the largest quantum value any correlation inequality reaches.
double mermin_bound(int n);

/// xi(s) = cos(phi0 + sum_k phi_k s_k)
CorrelationVector extreme_point_q(const PhaseVector &phases);

/// x-y plane observables that reproduce extreme_point_q(phases) on the GHZ state.
ObservableSpec ghz_observables(const PhaseVector &phases);

inline constexpr int kMaxSimulatorSites = 12;

/// (|0...0> + |1...1>) / sqrt(2); 1 <= n <= 12.
StateVector ghz_state(int n);

/// xi(s) = <psi| (x)_k A_k(s_k) |psi>. Site k acts on bit k-1 of the basis index.
CorrelationVector simulate_correlations(const StateVector &psi, const ObservableSpec &obs);
CorrelationVector simulate_correlations(const DensityMatrix &rho, const ObservableSpec &obs);

/// Dense sum_s beta(s) (x)_k A_k(s_k).
Eigen::MatrixXcd bell_operator(const BellTable &beta, const ObservableSpec &obs);

struct NormRoutes {
    /// Largest |eigenvalue| of the dense (Hermitian) Bell operator.
    double dense = 0.0;
    /// max over eigenvalue tuples gamma_k of C_k = A_k(1) A_k(0) of
    /// |sum_s beta(s) prod_k gamma_k^{s_k}|.
    double spectral = 0.0;
};

inline constexpr int kMaxNormSites = 10;

NormRoutes bell_operator_norm_routes(const BellTable &beta, const ObservableSpec &obs);

/// Both routes; throws SolverError if they differ by more than 1e-8.
double bell_operator_norm_exact(const BellTable &beta, const ObservableSpec &obs);

/// Transposes the tensor factors of the sites in `sites` (bit k-1 for site k).
Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd &rho, int n, std::uint32_t sites);
Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd &rho, int n, std::span<const int> sites);

double min_eigenvalue(const Eigen::MatrixXcd &hermitian);

/// Dirichlet(1, ..., 1) mixture of `terms` Haar-random pure product states.
DensityMatrix sample_separable(int n, int terms, std::uint64_t seed);
DensityMatrix sample_separable(int n, int terms, std::mt19937_64 &rng);

ObservableSpec random_xy_observables(int n, std::mt19937_64 &rng);
ObservableSpec random_bloch_observables(int n, std::mt19937_64 &rng);

struct PptCheckReport {
    int n = 0;
    int states = 0;
    int observable_specs = 0;
    std::uint64_t seed = 0;
    /// Largest inequality value seen over all extremal tables.
    double max_value = 0.0;
    /// Largest l1 margin of the simulated correlation vectors.
    double max_margin = 0.0;
    /// Smallest eigenvalue over every partial transpose of every state.
    double min_pt_eigenvalue = 0.0;
    bool passed = false;
};

/// Samples separable states, measures random x-y observables and checks that
/// no correlation inequality exceeds 1 + 1e-9. Explicit sweep over all
/// 2^(2^n) tables when n <= 3, l1 margin otherwise.
PptCheckReport ppt_property_check(int n, int states, int observable_specs, std::uint64_t seed,
                                  int terms = 4);

} // namespace bellcorr

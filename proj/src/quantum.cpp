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

#include "bellcorr/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace bellcorr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

void check_range(int n, int lo, int hi, const char *who) {
    if (n < lo || n > hi) {
        throw RangeError(std::string(who) + ": site count " + std::to_string(n) + " outside [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

int sites_of_dimension(Eigen::Index dim) { return log2_exact(static_cast<std::size_t>(dim)); }

// Applies a 2x2 operator to qubit q of every column of `m`.
template <class Matrix> void apply_single(const Eigen::Matrix2cd &op, int q, Matrix &m) {
    const Eigen::Index dim = m.rows();
    const Eigen::Index stride = Eigen::Index{1} << q;
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            if (i & stride) {
                continue;
            }
            const Complex a = m(i, col);
            const Complex b = m(i + stride, col);
            m(i, col) = op(0, 0) * a + op(0, 1) * b;
            m(i + stride, col) = op(1, 0) * a + op(1, 1) * b;
        }
    }
}

// Walks the binary tree of choice strings, applying A_k(s_k) site by site;
// `leaf` receives the fully transformed operand and the index s.
template <class Matrix, class Leaf>
void correlation_tree(const ObservableSpec &obs, int k, const Matrix &current, std::size_t s,
                      Leaf &&leaf) {
    if (k == obs.n()) {
        leaf(current, s);
        return;
    }
    for (int c = 0; c < 2; ++c) {
        Matrix next = current;
        apply_single(obs.matrix(k, c), k, next);
        correlation_tree(obs, k + 1, next, s | (std::size_t(c) << k), leaf);
    }
}

// z[s] = prod_k gamma_k^{s_k}
std::vector<Complex> monomials(std::span<const Complex> gamma) {
    std::vector<Complex> z(table_size(static_cast<int>(gamma.size())));
    z[0] = 1.0;
    for (std::size_t k = 0; k < gamma.size(); ++k) {
        const std::size_t half = std::size_t{1} << k;
        for (std::size_t s = 0; s < half; ++s) {
            z[s | half] = z[s] * gamma[k];
        }
    }
    return z;
}

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

struct Ascent {
    double value;
    std::vector<double> phi;
    double gradient_norm;
};

Ascent ascend(const BellTable &beta, std::vector<double> phi, const MaxViolationOptions &opts) {
    const int n = beta.n();
    SquaredModulus cur = squared_modulus(beta, phi);
    for (int it = 0; it < opts.max_iterations; ++it) {
        const double gnorm = cur.gradient.norm();
        if (gnorm < opts.gradient_tolerance) {
            break;
        }
        // Saddle-free Newton: curvature magnitudes |lambda_i| (floored) keep
        // the step an ascent direction, also near flat or degenerate maxima.
        Eigen::VectorXd dir = cur.gradient;
        bool newton = false;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cur.hessian);
        if (eig.info() == Eigen::Success) {
            const Eigen::VectorXd proj = eig.eigenvectors().transpose() * cur.gradient;
            Eigen::VectorXd scaled(n);
            for (int i = 0; i < n; ++i) {
                scaled[i] = proj[i] / std::max(std::abs(eig.eigenvalues()[i]), 1e-8);
            }
            Eigen::VectorXd step = eig.eigenvectors() * scaled;
            if (step.allFinite() && step.dot(cur.gradient) > 0.0) {
                dir = step;
                newton = true;
            }
        }
        double slope = dir.dot(cur.gradient);
        double t = 1.0;
        bool moved = false;
        for (int attempt = 0; attempt < 2 && !moved; ++attempt) {
            for (; t > 1e-14; t *= 0.5) {
                std::vector<double> trial(phi);
                for (int k = 0; k < n; ++k) {
                    trial[k] += t * dir[k];
                }
                SquaredModulus next = squared_modulus(beta, trial);
                // Near the top the Armijo gain drops below double resolution;
                // then accept any step that keeps the value and shrinks the gradient.
                const bool armijo = next.value >= cur.value + 1e-4 * t * slope;
                const bool polish = next.value >= cur.value * (1.0 - 1e-15) &&
                                    next.gradient.norm() < 0.5 * gnorm;
                if (armijo || polish) {
                    phi = std::move(trial);
                    cur = std::move(next);
                    moved = true;
                    break;
                }
            }
            if (!moved && newton) {
                dir = cur.gradient;
                slope = dir.dot(cur.gradient);
                t = 1.0;
                newton = false;
            } else {
                break;
            }
        }
        if (!moved) {
            break;
        }
    }
    return {cur.value, std::move(phi), cur.gradient.norm()};
}

} // namespace

double reduce_angle(double angle) {
    double r = std::fmod(angle, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    return r >= kTwoPi ? 0.0 : r;
}

PhaseVector::PhaseVector(std::vector<double> phi, double phi0) : phi0_(phi0), phi_(std::move(phi)) {
    check_range(static_cast<int>(phi_.size()), 1, kMaxSites, "PhaseVector");
    if (!std::isfinite(phi0_) ||
        !std::all_of(phi_.begin(), phi_.end(), [](double x) { return std::isfinite(x); })) {
        throw RangeError("PhaseVector: non-finite angle");
    }
}

PhaseVector PhaseVector::reduced() const {
    std::vector<double> phi(phi_.size());
    std::transform(phi_.begin(), phi_.end(), phi.begin(), reduce_angle);
    return PhaseVector(std::move(phi), reduce_angle(phi0_));
}

ObservableSpec::ObservableSpec(std::vector<std::array<Bloch, 2>> bloch) : bloch_(std::move(bloch)) {
    check_range(n(), 1, kMaxSites, "ObservableSpec");
    for (auto &site : bloch_) {
        for (Bloch &v : site) {
            const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
            if (!(norm > 1e-12) || !std::isfinite(norm)) {
                throw RangeError("ObservableSpec: Bloch vector must be non-zero and finite");
            }
            for (double &x : v) {
                x /= norm;
            }
        }
    }
}

ObservableSpec ObservableSpec::from_xy_angles(const std::vector<std::array<double, 2>> &angles) {
    std::vector<std::array<Bloch, 2>> bloch(angles.size());
    for (std::size_t k = 0; k < angles.size(); ++k) {
        for (int c = 0; c < 2; ++c) {
            bloch[k][c] = {std::cos(angles[k][c]), std::sin(angles[k][c]), 0.0};
        }
    }
    return ObservableSpec(std::move(bloch));
}

Eigen::Matrix2cd ObservableSpec::matrix(int site, int choice) const {
    const Bloch &a = bloch_.at(site)[choice];
    Eigen::Matrix2cd m;
    m << a[2], Complex(a[0], -a[1]), Complex(a[0], a[1]), -a[2];
    return m;
}

std::optional<std::vector<std::array<double, 2>>> ObservableSpec::xy_angles() const {
    std::vector<std::array<double, 2>> out(bloch_.size());
    for (std::size_t k = 0; k < bloch_.size(); ++k) {
        for (int c = 0; c < 2; ++c) {
            const Bloch &a = bloch_[k][c];
            if (std::abs(a[2]) > 1e-12) {
                return std::nullopt;
            }
            out[k][c] = std::atan2(a[1], a[0]);
        }
    }
    return out;
}

nlohmann::json ObservableSpec::to_json() const {
    nlohmann::json j = {{"n", n()}};
    if (auto angles = xy_angles()) {
        j["angles"] = *angles;
    } else {
        j["bloch"] = bloch_;
    }
    return j;
}

ObservableSpec ObservableSpec::from_json(const nlohmann::json &j) {
    try {
        ObservableSpec spec = j.contains("angles")
                                  ? from_xy_angles(j.at("angles").get<std::vector<std::array<double, 2>>>())
                                  : ObservableSpec(j.at("bloch").get<std::vector<std::array<Bloch, 2>>>());
        if (j.contains("n") && j.at("n").get<int>() != spec.n()) {
            throw DimensionError("ObservableSpec JSON: n does not match the table");
        }
        return spec;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("ObservableSpec JSON: ") + e.what());
    }
}

DensityMatrix::DensityMatrix(int n, Eigen::MatrixXcd rho) : n_(n), rho_(std::move(rho)) {
    check_range(n, 1, kMaxDensitySites, "DensityMatrix");
    const Eigen::Index dim = Eigen::Index{1} << n;
    if (rho_.rows() != dim || rho_.cols() != dim) {
        throw DimensionError("DensityMatrix: expected a " + std::to_string(dim) + "x" +
                             std::to_string(dim) + " matrix");
    }
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        throw RangeError("DensityMatrix: not Hermitian");
    }
    if (std::abs(rho_.trace() - Complex(1.0)) > 1e-12) {
        throw RangeError("DensityMatrix: trace is not 1");
    }
    if (min_eigenvalue(rho_) < -1e-10) {
        throw RangeError("DensityMatrix: negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::pure(const StateVector &psi) {
    const StateVector unit = psi / psi.norm();
    return DensityMatrix(sites_of_dimension(psi.size()), unit * unit.adjoint());
}

SquaredModulus squared_modulus(const BellTable &beta, std::span<const double> phi) {
    const int n = beta.n();
    if (static_cast<int>(phi.size()) != n) {
        throw DimensionError("squared_modulus: " + std::to_string(phi.size()) + " phases for " +
                             std::to_string(n) + " sites");
    }
    std::vector<Complex> gamma(n);
    for (int k = 0; k < n; ++k) {
        gamma[k] = std::polar(1.0, phi[k]);
    }
    const auto z = monomials(gamma);
    const std::vector<double> b = beta.values();

    Complex t = 0.0;
    Eigen::VectorXcd dt = Eigen::VectorXcd::Zero(n);
    Eigen::MatrixXcd ddt = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t s = 0; s < z.size(); ++s) {
        if (b[s] == 0.0) {
            continue;
        }
        const Complex term = b[s] * z[s];
        t += term;
        for (int k = 0; k < n; ++k) {
            if (!((s >> k) & 1U)) {
                continue;
            }
            dt[k] += kI * term;
            for (int l = 0; l < n; ++l) {
                if ((s >> l) & 1U) {
                    ddt(k, l) -= term;
                }
            }
        }
    }
    SquaredModulus out;
    out.value = std::norm(t);
    out.gradient.resize(n);
    out.hessian.resize(n, n);
    for (int k = 0; k < n; ++k) {
        out.gradient[k] = 2.0 * std::real(std::conj(t) * dt[k]);
        for (int l = 0; l < n; ++l) {
            out.hessian(k, l) = 2.0 * std::real(std::conj(dt[l]) * dt[k] + std::conj(t) * ddt(k, l));
        }
    }
    return out;
}

double violation_value(const BellTable &beta, const PhaseVector &phases) {
    if (phases.n() != beta.n()) {
        throw DimensionError("violation_value: phase vector and table disagree on n");
    }
    std::vector<Complex> gamma(phases.n());
    for (int k = 0; k < phases.n(); ++k) {
        gamma[k] = std::polar(1.0, phases.phi(k));
    }
    const auto z = monomials(gamma);
    Complex t = 0.0;
    for (std::size_t s = 0; s < z.size(); ++s) {
        t += beta.coefficient(s) * z[s];
    }
    return std::abs(t);
}

MaxViolationResult max_violation(const BellTable &beta, const MaxViolationOptions &opts) {
    const int n = beta.n();
    if (beta.coefficients().is_zero()) {
        throw RangeError("max_violation: zero table");
    }
    std::vector<std::vector<double>> starts;
    if (n <= opts.grid_max_sites) {
        const std::size_t count = std::size_t{1} << (2 * n);
        for (std::size_t code = 0; code < count; ++code) {
            std::vector<double> phi(n);
            for (int k = 0; k < n; ++k) {
                phi[k] = static_cast<double>((code >> (2 * k)) & 3U) * (std::numbers::pi / 2.0);
            }
            starts.push_back(std::move(phi));
        }
    }
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (int i = 0; i < opts.random_starts; ++i) {
        std::vector<double> phi(n);
        for (double &x : phi) {
            x = angle(rng);
        }
        starts.push_back(std::move(phi));
    }
    if (starts.empty()) {
        throw RangeError("max_violation: no starting points configured");
    }

    MaxViolationResult best;
    double best_sq = -1.0;
    for (auto &start : starts) {
        Ascent run = ascend(beta, std::move(start), opts);
        // Ties within round-off go to the run with the smaller gradient.
        const double tie = 1e-12 * std::max(best_sq, 1.0);
        if (run.value > best_sq + tie ||
            (run.value >= best_sq - tie && run.gradient_norm < best.gradient_norm)) {
            best_sq = run.value;
            best.argmax = PhaseVector(std::move(run.phi)).reduced();
            best.gradient_norm = run.gradient_norm;
        }
    }
    best.value = std::sqrt(best_sq);
    best.starts = static_cast<int>(starts.size());
    best.converged = best.gradient_norm <= 1e-8;
    return best;
}

double mermin_bound(int n) {
    check_range(n, 1, kMaxSites, "mermin_bound");
    return std::pow(2.0, (n - 1) / 2.0);
}

CorrelationVector extreme_point_q(const PhaseVector &phases) {
    const int n = phases.n();
    std::vector<double> xi(table_size(n));
    for (std::size_t s = 0; s < xi.size(); ++s) {
        double arg = phases.phi0();
        for (int k = 0; k < n; ++k) {
            if ((s >> k) & 1U) {
                arg += phases.phi(k);
            }
        }
        xi[s] = std::cos(arg);
    }
    return CorrelationVector(n, std::move(xi));
}

ObservableSpec ghz_observables(const PhaseVector &phases) {
    const int n = phases.n();
    const double alpha = phases.phi0() / n;
    std::vector<std::array<double, 2>> angles(n);
    for (int k = 0; k < n; ++k) {
        angles[k] = {alpha, phases.phi(k) + alpha};
    }
    return ObservableSpec::from_xy_angles(angles);
}

StateVector ghz_state(int n) {
    check_range(n, 1, kMaxSimulatorSites, "ghz_state");
    StateVector psi = StateVector::Zero(Eigen::Index{1} << n);
    psi[0] = std::numbers::sqrt2 / 2.0;
    psi[psi.size() - 1] = std::numbers::sqrt2 / 2.0;
    return psi;
}

CorrelationVector simulate_correlations(const StateVector &psi, const ObservableSpec &obs) {
    const int n = sites_of_dimension(psi.size());
    check_range(n, 1, kMaxSimulatorSites, "simulate_correlations");
    if (n != obs.n()) {
        throw DimensionError("simulate_correlations: state has " + std::to_string(n) +
                             " qubits, observables " + std::to_string(obs.n()));
    }
    std::vector<double> xi(table_size(n));
    correlation_tree(obs, 0, Eigen::VectorXcd(psi), 0, [&](const Eigen::VectorXcd &v, std::size_t s) {
        xi[s] = clamp_unit(std::real(psi.dot(v)));
    });
    return CorrelationVector(n, std::move(xi));
}

CorrelationVector simulate_correlations(const DensityMatrix &rho, const ObservableSpec &obs) {
    const int n = rho.n();
    if (n != obs.n()) {
        throw DimensionError("simulate_correlations: state has " + std::to_string(n) +
                             " qubits, observables " + std::to_string(obs.n()));
    }
    std::vector<double> xi(table_size(n));
    correlation_tree(obs, 0, rho.matrix(), 0, [&](const Eigen::MatrixXcd &m, std::size_t s) {
        xi[s] = clamp_unit(std::real(m.trace()));
    });
    return CorrelationVector(n, std::move(xi));
}

namespace {

// Site m is the most significant qubit of the sub-operator over sites 1..m.
Eigen::MatrixXcd bell_operator_block(std::span<const double> beta, const ObservableSpec &obs, int m) {
    if (m == 0) {
        return Eigen::MatrixXcd::Constant(1, 1, beta[0]);
    }
    const std::size_t half = beta.size() / 2;
    const Eigen::MatrixXcd low = bell_operator_block(beta.subspan(0, half), obs, m - 1);
    const Eigen::MatrixXcd high = bell_operator_block(beta.subspan(half), obs, m - 1);
    const Eigen::Matrix2cd a0 = obs.matrix(m - 1, 0);
    const Eigen::Matrix2cd a1 = obs.matrix(m - 1, 1);
    const Eigen::Index d = low.rows();
    Eigen::MatrixXcd out(2 * d, 2 * d);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block(i * d, j * d, d, d) = a0(i, j) * low + a1(i, j) * high;
        }
    }
    return out;
}

} // namespace

Eigen::MatrixXcd bell_operator(const BellTable &beta, const ObservableSpec &obs) {
    check_range(beta.n(), 1, kMaxNormSites, "bell_operator");
    if (beta.n() != obs.n()) {
        throw DimensionError("bell_operator: table and observables disagree on n");
    }
    const std::vector<double> b = beta.values();
    return bell_operator_block(b, obs, beta.n());
}

NormRoutes bell_operator_norm_routes(const BellTable &beta, const ObservableSpec &obs) {
    NormRoutes out;
    // Real coefficients and Hermitian factors: B is Hermitian, so its largest
    // singular value is its largest |eigenvalue|.
    const Eigen::MatrixXcd b = bell_operator(beta, obs);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(b, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw SolverError("bell_operator_norm: eigen solver failed");
    }
    out.dense = solver.eigenvalues().cwiseAbs().maxCoeff();

    const int n = beta.n();
    std::vector<std::array<Complex, 2>> eig(n);
    for (int k = 0; k < n; ++k) {
        const Eigen::Matrix2cd c = obs.matrix(k, 1) * obs.matrix(k, 0);
        Eigen::ComplexEigenSolver<Eigen::Matrix2cd> ces(c, false);
        if (ces.info() != Eigen::Success) {
            throw SolverError("bell_operator_norm: 2x2 eigen solver failed");
        }
        eig[k] = {ces.eigenvalues()[0], ces.eigenvalues()[1]};
    }
    const std::vector<double> coeff = beta.values();
    std::vector<Complex> gamma(n);
    for (std::size_t pick = 0; pick < table_size(n); ++pick) {
        for (int k = 0; k < n; ++k) {
            gamma[k] = eig[k][(pick >> k) & 1U];
        }
        const auto z = monomials(gamma);
        Complex t = 0.0;
        for (std::size_t s = 0; s < z.size(); ++s) {
            t += coeff[s] * z[s];
        }
        out.spectral = std::max(out.spectral, std::abs(t));
    }
    return out;
}

double bell_operator_norm_exact(const BellTable &beta, const ObservableSpec &obs) {
    const NormRoutes routes = bell_operator_norm_routes(beta, obs);
    if (std::abs(routes.dense - routes.spectral) > 1e-8) {
        throw SolverError("bell_operator_norm_exact: dense norm " + std::to_string(routes.dense) +
                          " disagrees with eigenvalue formula " + std::to_string(routes.spectral));
    }
    return routes.dense;
}

Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd &rho, int n, std::uint32_t sites) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    if (rho.rows() != dim || rho.cols() != dim) {
        throw DimensionError("partial_transpose: matrix is not 2^n x 2^n");
    }
    if (n < 32 && (sites >> n) != 0) {
        throw RangeError("partial_transpose: site subset exceeds n");
    }
    const Eigen::Index mask = sites;
    Eigen::MatrixXcd out(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            const Eigen::Index si = (i & ~mask) | (j & mask);
            const Eigen::Index sj = (j & ~mask) | (i & mask);
            out(i, j) = rho(si, sj);
        }
    }
    return out;
}

Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd &rho, int n, std::span<const int> sites) {
    std::uint32_t mask = 0;
    for (int k : sites) {
        if (k < 1 || k > n) {
            throw RangeError("partial_transpose: site " + std::to_string(k) + " outside 1.." +
                             std::to_string(n));
        }
        mask |= 1U << (k - 1);
    }
    return partial_transpose(rho, n, mask);
}

double min_eigenvalue(const Eigen::MatrixXcd &hermitian) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw SolverError("min_eigenvalue: eigen solver failed");
    }
    return solver.eigenvalues().minCoeff();
}

DensityMatrix sample_separable(int n, int terms, std::mt19937_64 &rng) {
    check_range(n, 1, kMaxDensitySites, "sample_separable");
    if (terms < 1) {
        throw RangeError("sample_separable: need at least one term");
    }
    std::normal_distribution<double> gauss;
    std::exponential_distribution<double> expo(1.0);
    const Eigen::Index dim = Eigen::Index{1} << n;
    std::vector<double> weights(terms);
    double total = 0.0;
    for (double &w : weights) {
        w = expo(rng);
        total += w;
    }
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    for (int t = 0; t < terms; ++t) {
        StateVector psi = StateVector::Ones(1);
        for (int k = 0; k < n; ++k) {
            Eigen::Vector2cd q(Complex(gauss(rng), gauss(rng)), Complex(gauss(rng), gauss(rng)));
            q.normalize();
            // Site k+1 is more significant than the sites already placed.
            StateVector next(2 * psi.size());
            next.head(psi.size()) = q[0] * psi;
            next.tail(psi.size()) = q[1] * psi;
            psi = std::move(next);
        }
        rho += (weights[t] / total) * (psi * psi.adjoint());
    }
    // Restore exact Hermiticity and unit trace lost to round-off.
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();
    return DensityMatrix(n, std::move(rho));
}

DensityMatrix sample_separable(int n, int terms, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample_separable(n, terms, rng);
}

ObservableSpec random_xy_observables(int n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::vector<std::array<double, 2>> angles(n);
    for (auto &a : angles) {
        a = {angle(rng), angle(rng)};
    }
    return ObservableSpec::from_xy_angles(angles);
}

ObservableSpec random_bloch_observables(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    std::vector<std::array<Bloch, 2>> bloch(n);
    for (auto &site : bloch) {
        for (Bloch &v : site) {
            v = {gauss(rng), gauss(rng), gauss(rng)};
        }
    }
    return ObservableSpec(std::move(bloch));
}

PptCheckReport ppt_property_check(int n, int states, int observable_specs, std::uint64_t seed,
                                  int terms) {
    check_range(n, 1, kMaxDensitySites, "ppt_property_check");
    PptCheckReport report;
    report.n = n;
    report.states = states;
    report.observable_specs = observable_specs;
    report.seed = seed;
    report.min_pt_eigenvalue = std::numeric_limits<double>::infinity();

    std::vector<std::vector<double>> tables;
    if (n <= 3) {
        const std::size_t count = std::size_t{1} << table_size(n);
        for (std::size_t id = 0; id < count; ++id) {
            tables.push_back(coefficients_from_signs(SignTable::from_word(n, id)).values());
        }
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < states; ++i) {
        const DensityMatrix rho = sample_separable(n, terms, rng);
        for (std::uint32_t tau = 0; tau < table_size(n); ++tau) {
            report.min_pt_eigenvalue =
                std::min(report.min_pt_eigenvalue, min_eigenvalue(partial_transpose(rho.matrix(), n, tau)));
        }
        for (int j = 0; j < observable_specs; ++j) {
            const CorrelationVector xi = simulate_correlations(rho, random_xy_observables(n, rng));
            const double margin = l1_margin(xi);
            report.max_margin = std::max(report.max_margin, margin);
            if (tables.empty()) {
                report.max_value = std::max(report.max_value, margin);
                continue;
            }
            for (const auto &beta : tables) {
                double value = 0.0;
                for (std::size_t s = 0; s < beta.size(); ++s) {
                    value += beta[s] * xi[s];
                }
                report.max_value = std::max(report.max_value, value);
            }
        }
    }
    report.passed = report.max_value <= 1.0 + 1e-9 && report.max_margin <= 1.0 + 1e-9 &&
                    report.min_pt_eigenvalue >= -1e-10;
    return report;
}

} // namespace bellcorr

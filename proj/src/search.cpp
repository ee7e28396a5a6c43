// Copyright 2026 The isinglab authors
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

#include "isinglab/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "isinglab/errors.hpp"
#include "isinglab/rep.hpp"

namespace isinglab {

namespace {

constexpr double kCandidateUnitTol = 1e-10;

void require_unit(const Direction& v, const char* label) {
    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (std::abs(norm - 1.0) > kCandidateUnitTol) {
        throw NotUnitVector(std::string(label) + " must be a unit 3-vector, norm is " +
                            std::to_string(norm));
    }
}

/** v . W with W = (U_0, U_{1/2}, i U_0 U_{1/2}). */
AlgebraElement direction_dot_w(const Direction& v) {
    AlgebraElement out;
    out.add_term(Monomial::generator(Site::integer(0)), v[0]);
    out.add_term(Monomial::generator(Site::half(0)), v[1]);
    out.add_term(Monomial{{Site::integer(0), Site::half(0)}}, Complex(0.0, v[2]));
    return out;
}

}  // namespace

DirectionGrid DirectionGrid::standard() {
    const double s = 1.0 / std::sqrt(2.0);
    DirectionGrid grid;
    grid.a = {Direction{0.0, 1.0, 0.0}, Direction{1.0, 0.0, 0.0}};
    grid.b = {Direction{s, s, 0.0}, Direction{-s, s, 0.0}};
    return grid;
}

void SearchConfig::validate() const {
    if (resolution < 2) throw MalformedInput("search resolution must be at least 2");
    if (budget < 1) throw MalformedInput("search budget must be at least 1");
}

AlgebraElement build_candidate(const CandidateC& cand) {
    require_unit(cand.c, "c");
    require_unit(cand.c_prime, "c_prime");

    const AlgebraElement one = AlgebraElement::identity();
    const AlgebraElement v =
        AlgebraElement::monomial(Monomial{{Site::half(-1), Site::half(0)}});

    AlgebraElement even = one + v;   // projects onto the +1 sector of V (x2)
    AlgebraElement odd = one - v;
    AlgebraElement out = even * (one + direction_dot_w(cand.c));
    out += odd * (one + direction_dot_w(cand.c_prime));
    out *= 0.25;
    return out;
}

CausalVerdict verify_prop3(const DirectionGrid& directions, const CandidateC& cand,
                           double lambda, double tol) {
    const LatticeState state = state_family(lambda);

    std::vector<ProjectionPair> pairs;
    pairs.reserve(4);
    for (const Direction& a : directions.a) {
        for (const Direction& b : directions.b) {
            pairs.push_back({spin_projection_left(a), spin_projection_right(b)});
        }
    }

    const AlgebraElement c = build_candidate(cand);
    PartitionOfUnit partition{{c, AlgebraElement::identity() - c}};
    return verify_joint_ccs(state, pairs, partition, tol);
}

Eigen::MatrixXcd candidate_affine_map(const WindowAlgebra& algebra) {
    // Expanding the two sector products,
    //   C = 1/2 + sum_i c_i (W_i + V W_i)/4 + sum_i c'_i (W_i - V W_i)/4.
    const AlgebraElement v =
        AlgebraElement::monomial(Monomial{{Site::half(-1), Site::half(0)}});
    const std::array<Direction, 3> axes = {Direction{1.0, 0.0, 0.0},
                                           Direction{0.0, 1.0, 0.0},
                                           Direction{0.0, 0.0, 1.0}};

    Eigen::MatrixXcd map = Eigen::MatrixXcd::Zero(algebra.basis_size(), 7);
    map.col(0) = algebra.to_dense(0.5 * AlgebraElement::identity());
    for (int i = 0; i < 3; ++i) {
        const AlgebraElement w = direction_dot_w(axes[static_cast<std::size_t>(i)]);
        const AlgebraElement vw = mul(v, w);
        map.col(1 + i) = algebra.to_dense(0.25 * (w + vw));
        map.col(4 + i) = algebra.to_dense(0.25 * (w - vw));
    }
    return map;
}

namespace {

/** One point of the sphere grid: poles appear once, other polar rings carry
 *  a full circle of azimuths. */
struct SpherePoint {
    double polar = 0.0;
    double azimuth = 0.0;
};

Direction sphere_direction(double polar, double azimuth) {
    return Direction{std::cos(polar), std::sin(polar) * std::cos(azimuth),
                     std::sin(polar) * std::sin(azimuth)};
}

std::vector<SpherePoint> sphere_grid(int resolution) {
    std::vector<SpherePoint> points;
    for (int j = 0; j <= resolution; ++j) {
        const double polar = M_PI * j / resolution;
        if (j == 0 || j == resolution) {
            points.push_back({polar, 0.0});
            continue;
        }
        for (int k = 0; k < resolution; ++k) {
            points.push_back({polar, 2.0 * M_PI * k / resolution});
        }
    }
    return points;
}

Eigen::VectorXd angles_to_params(double pc, double ac, double pp, double ap) {
    const Direction c = sphere_direction(pc, ac);
    const Direction cp = sphere_direction(pp, ap);
    Eigen::VectorXd t(6);
    t << c[0], c[1], c[2], cp[0], cp[1], cp[2];
    return t;
}

CandidateC params_to_candidate(const Eigen::VectorXd& t) {
    CandidateC cand;
    cand.c = {t(0), t(1), t(2)};
    cand.c_prime = {t(3), t(4), t(5)};
    return cand;
}

std::vector<ProjectionPair> grid_to_pairs(const DirectionGrid& directions) {
    std::vector<ProjectionPair> pairs;
    pairs.reserve(4);
    for (const Direction& a : directions.a) {
        for (const Direction& b : directions.b) {
            pairs.push_back({spin_projection_left(a), spin_projection_right(b)});
        }
    }
    return pairs;
}

}  // namespace

SearchResult search_noncommuting(const LatticeState& state,
                                 const DirectionGrid& directions,
                                 const SearchConfig& config) {
    config.validate();

    const WindowAlgebra algebra(Window{-2, 2});
    const std::vector<ProjectionPair> pairs = grid_to_pairs(directions);
    const ScreeningForms forms(algebra, state, pairs, candidate_affine_map(algebra));

    const std::vector<SpherePoint> points = sphere_grid(config.resolution);
    const std::int64_t per_sphere = static_cast<std::int64_t>(points.size());
    const std::int64_t grid_total = per_sphere * per_sphere;

    SearchResult result;
    result.best_residual = std::numeric_limits<double>::infinity();
    std::int64_t best_index = -1;

    // Fixed-size blocks are evaluated in parallel into a buffer, then scanned
    // in index order, so the outcome does not depend on the worker count.
    constexpr std::int64_t kBlock = 1 << 16;
    std::vector<double> buffer(static_cast<std::size_t>(std::min(kBlock, grid_total)));
    for (std::int64_t lo = 0; lo < grid_total; lo += kBlock) {
        const std::int64_t hi = std::min(lo + kBlock, grid_total);
#pragma omp parallel for schedule(static)
        for (std::int64_t g = lo; g < hi; ++g) {
            const SpherePoint& pc = points[static_cast<std::size_t>(g / per_sphere)];
            const SpherePoint& pp = points[static_cast<std::size_t>(g % per_sphere)];
            buffer[static_cast<std::size_t>(g - lo)] = forms.worst_residual(
                angles_to_params(pc.polar, pc.azimuth, pp.polar, pp.azimuth));
        }
        for (std::int64_t g = lo; g < hi; ++g) {
            const double value = buffer[static_cast<std::size_t>(g - lo)];
            if (value < result.best_residual) {
                result.best_residual = value;
                best_index = g;
            }
            if (value <= config.tol) {
                const SpherePoint& pc = points[static_cast<std::size_t>(g / per_sphere)];
                const SpherePoint& pp = points[static_cast<std::size_t>(g % per_sphere)];
                result.solutions.push_back({params_to_candidate(angles_to_params(
                                                pc.polar, pc.azimuth, pp.polar, pp.azimuth)),
                                            value});
            }
        }
    }
    result.evaluations = grid_total;

    // Coordinate descent on the four angles from the best grid point.
    std::array<double, 4> angles = {
        points[static_cast<std::size_t>(best_index / per_sphere)].polar,
        points[static_cast<std::size_t>(best_index / per_sphere)].azimuth,
        points[static_cast<std::size_t>(best_index % per_sphere)].polar,
        points[static_cast<std::size_t>(best_index % per_sphere)].azimuth};
    auto eval_angles = [&](const std::array<double, 4>& a) {
        return forms.worst_residual(angles_to_params(a[0], a[1], a[2], a[3]));
    };
    double best_value = result.best_residual;
    double step = M_PI / config.resolution;
    std::int64_t refine_evals = 0;
    while (step > 1e-10 && refine_evals < config.budget) {
        bool improved = false;
        for (std::size_t i = 0; i < 4 && refine_evals < config.budget; ++i) {
            for (const double delta : {step, -step}) {
                std::array<double, 4> trial = angles;
                trial[i] += delta;
                if (i % 2 == 0) trial[i] = std::clamp(trial[i], 0.0, M_PI);
                const double value = eval_angles(trial);
                ++refine_evals;
                if (value < best_value) {
                    best_value = value;
                    angles = trial;
                    improved = true;
                    break;
                }
                if (refine_evals >= config.budget) break;
            }
        }
        if (!improved) step *= 0.5;
    }
    result.evaluations += refine_evals;
    result.best_residual = best_value;
    result.best_params =
        params_to_candidate(angles_to_params(angles[0], angles[1], angles[2], angles[3]));
    result.satisfied = result.best_residual <= config.tol;
    return result;
}

namespace {

/** Real span basis of the Hermitian elements of a complex *-closed span:
 *  Gram-Schmidt over the dense coefficient vectors with the real part of the
 *  Hilbert-Schmidt pairing. */
std::vector<Eigen::VectorXcd> hermitian_basis(const WindowAlgebra& algebra,
                                              const std::vector<AlgebraElement>& span) {
    std::vector<Eigen::VectorXcd> basis;
    auto push = [&](const AlgebraElement& h) {
        Eigen::VectorXcd v = algebra.to_dense(h);
        if (v.norm() < 1e-12) return;
        v /= v.norm();
        for (const Eigen::VectorXcd& u : basis) {
            v -= u * (u.dot(v)).real();
        }
        const double norm = v.norm();
        if (norm > 1e-8) basis.push_back(v / norm);
    };
    for (const AlgebraElement& g : span) {
        const AlgebraElement g_adj = adjoint(g);
        push(g + g_adj);
        push(Complex(0.0, 1.0) * (g - g_adj));
    }
    return basis;
}

/** Least-squares expansion of a Hermitian dense vector in a real-span basis. */
std::vector<double> expand_real(const std::vector<Eigen::VectorXcd>& basis,
                                const Eigen::VectorXcd& target) {
    std::vector<double> coeffs;
    coeffs.reserve(basis.size());
    for (const Eigen::VectorXcd& u : basis) {
        coeffs.push_back(u.dot(target).real());
    }
    return coeffs;
}

}  // namespace

SearchResult search_commuting(const LatticeState& state,
                              const std::vector<ProjectionPair>& pairs,
                              const Region& ambient, const SearchConfig& config) {
    config.validate();
    if (ambient.empty() || pairs.empty()) {
        throw UnsupportedRegion("commuting search needs pairs and a nonempty ambient region");
    }
    for (const ProjectionPair& pair : pairs) {
        for (const AlgebraElement* side : {&pair.a, &pair.b}) {
            for (const Site& s : side->support()) {
                const MinimalDoubleCone cone = MinimalDoubleCone::slice_cone(s);
                const auto& cones = ambient.cones();
                if (std::find(cones.begin(), cones.end(), cone) == cones.end()) {
                    throw UnsupportedRegion(
                        "ambient region does not contain every pair's support");
                }
            }
        }
    }

    int lo = ambient.cones().front().i2;
    int hi = lo;
    for (const MinimalDoubleCone& cone : ambient.cones()) {
        lo = std::min(lo, cone.i2);
        hi = std::max(hi, cone.i2);
    }
    const Window window{lo, hi};
    const WindowAlgebra algebra(window);

    std::vector<AlgebraElement> generators;
    for (const ProjectionPair& pair : pairs) {
        generators.push_back(pair.a);
        generators.push_back(pair.b);
    }
    const std::vector<Eigen::VectorXcd> basis =
        hermitian_basis(algebra, commutant_in(generators, ambient));
    const int d = static_cast<int>(basis.size());

    Eigen::MatrixXcd affine = Eigen::MatrixXcd::Zero(algebra.basis_size(), d + 1);
    for (int i = 0; i < d; ++i) affine.col(i + 1) = basis[static_cast<std::size_t>(i)];
    const ScreeningForms forms(algebra, state, pairs, affine);

    std::mt19937_64 eng(config.seed);
    auto uniform = [&]() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };
    auto gauss = [&]() {
        double u = 0.0;
        while (u == 0.0) u = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * uniform());
    };

    SearchResult result;
    result.best_residual = std::numeric_limits<double>::infinity();

    auto consider = [&](const PartitionOfUnit& partition, const Eigen::VectorXcd& cell) {
        const CausalVerdict verdict = verify_joint_ccs(state, pairs, partition, config.tol);
        ++result.evaluations;
        const double value = verdict.worst_residual();
        if (value < result.best_residual) {
            result.best_residual = value;
            result.best_coefficients = expand_real(basis, cell);
        }
    };

    // The unit partition is always available and anchors the result even on
    // a budget of one.
    consider(PartitionOfUnit{{AlgebraElement::identity()}},
             algebra.to_dense(AlgebraElement::identity()));

    /** Spectral rounding: every split of the eigenvalue clusters of the soft
     *  element yields an exact projection inside the commutant. */
    auto round_and_score = [&](const Eigen::VectorXd& t) {
        if (result.evaluations >= config.budget) return;
        AlgebraElement x = algebra.from_dense(forms.cell_vector(t));
        x = 0.5 * (x + adjoint(x));
        Eigen::SelfAdjointEigenSolver<Matrix> es(rep(x, window));
        const auto& vals = es.eigenvalues();
        const long n = vals.size();
        std::vector<long> starts{0};
        for (long i = 1; i < n; ++i) {
            if (vals(i) - vals(i - 1) > 1e-7) starts.push_back(i);
        }
        for (std::size_t s = 1;
             s < starts.size() && result.evaluations < config.budget; ++s) {
            Matrix proj = Matrix::Zero(window.dimension(), window.dimension());
            for (long i = starts[s]; i < n; ++i) {
                proj += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
            }
            const AlgebraElement p = unrep(proj, window);
            PartitionOfUnit partition{{p, AlgebraElement::identity() - p}};
            try {
                partition.validate();
            } catch (const MalformedPartition&) {
                continue;
            }
            consider(partition, algebra.to_dense(p));
        }
    };

    while (result.evaluations < config.budget && result.best_residual > config.tol) {
        Eigen::VectorXd t(d);
        for (int i = 0; i < d; ++i) t(i) = 0.7 * gauss();
        round_and_score(t);
        if (result.best_residual <= config.tol) break;

        auto objective = [&](const Eigen::VectorXd& u) {
            ++result.evaluations;
            return forms.worst_residual(u) + forms.projection_defect(u);
        };
        double current = objective(t);
        double step = 0.3;
        int accepted = 0;
        for (int iter = 0;
             iter < 300 && result.evaluations + 2 * d + 1 < config.budget &&
             result.best_residual > config.tol;
             ++iter) {
            Eigen::VectorXd grad(d);
            for (int i = 0; i < d; ++i) {
                Eigen::VectorXd up = t, down = t;
                up(i) += 1e-5;
                down(i) -= 1e-5;
                grad(i) = (objective(up) - objective(down)) / 2e-5;
            }
            const double gnorm = grad.norm();
            if (gnorm < 1e-12 || step < 1e-9) break;
            const Eigen::VectorXd trial = t - (step / gnorm) * grad;
            const double value = objective(trial);
            if (value < current) {
                t = trial;
                current = value;
                step *= 1.2;
                if (++accepted % 25 == 0) round_and_score(t);
            } else {
                step *= 0.5;
            }
        }
        round_and_score(t);
    }

    result.satisfied = result.best_residual <= config.tol;
    return result;
}

}  // namespace isinglab

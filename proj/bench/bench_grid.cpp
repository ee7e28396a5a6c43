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
//
// Benchmark of the grid-scan screening evaluation: the symbolic reference
// (candidate partition + joint verdict per point) against the reduced
// quadratic-form kernel, serial and OpenMP-parallel. The kernel paths must
// agree with each other exactly and with the reference to verdict precision;
// the program exits nonzero if they do not, so it doubles as a smoke test.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "isinglab/kernel.hpp"
#include "isinglab/net.hpp"
#include "isinglab/qcausal.hpp"
#include "isinglab/search.hpp"

using namespace isinglab;

namespace {

struct SpherePoint {
    double polar = 0.0;
    double azimuth = 0.0;
};

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

Direction sphere_direction(double polar, double azimuth) {
    return Direction{std::cos(polar), std::sin(polar) * std::cos(azimuth),
                     std::sin(polar) * std::sin(azimuth)};
}

CandidateC candidate_at(const SpherePoint& pc, const SpherePoint& pp) {
    CandidateC cand;
    cand.c = sphere_direction(pc.polar, pc.azimuth);
    cand.c_prime = sphere_direction(pp.polar, pp.azimuth);
    return cand;
}

Eigen::VectorXd params_at(const SpherePoint& pc, const SpherePoint& pp) {
    const CandidateC cand = candidate_at(pc, pp);
    Eigen::VectorXd t(6);
    t << cand.c[0], cand.c[1], cand.c[2], cand.c_prime[0], cand.c_prime[1],
        cand.c_prime[2];
    return t;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    int resolution = 12;
    int symbolic_cap = 300;
    double lambda = 1.0;

    CLI::App app{"screening grid scan benchmark: symbolic reference vs kernel"};
    app.add_option("--resolution", resolution,
                   "grid points per angular coordinate (>= 2)");
    app.add_option("--symbolic-cap", symbolic_cap,
                   "max grid points timed through the symbolic path");
    app.add_option("--lambda", lambda, "state interpolation parameter in [0, 1]");
    CLI11_PARSE(app, argc, argv);
    if (resolution < 2 || symbolic_cap < 1 || lambda < 0.0 || lambda > 1.0) {
        std::fprintf(stderr, "invalid arguments\n");
        return 2;
    }

    const LatticeState state = state_family(lambda);
    const DirectionGrid directions = DirectionGrid::standard();
    std::vector<ProjectionPair> pairs;
    for (const Direction& a : directions.a) {
        for (const Direction& b : directions.b) {
            pairs.push_back({spin_projection_left(a), spin_projection_right(b)});
        }
    }

    const WindowAlgebra algebra(Window{-2, 2});
    const ScreeningForms forms(algebra, state, pairs,
                               candidate_affine_map(algebra));

    const std::vector<SpherePoint> points = sphere_grid(resolution);
    const std::size_t per_sphere = points.size();
    const std::size_t total = per_sphere * per_sphere;
    auto point_pair = [&](std::size_t g) {
        return std::pair<const SpherePoint&, const SpherePoint&>(
            points[g / per_sphere], points[g % per_sphere]);
    };

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("grid: %zu points per sphere, %zu candidate pairs, %d thread%s\n",
                per_sphere, total, threads, threads == 1 ? "" : "s");

    // Serial kernel pass.
    std::vector<double> serial(total);
    const auto t_serial = std::chrono::steady_clock::now();
    for (std::size_t g = 0; g < total; ++g) {
        const auto [pc, pp] = point_pair(g);
        serial[g] = forms.worst_residual(params_at(pc, pp));
    }
    const double serial_s = seconds_since(t_serial);

    // Parallel kernel pass: identical arithmetic per point, so the results
    // must agree bit for bit with the serial pass.
    std::vector<double> parallel(total);
    const auto t_parallel = std::chrono::steady_clock::now();
#pragma omp parallel for schedule(static)
    for (std::int64_t g = 0; g < static_cast<std::int64_t>(total); ++g) {
        const auto [pc, pp] = point_pair(static_cast<std::size_t>(g));
        parallel[static_cast<std::size_t>(g)] =
            forms.worst_residual(params_at(pc, pp));
    }
    const double parallel_s = seconds_since(t_parallel);

    double kernel_gap = 0.0;
    for (std::size_t g = 0; g < total; ++g) {
        kernel_gap = std::max(kernel_gap, std::abs(serial[g] - parallel[g]));
    }

    // Symbolic reference on a prefix of the grid.
    const std::size_t sampled =
        std::min(total, static_cast<std::size_t>(symbolic_cap));
    double reference_gap = 0.0;
    const auto t_symbolic = std::chrono::steady_clock::now();
    for (std::size_t g = 0; g < sampled; ++g) {
        const auto [pc, pp] = point_pair(g);
        const AlgebraElement cell = build_candidate(candidate_at(pc, pp));
        const PartitionOfUnit partition{
            {cell, AlgebraElement::identity() - cell}};
        const CausalVerdict verdict = verify_joint_ccs(state, pairs, partition);
        reference_gap =
            std::max(reference_gap, std::abs(verdict.worst_residual() - serial[g]));
    }
    const double symbolic_s = seconds_since(t_symbolic);

    double best = serial[0];
    std::size_t solutions = 0;
    for (double r : serial) {
        best = std::min(best, r);
        if (r <= 1e-10) ++solutions;
    }

    const double symbolic_per = symbolic_s / static_cast<double>(sampled);
    const double serial_per = serial_s / static_cast<double>(total);
    const double parallel_per = parallel_s / static_cast<double>(total);
    std::printf("symbolic reference: %8.3f ms/point over %zu points\n",
                symbolic_per * 1e3, sampled);
    std::printf("kernel serial:      %8.3f us/point over %zu points (%.0fx)\n",
                serial_per * 1e6, total, symbolic_per / serial_per);
    std::printf("kernel parallel:    %8.3f us/point over %zu points (%.2fx serial)\n",
                parallel_per * 1e6, total, serial_per / parallel_per);
    std::printf("best residual %.17g, %zu grid solutions at 1e-10\n", best,
                solutions);
    std::printf("agreement: kernel serial vs parallel %.3g, vs symbolic %.3g\n",
                kernel_gap, reference_gap);

    if (kernel_gap != 0.0) {
        std::fprintf(stderr, "kernel paths disagree\n");
        return 1;
    }
    if (reference_gap > 1e-10) {
        std::fprintf(stderr, "kernel drifted from the symbolic reference\n");
        return 1;
    }
    return 0;
}

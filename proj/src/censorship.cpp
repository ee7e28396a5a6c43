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

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "isinglab/classical.hpp"

namespace isinglab {

namespace {

constexpr double kMatrixTol = 1e-9;

void require_density(const Matrix& rho) {
    if (rho.rows() == 0 || rho.rows() != rho.cols())
        throw MalformedGamma("state matrix is not square");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kMatrixTol)
        throw MalformedGamma("state matrix is not self-adjoint");
    if (std::abs(rho.trace().real() - 1.0) > kMatrixTol ||
        std::abs(rho.trace().imag()) > kMatrixTol)
        throw MalformedGamma("state matrix does not have unit trace");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho,
                                                 Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kMatrixTol)
        throw MalformedGamma("state matrix is not positive");
}

void require_partition_of_unit(const std::vector<Matrix>& family,
                               Eigen::Index dim) {
    if (family.empty()) throw MalformedGamma("empty projection family");
    Matrix sum = Matrix::Zero(dim, dim);
    for (const Matrix& p : family) {
        if (p.rows() != dim || p.cols() != dim)
            throw MalformedGamma("projection dimension mismatch");
        if ((p - p.adjoint()).cwiseAbs().maxCoeff() > kMatrixTol)
            throw MalformedGamma("family member is not self-adjoint");
        if ((p * p - p).cwiseAbs().maxCoeff() > kMatrixTol)
            throw MalformedGamma("family member is not idempotent");
        sum += p;
    }
    if ((sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() > kMatrixTol)
        throw MalformedGamma("family does not sum to the identity");
}

}  // namespace

CensorshipResult censorship_construct(
    const Matrix& rho, const std::vector<std::vector<Matrix>>& gamma,
    const std::vector<double>& p0) {
    require_density(rho);
    if (gamma.empty()) throw MalformedGamma("no measurement contexts");
    if (p0.size() != gamma.size())
        throw MalformedGamma("one context weight per family is required");
    double p0_sum = 0.0;
    for (double w : p0) {
        if (!(w > 0.0))
            throw MalformedGamma("context weights must be strictly positive");
        p0_sum += w;
    }
    if (std::abs(p0_sum - 1.0) > 1e-12)
        throw MalformedGamma("context weights do not sum to 1");
    for (const auto& family : gamma)
        require_partition_of_unit(family, rho.rows());

    CensorshipResult result;
    std::vector<std::vector<double>> quantum(gamma.size());
    for (std::size_t q = 0; q < gamma.size(); ++q) {
        std::vector<Event> outcomes;
        Event setting;
        for (std::size_t j = 0; j < gamma[q].size(); ++j) {
            const int atom = result.space.size();
            result.space.atoms.push_back("Q" + std::to_string(q) + ":X" +
                                         std::to_string(j));
            const double phi =
                std::max(0.0, (rho * gamma[q][j]).trace().real());
            quantum[q].push_back(phi);
            result.space.weights.push_back(p0[q] * phi);
            outcomes.push_back(Event{{atom}});
            setting.members.push_back(atom);
        }
        result.outcome_events.push_back(std::move(outcomes));
        result.setting_events.push_back(std::move(setting));
    }
    result.space.validate();

    result.outcomes_inside_settings = true;
    result.settings_disjoint = true;
    for (std::size_t q = 0; q < gamma.size(); ++q) {
        for (const Event& x : result.outcome_events[q]) {
            if (!event_subset(x, result.setting_events[q]))
                result.outcomes_inside_settings = false;
        }
        for (std::size_t r = q + 1; r < gamma.size(); ++r) {
            if (!event_and(result.setting_events[q],
                           result.setting_events[r])
                     .members.empty())
                result.settings_disjoint = false;
        }
        const double weight = prob(result.space, result.setting_events[q]);
        result.setting_weight_defect =
            std::max(result.setting_weight_defect, std::abs(weight - p0[q]));
        for (std::size_t j = 0; j < gamma[q].size(); ++j) {
            const double classical = cond(result.space,
                                          result.outcome_events[q][j],
                                          result.setting_events[q]);
            result.conditional_defect =
                std::max(result.conditional_defect,
                         std::abs(classical - quantum[q][j]));
        }
    }
    return result;
}

}  // namespace isinglab

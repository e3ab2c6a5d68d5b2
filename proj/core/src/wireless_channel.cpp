// SPDX-License-Identifier: Apache-2.0
//
// pinch-est: channel estimation simulator for pinching-antenna systems
// Copyright (C) 2026 The pinch-est authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "pinch/wireless_channel.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace pinch
{
    namespace
    {
        // e^{-j 2 pi r / lambda} / r with whole wavelengths removed first.
        Complex spherical_term(double distance, double wavelength)
        {
            double cycles = distance / wavelength;
            cycles -= std::floor(cycles);
            return std::polar(1.0 / distance, -2.0 * std::numbers::pi * cycles);
        }
    } // namespace

    void DeploymentRegion::validate() const
    {
        if (!(width_x > 0.0 && width_y > 0.0 && height > 0.0))
            throw ContractError("region dimensions and waveguide height must be positive");
        if (pa_positions.empty())
            throw ContractError("region has no PA positions");
        const double y0 = pa_positions.front().y();
        for (const auto &p : pa_positions)
        {
            if (p.y() != y0)
                throw ContractError("PA positions must share one y-coordinate (waveguide parallel to x)");
            if (!p.allFinite())
                throw ContractError("PA positions must be finite");
        }
    }

    DeploymentRegion DeploymentRegion::from_layout(const WaveguideLayout &layout, double width_x,
                                                   double width_y, double height, double waveguide_y)
    {
        layout.validate();
        DeploymentRegion region;
        region.width_x = width_x;
        region.width_y = width_y;
        region.height = height;
        region.pa_positions.reserve(layout.size());
        for (double x : layout.pa_positions)
            region.pa_positions.emplace_back(x, waveguide_y, height);
        region.validate();
        return region;
    }

    void UePlacement::validate(const DeploymentRegion &region) const
    {
        if (position.z() != 0.0)
            throw ContractError("UE must lie on the ground plane (z = 0)");
        if (position.x() < 0.0 || position.x() > region.width_x || position.y() < 0.0 ||
            position.y() > region.width_y)
            throw ContractError(fmt::format("UE ({}, {}) lies outside the {} x {} m region",
                                            position.x(), position.y(), region.width_x, region.width_y));
    }

    void ScattererSet::validate() const
    {
        if (!gains.empty() && gains.size() != positions.size())
            throw ContractError("scatterer gain and position lists differ in length");
        if (!positions.empty() && !(gain_variance > 0.0))
            throw ContractError("scatterer gain variance must be positive");
        if (!(path_loss_ref > 0.0))
            throw ContractError("path-loss reference beta_0 must be positive");
        if (!(wavelength > 0.0))
            throw ContractError("carrier wavelength must be positive");
    }

    double free_space_reference(double wavelength)
    {
        const double r = wavelength / (4.0 * std::numbers::pi);
        return r * r;
    }

    ComplexVector los_component(const UePlacement &ue, const DeploymentRegion &region,
                                const VisibilityVector &visibility, double path_loss_ref, double wavelength)
    {
        region.validate();
        ue.validate(region);
        if (visibility.size() != region.size())
            throw ContractError(fmt::format("visibility vector has {} entries, expected {}",
                                            visibility.size(), region.size()));
        if (!(path_loss_ref > 0.0 && wavelength > 0.0))
            throw ContractError("beta_0 and wavelength must be positive");

        const double amp = std::sqrt(path_loss_ref);
        ComplexVector h = ComplexVector::Zero(static_cast<Eigen::Index>(region.size()));
        for (std::size_t n = 0; n < region.size(); ++n)
        {
            if (visibility[n] > 1)
                throw ContractError("visibility entries must be 0 or 1");
            const double r = (ue.position - region.pa_positions[n]).norm();
            if (!(r > 0.0))
                throw SingularityError(fmt::format("UE coincides with PA {}", n + 1));
            if (visibility[n] == 1)
                h(static_cast<Eigen::Index>(n)) = amp * spherical_term(r, wavelength);
        }
        return h;
    }

    ComplexVector nlos_component(const ScattererSet &scatterers, const DeploymentRegion &region)
    {
        region.validate();
        const auto n_pas = static_cast<Eigen::Index>(region.size());
        ComplexVector h = ComplexVector::Zero(n_pas);
        if (scatterers.size() == 0)
            return h;
        scatterers.validate();
        if (scatterers.gains.size() != scatterers.size())
            throw ContractError("scatterer gains have not been drawn");

        for (std::size_t s = 0; s < scatterers.size(); ++s)
        {
            for (Eigen::Index n = 0; n < n_pas; ++n)
            {
                const double r = (scatterers.positions[s] - region.pa_positions[static_cast<std::size_t>(n)]).norm();
                if (!(r > 0.0))
                    throw SingularityError(fmt::format("scatterer {} coincides with PA {}", s + 1, n + 1));
                h(n) += scatterers.gains[s] * spherical_term(r, scatterers.wavelength);
            }
        }
        h *= std::sqrt(scatterers.path_loss_ref / static_cast<double>(scatterers.size()));
        return h;
    }

    void draw_scatterer_gains(ScattererSet &scatterers, Engine &engine)
    {
        scatterers.gains.resize(scatterers.size());
        for (auto &xi : scatterers.gains)
            xi = complex_gaussian(engine, scatterers.gain_variance);
    }

    ComplexVector sample_channel(const DeploymentRegion &region, const UePlacement &ue, ScattererSet scatterers,
                                 const VisibilityVector &visibility, std::uint64_t seed)
    {
        auto engine = make_engine(seed);
        draw_scatterer_gains(scatterers, engine);
        return los_component(ue, region, visibility, scatterers.path_loss_ref, scatterers.wavelength) +
               nlos_component(scatterers, region);
    }
} // namespace pinch

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

#ifndef PINCH_WIRELESS_CHANNEL_HPP
#define PINCH_WIRELESS_CHANNEL_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "pinch/rng.hpp"
#include "pinch/types.hpp"
#include "pinch/waveguide.hpp"

namespace pinch
{
    using Position = Eigen::Vector3d;

    /*!
     * Rectangular service area on the x-y plane and the 3-D PA positions of a
     * waveguide mounted at `height` parallel to the x-axis.
     */
    struct DeploymentRegion
    {
        double width_x = 10.0; ///< D_x [m]
        double width_y = 6.0;  ///< D_y [m]
        double height = 3.0;   ///< waveguide height d [m]
        std::vector<Position> pa_positions;

        std::size_t size() const noexcept { return pa_positions.size(); }
        void validate() const;

        /// PA n sits at (pa_positions[n], waveguide_y, height) of the 1-D layout.
        static DeploymentRegion from_layout(const WaveguideLayout &layout, double width_x, double width_y,
                                            double height, double waveguide_y);
    };

    /// UE on the ground plane, (x, y, 0).
    struct UePlacement
    {
        Position position{0.0, 0.0, 0.0};

        /// Throws ContractError unless z == 0 and (x, y) lies inside the region.
        void validate(const DeploymentRegion &region) const;
    };

    struct ScattererSet
    {
        std::vector<Position> positions;
        std::vector<Complex> gains; ///< xi_s, one per position once drawn
        double gain_variance = 1.0; ///< sigma_s^2
        double path_loss_ref = 0.0; ///< beta_0
        double wavelength = 0.0;    ///< carrier lambda [m]

        std::size_t size() const noexcept { return positions.size(); }
        void validate() const;
    };

    /// Upsilon: 1 if PA n is visible from the UE, 0 if blocked.
    using VisibilityVector = std::vector<std::uint8_t>;

    /// Free-space reference gain at 1 m, (lambda / 4 pi)^2.
    double free_space_reference(double wavelength);

    /// LoS part: upsilon_n sqrt(beta_0) e^{-j 2 pi r_n / lambda} / r_n.
    ComplexVector los_component(const UePlacement &ue, const DeploymentRegion &region,
                                const VisibilityVector &visibility, double path_loss_ref, double wavelength);

    /// Spherical-wave NLoS part sqrt(beta_0 / S) sum_s xi_s a_s. Zero vector when S = 0.
    ComplexVector nlos_component(const ScattererSet &scatterers, const DeploymentRegion &region);

    /// Fill scatterers.gains with fresh CN(0, sigma_s^2) draws.
    void draw_scatterer_gains(ScattererSet &scatterers, Engine &engine);

    /// h = h_LoS + h_NLoS with scatterer gains drawn from `seed`.
    ComplexVector sample_channel(const DeploymentRegion &region, const UePlacement &ue, ScattererSet scatterers,
                                 const VisibilityVector &visibility, std::uint64_t seed);
} // namespace pinch

#endif

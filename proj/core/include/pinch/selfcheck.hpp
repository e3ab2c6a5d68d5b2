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

#ifndef PINCH_SELFCHECK_HPP
#define PINCH_SELFCHECK_HPP

#include <string>
#include <vector>

#include "pinch/config.hpp"

namespace pinch
{
    struct CheckResult
    {
        std::string name;
        bool passed = false;
        std::string detail;
    };

    /// Built-in oracle suite: Gram identities, closed-form vs Monte Carlo MSE,
    /// conditioning, energy conservation and the up/downlink identities.
    std::vector<CheckResult> run_selfcheck(const ExperimentConfig &config);
} // namespace pinch

#endif

// SPDX-License-Identifier: Apache-2.0
//
// chansim - statistical millimeter-wave channel simulator
// Copyright (C) 2026 chansim contributors
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

#include "chansim/common.hpp"

#include <cstdio>

namespace chansim {

std::string format_fixed6(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    if (x == 0.0) // covers -0.0 as well
        return "0.00000";

    // Decimal places so that the total count of significant digits is 6;
    // values >= 1e6 keep all their integer digits.
    const double mag = std::floor(std::log10(std::fabs(x)));
    int decimals = 5 - static_cast<int>(mag);
    if (decimals < 0)
        decimals = 0;
    if (decimals > 17)
        decimals = 17;

    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
    return buf;
}

} // namespace chansim

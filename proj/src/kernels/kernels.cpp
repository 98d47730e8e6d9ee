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

#include "chansim/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace chansim::kernels {

namespace {

const KernelSet& select()
{
    const char* req = std::getenv("CHANSIM_KERNELS");
    if (req != nullptr) {
        if (std::strcmp(req, "scalar") == 0)
            return scalar_kernels();
        if (std::strcmp(req, "avx2") == 0) {
            const KernelSet* s = avx2_kernels();
            if (s != nullptr)
                return *s;
            // requested variant unsupported on this CPU; fall through
        }
    }
    const KernelSet* s = avx2_kernels();
    return s != nullptr ? *s : scalar_kernels();
}

} // namespace

const KernelSet& active_kernels()
{
    static const KernelSet& set = select();
    return set;
}

} // namespace chansim::kernels

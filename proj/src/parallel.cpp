// Copyright 2026 The boolcube-vqml Authors
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
#include "boolcube/parallel.hpp"

#include <cstdlib>
#include <string>

namespace boolcube {

unsigned worker_count() {
    const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("BOOLCUBE_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) {
                return static_cast<unsigned>(std::min<long>(v, hw));
            }
        } catch (const std::exception &) {
            // fall through to the hardware default
        }
    }
    return hw;
}

} // namespace boolcube

// Copyright 2026 The gqca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gqca/transport.hpp"

namespace gqca {

PulseSequence transport(long steps) {
    PulseSequence seq;
    if (steps == 0) {
        return seq;
    }
    const size_t count = static_cast<size_t>(steps > 0 ? steps : -steps);
    CellType first = steps > 0 ? CellType::B : CellType::A;
    CellType second = steps > 0 ? CellType::A : CellType::B;
    seq.reserve(count);
    for (size_t k = 0; k < count; ++k) {
        seq.emplace_back(k % 2 == 0 ? first : second, 0);
    }
    return seq;
}

}  // namespace gqca

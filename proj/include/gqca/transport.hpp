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

#pragma once

#include "gqca/rule.hpp"

namespace gqca {

/// Alternating field-0 inversion pulses. With the canonical parities (qubit
/// slots even, CU slot odd), transport(k > 0) starts with B0 and moves the CU
/// k cells right while every qubit moves k cells left; transport(k < 0)
/// starts with A0 and does the opposite. One pulse per cell of CU motion,
/// so the CU moves 2|k| cells relative to the qubits.
PulseSequence transport(long steps);

}  // namespace gqca

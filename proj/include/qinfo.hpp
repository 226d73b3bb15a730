// Copyright 2026 The qinfo Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Convenience header pulling in the whole library.
 */
#pragma once

#include "qinfo/bell.hpp"
#include "qinfo/circuit.hpp"
#include "qinfo/core.hpp"
#include "qinfo/density.hpp"
#include "qinfo/dynamics.hpp"
#include "qinfo/experiments.hpp"
#include "qinfo/info.hpp"
#include "qinfo/lattice.hpp"
#include "qinfo/oscillators.hpp"
#include "qinfo/qstate.hpp"

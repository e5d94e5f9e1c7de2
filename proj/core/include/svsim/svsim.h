// Copyright 2026 The svsim Authors
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


#ifndef SVSIM_SVSIM_H_
#define SVSIM_SVSIM_H_

#include "svsim/backend.h"
#include "svsim/circuit.h"
#include "svsim/circuit_io.h"
#include "svsim/circuitgen.h"
#include "svsim/common.h"
#include "svsim/gate.h"
#include "svsim/harness.h"
#include "svsim/rng.h"
#include "svsim/state.h"
#include "svsim/verify.h"
#include "svsim/version.h"

#endif  // SVSIM_SVSIM_H_

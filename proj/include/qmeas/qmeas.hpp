// Copyright 2026 The qmeas developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header.

#pragma once

#include "qmeas/bayes.hpp"
#include "qmeas/chain.hpp"
#include "qmeas/checks.hpp"
#include "qmeas/distributions.hpp"
#include "qmeas/kernel.hpp"
#include "qmeas/linalg.hpp"
#include "qmeas/model.hpp"
#include "qmeas/repeatability.hpp"
#include "qmeas/report.hpp"
#include "qmeas/rng.hpp"
#include "qmeas/scenario.hpp"
#include "qmeas/spectral.hpp"
#include "qmeas/state.hpp"
#include "qmeas/stock.hpp"
#include "qmeas/types.hpp"

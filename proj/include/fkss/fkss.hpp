// Copyright 2026 The fkss Authors
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

#ifndef FKSS_FKSS_HPP_
#define FKSS_FKSS_HPP_

#include "fkss/core.hpp"
#include "fkss/exact/brute_force.hpp"
#include "fkss/exact/delta2.hpp"
#include "fkss/exact/laminar.hpp"
#include "fkss/gen.hpp"
#include "fkss/io.hpp"
#include "fkss/lp/feasibility.hpp"
#include "fkss/lp/simplex.hpp"
#include "fkss/rng.hpp"
#include "fkss/rounding/independent.hpp"
#include "fkss/rounding/lll.hpp"
#include "fkss/rounding/pipage.hpp"
#include "fkss/rounding/trials.hpp"
#include "fkss/solve.hpp"
#include "fkss/verify.hpp"

#endif  // FKSS_FKSS_HPP_

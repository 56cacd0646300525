// Copyright 2026 The ratioclust Authors
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

// Umbrella header for the library (excluding the CLI helpers in cli.hpp).

#ifndef RATIOCLUST_RATIOCLUST_HPP_
#define RATIOCLUST_RATIOCLUST_HPP_

#include "ratioclust/bipartize.hpp"
#include "ratioclust/bounds.hpp"
#include "ratioclust/cvwap.hpp"
#include "ratioclust/error.hpp"
#include "ratioclust/graph.hpp"
#include "ratioclust/objectives.hpp"
#include "ratioclust/oracle.hpp"
#include "ratioclust/pipeline.hpp"
#include "ratioclust/rational.hpp"

#endif  // RATIOCLUST_RATIOCLUST_HPP_

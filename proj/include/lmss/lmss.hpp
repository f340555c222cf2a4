// Copyright 2026 The Authors.
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

#pragma once

#include "lmss/corpus.hpp"
#include "lmss/critical.hpp"
#include "lmss/edge_list.hpp"
#include "lmss/errors.hpp"
#include "lmss/generators.hpp"
#include "lmss/graph.hpp"
#include "lmss/greedoid.hpp"
#include "lmss/matching.hpp"
#include "lmss/stability.hpp"

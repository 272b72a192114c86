// Copyright 2026 The HADOF Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include "hadof/bench.hpp"
#include "hadof/decomposition.hpp"
#include "hadof/engine.hpp"
#include "hadof/exact.hpp"
#include "hadof/io.hpp"
#include "hadof/qaoa.hpp"
#include "hadof/qubo.hpp"
#include "hadof/random.hpp"
#include "hadof/report.hpp"
#include "hadof/sa.hpp"
#include "hadof/sample_set.hpp"
#include "hadof/solvers.hpp"

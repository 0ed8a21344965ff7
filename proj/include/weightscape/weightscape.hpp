// Copyright 2026 The Weightscape Authors
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

#include "weightscape/chambers.hpp"
#include "weightscape/degree_cases.hpp"
#include "weightscape/discrepancy.hpp"
#include "weightscape/error.hpp"
#include "weightscape/git.hpp"
#include "weightscape/linear_system.hpp"
#include "weightscape/marked_tree.hpp"
#include "weightscape/named.hpp"
#include "weightscape/rational.hpp"
#include "weightscape/reduction.hpp"
#include "weightscape/strata.hpp"
#include "weightscape/weight_data.hpp"

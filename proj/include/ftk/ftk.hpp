// Copyright 2026 The ftk Authors
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

#include "ftk/algebra.hpp"
#include "ftk/constructors.hpp"
#include "ftk/error.hpp"
#include "ftk/fibrous_preorder.hpp"
#include "ftk/finite_topology.hpp"
#include "ftk/json_io.hpp"
#include "ftk/magma.hpp"
#include "ftk/module_theory.hpp"
#include "ftk/rational.hpp"
#include "ftk/representations.hpp"
#include "ftk/subset.hpp"
#include "ftk/worked_examples.hpp"

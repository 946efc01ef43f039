// Copyright 2026 The k0lab Authors
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

// Umbrella header.

#include "k0lab/cayley.hpp"
#include "k0lab/circulant.hpp"
#include "k0lab/classify.hpp"
#include "k0lab/error.hpp"
#include "k0lab/fin_ab_group.hpp"
#include "k0lab/graph.hpp"
#include "k0lab/group.hpp"
#include "k0lab/integer.hpp"
#include "k0lab/k0.hpp"
#include "k0lab/polynomial.hpp"
#include "k0lab/zmatrix.hpp"

// Copyright 2026 The permdyn Authors.
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


#ifndef PERMDYN_PERMDYN_HPP
#define PERMDYN_PERMDYN_HPP

// Everything except JSON/DOT output, which lives in io.hpp and needs nlohmann/json.
#include "permdyn/dynamics.hpp"
#include "permdyn/field_core.hpp"
#include "permdyn/genirr.hpp"
#include "permdyn/orders.hpp"
#include "permdyn/permgroup.hpp"
#include "permdyn/text.hpp"

#endif  // PERMDYN_PERMDYN_HPP

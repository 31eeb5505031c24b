// Copyright 2026 The bifactor Authors.
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

#ifndef BIFACTOR_BIFACTOR_HPP
#define BIFACTOR_BIFACTOR_HPP

#include "bifactor/criteria.hpp"
#include "bifactor/generator.hpp"
#include "bifactor/instance.hpp"
#include "bifactor/io.hpp"
#include "bifactor/oracle.hpp"
#include "bifactor/result.hpp"
#include "bifactor/solver.hpp"

#endif  // BIFACTOR_BIFACTOR_HPP

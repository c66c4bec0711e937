// Copyright 2026 The hta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef HTA_HTA_HPP
#define HTA_HTA_HPP

#include "hta/closure/closure.hpp"
#include "hta/compile/cda.hpp"
#include "hta/compile/da.hpp"
#include "hta/compile/dfinite.hpp"
#include "hta/compile/rda.hpp"
#include "hta/core/enumerate.hpp"
#include "hta/core/io.hpp"
#include "hta/core/normalize.hpp"
#include "hta/decide/decide.hpp"
#include "hta/series/coefficients.hpp"
#include "hta/species/count.hpp"

#endif  // HTA_HTA_HPP

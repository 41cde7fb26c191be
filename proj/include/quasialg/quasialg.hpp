// Copyright 2026 The quasialg Authors
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

#include "quasialg/cayley_dickson.hpp"
#include "quasialg/cochain.hpp"
#include "quasialg/comeasuring.hpp"
#include "quasialg/error.hpp"
#include "quasialg/fastpath.hpp"
#include "quasialg/group.hpp"
#include "quasialg/hadamard.hpp"
#include "quasialg/quasialgebra.hpp"
#include "quasialg/quasimatrix.hpp"
#include "quasialg/rational.hpp"
#include "quasialg/subspace.hpp"
#include "quasialg/zoo.hpp"

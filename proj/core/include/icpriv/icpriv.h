// Copyright 2026 The icpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ICPRIV_ICPRIV_H_
#define ICPRIV_ICPRIV_H_

#include "icpriv/attack.h"
#include "icpriv/bounds.h"
#include "icpriv/distribution.h"
#include "icpriv/errors.h"
#include "icpriv/graph.h"
#include "icpriv/percolation.h"
#include "icpriv/privacy.h"
#include "icpriv/random.h"

#endif  // ICPRIV_ICPRIV_H_

// SPDX-License-Identifier: Apache-2.0
//
// secrecy-lab: secrecy outage analysis for multi-user wiretap uplinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "closed_form.hpp"
#include "config_io.hpp"
#include "model.hpp"
#include "monte_carlo.hpp"
#include "outage_result.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"
#include "quadrature_oracle.hpp"
#include "subset_terms.hpp"
#include "summation.hpp"
#include "sweep.hpp"

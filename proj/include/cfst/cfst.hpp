/*
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include "cfst/axial_response.hpp"
#include "cfst/capacity.hpp"
#include "cfst/cdpm.hpp"
#include "cfst/concrete_model.hpp"
#include "cfst/curves.hpp"
#include "cfst/dataset.hpp"
#include "cfst/material_card.hpp"
#include "cfst/report.hpp"
#include "cfst/section.hpp"
#include "cfst/steel_model.hpp"

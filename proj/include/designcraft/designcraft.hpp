/*
   Copyright 2026 The designcraft Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DESIGNCRAFT_DESIGNCRAFT_HPP
#define DESIGNCRAFT_DESIGNCRAFT_HPP

#include "bch.hpp"
#include "big_int.hpp"
#include "binary_polynomial.hpp"
#include "design.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "families.hpp"
#include "report.hpp"
#include "finite_field.hpp"
#include "linear_code.hpp"
#include "weight_distribution.hpp"
#include "weight_enum.hpp"

#endif  // DESIGNCRAFT_DESIGNCRAFT_HPP

/*
   Copyright 2026 the doquot authors

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

/* Umbrella header for the library proper.  The brute-force cross-checking
   oracles live in doquot/oracle.hpp and are not pulled in here. */

#ifndef DOQUOT_HPP
#define DOQUOT_HPP

#include "doquot/errors.hpp"
#include "doquot/fp.hpp"
#include "doquot/fp_poly.hpp"
#include "doquot/fp_matrix.hpp"
#include "doquot/rcf.hpp"
#include "doquot/field_recognition.hpp"
#include "doquot/ext_field.hpp"
#include "doquot/linearized.hpp"
#include "doquot/do_poly.hpp"
#include "doquot/quot.hpp"
#include "doquot/x2.hpp"
#include "doquot/twisted.hpp"
#include "doquot/json_io.hpp"

#endif

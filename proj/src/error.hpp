/*
  Copyright 2026 The Butson Library Authors

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

#ifndef BUTSON_ERROR_HPP
#define BUTSON_ERROR_HPP

#include <stdexcept>
#include <string>

namespace butson {

enum class ErrorCode {
  Parse,            // malformed group string / JSON / numeric input
  Shape,            // element does not belong to the given group
  NoSquareRoot,     // odd residue on a 2-adic coordinate
  Ingredient,       // an ingredient validation failed
  ConditionsNotMet, // the sufficiency conditions reject (group, h)
  Bound,            // configured work or size bound exceeded
  Internal          // invariant violated; indicates a bug
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

} // namespace butson

#endif

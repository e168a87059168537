// Copyright 2026 The advgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ADVGRAPH_ERRORS_HPP_
#define ADVGRAPH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace advgraph {

// Bad arguments: invalid node ids, illegal actions, dimension mismatches.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An instance that violates a structural invariant (see validate()).
class InvalidInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The strictly-positive minimum stage cost assumption does not hold.
class InfeasibleCondition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A policy or internal routine broke its own contract.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace advgraph

#endif  // ADVGRAPH_ERRORS_HPP_

// Copyright 2026 The Authors.
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

#ifndef NETAUCTION_ERRORS_HPP_
#define NETAUCTION_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace netauction {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A report invents an edge the agent does not have.
class InvalidReport : public Error {
 public:
  using Error::Error;
};

class UnknownAgent : public Error {
 public:
  using Error::Error;
};

// Scenario contents break a model invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A rule or mechanism was applied to a scenario of the other item mode.
class ModeMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SchemaMismatch : public Error {
 public:
  using Error::Error;
};

// A payment formula needed an unbounded critical bid.
class UnboundedPayment : public Error {
 public:
  using Error::Error;
};

class NotComparisonBased : public Error {
 public:
  using Error::Error;
};

class NoWinningBid : public Error {
 public:
  using Error::Error;
};

class SpaceTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace netauction

#endif  // NETAUCTION_ERRORS_HPP_

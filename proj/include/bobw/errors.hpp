// Copyright 2026 The bobw-bandits Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace bobw {

// All library failures derive from BanditError so callers (the CLI in
// particular) can map them to a single "domain error" exit code.
class BanditError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public BanditError {
 public:
  using BanditError::BanditError;
};

class NonUniqueOptimum : public BanditError {
 public:
  using BanditError::BanditError;
};

class BudgetTooSmall : public BanditError {
 public:
  using BanditError::BanditError;
};

// select_arm() on a fixed-confidence policy whose stopping rule already fired.
class Stopped : public BanditError {
 public:
  using BanditError::BanditError;
};

// recommend() on Sequential Halving before its final phase completed.
class Incomplete : public BanditError {
 public:
  using BanditError::BanditError;
};

class ParseError : public BanditError {
 public:
  ParseError(const std::string& what, long line)
      : BanditError(line > 0 ? what + " (line " + std::to_string(line) + ")"
                             : what),
        line_(line) {}

  long line() const { return line_; }

 private:
  long line_;
};

class EmptySelection : public BanditError {
 public:
  using BanditError::BanditError;
};

class UnknownKinase : public BanditError {
 public:
  using BanditError::BanditError;
};

class IoError : public BanditError {
 public:
  using BanditError::BanditError;
};

}  // namespace bobw

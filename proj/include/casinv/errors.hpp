/*
   Copyright 2026 The casinv Authors

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

#pragma once

#include <stdexcept>
#include <string>

namespace casinv {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An exact division left a nonzero remainder.
class NonzeroRemainder : public Error {
   public:
    using Error::Error;
};

class DivisionByZero : public Error {
   public:
    using Error::Error;
};

/// Parameters outside the domain where a family or builder is defined.
class InvalidParams : public Error {
   public:
    using Error::Error;
};

/// A set component is empty where its maximum is needed.
class EmptyComponent : public Error {
   public:
    using Error::Error;
};

class NotSquare : public Error {
   public:
    using Error::Error;
};

/// Two independent routes to the same object disagreed.
class InternalInconsistency : public Error {
   public:
    using Error::Error;
};

class ZeroDenominator : public Error {
   public:
    using Error::Error;
};

/// Truncation point too small for the geometric tail certificate.
class TailBoundUnavailable : public Error {
   public:
    using Error::Error;
};

/// Malformed text input (numbers, sets, grids).
class ParseError : public Error {
   public:
    using Error::Error;
};

}  // namespace casinv

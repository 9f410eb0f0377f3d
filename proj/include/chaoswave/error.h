// include/chaoswave/error.h

// Copyright 2026  The chaoswave authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CHAOSWAVE_ERROR_H_
#define CHAOSWAVE_ERROR_H_

#include <stdexcept>
#include <string>

namespace chaoswave {

// Base class for every error raised by this library. Each subclass names one
// failure kind so callers can map them to exit codes or recovery paths.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Chunk shorter than (m-1)*tau + 1, cannot form a single delay vector.
class EmbeddingTooShort : public Error {
 public:
  using Error::Error;
};

// Every row's allowed neighbor set is empty (window too small vs m*tau).
class AllNeighborsMasked : public Error {
 public:
  using Error::Error;
};

// Divergence horizon K <= 1, no slope can be fit.
class EmptyHorizon : public Error {
 public:
  using Error::Error;
};

// Signal shorter than one analysis window.
class SignalTooShort : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class ChannelLengthMismatch : public Error {
 public:
  using Error::Error;
};

class RateError : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class RateMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroReference : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace chaoswave

#endif  // CHAOSWAVE_ERROR_H_

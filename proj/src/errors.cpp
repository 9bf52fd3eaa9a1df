// Copyright 2026 The braidq Authors
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

#include "braidq/errors.hpp"

namespace braidq {

const char *to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::DegenerateQ: return "DegenerateQ";
  case ErrorKind::NonAdmissibleTriple: return "NonAdmissibleTriple";
  case ErrorKind::NegativeRadicand: return "NegativeRadicand";
  case ErrorKind::IllConditioned: return "IllConditioned";
  case ErrorKind::ResidualTooLarge: return "ResidualTooLarge";
  case ErrorKind::SyntaxError: return "SyntaxError";
  case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorKind::ZeroPower: return "ZeroPower";
  case ErrorKind::CapMismatch: return "CapMismatch";
  case ErrorKind::AnnotationConflict: return "AnnotationConflict";
  case ErrorKind::ParityMismatch: return "ParityMismatch";
  case ErrorKind::UnannotatedSyllable: return "UnannotatedSyllable";
  case ErrorKind::TooManyCrossings: return "TooManyCrossings";
  case ErrorKind::NonUnitaryBlock: return "NonUnitaryBlock";
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

} // namespace braidq

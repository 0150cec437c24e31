// trialkit/svm-io.h

// Copyright 2026  The trialkit Authors
//
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

#ifndef TRIALKIT_SVM_IO_H_
#define TRIALKIT_SVM_IO_H_

#include <string>

#include "trialkit/svm.h"

namespace trialkit {

// JSON document with params, standardization, weights, bias, alphas, support
// indices and convergence metadata.  Numbers are written in shortest
// round-trip form, so ReadSvmModel(WriteSvmModel(m)) reproduces m exactly.
std::string WriteSvmModel(const SvmModeld &model);
SvmModeld ReadSvmModel(const std::string &text);

}  // namespace trialkit

#endif  // TRIALKIT_SVM_IO_H_

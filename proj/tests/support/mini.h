// Copyright 2026 The Slotfill Authors.
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


#ifndef SLOTFILL_TESTS_MINI_H_
#define SLOTFILL_TESTS_MINI_H_

#include <string>
#include <vector>

#include "slotfill/ensemble.h"
#include "slotfill/pipeline.h"
#include "slotfill/query.h"
#include "slotfill/resources.h"

namespace slotfill::testing {

// Bundled mini-corpus directory, fixed at configure time.
std::string MiniDataDir();

// Canonical slots with classifiers that the queries ask for, at either hop.
std::vector<std::string> QueriedCanonicalSlots(const Resources &resources,
                                               const std::vector<SlotQuery> &queries);

// Same steps as `slotfill train` for every kind and slot, then `slotfill
// tune`, with the default seed. Writes into `model_dir`.
void TrainMiniModels(const Resources &resources, const std::vector<std::string> &slots,
                     const std::vector<ClassifierKind> &kinds, const std::string &model_dir);

// Formatted answers for all queries, as `slotfill run` writes them.
std::string RunQueries(const Resources &resources, const ModelStore &models,
                       const std::vector<SlotQuery> &queries, const RunConfig &config);

}  // namespace slotfill::testing

#endif  // SLOTFILL_TESTS_MINI_H_

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

#ifndef SUBINFO_CORE_PARALLEL_H_
#define SUBINFO_CORE_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace subinfo {

// 0 means "auto": the SMI_THREADS environment variable if set to a positive
// integer, otherwise the hardware concurrency.
size_t ResolveThreadCount(size_t requested);

// Splits [0, count) into `chunks` contiguous ranges and runs fn(chunk, begin,
// end) for each, on up to `threads` workers. Chunk boundaries depend only on
// count and chunks, so callers that reduce per-chunk results in chunk order
// get the same answer for any thread count. The first exception thrown by a
// worker is rethrown on the calling thread.
void ParallelChunks(size_t count, size_t chunks, size_t threads,
                    const std::function<void(size_t chunk, size_t begin, size_t end)>& fn);

}  // namespace subinfo

#endif  // SUBINFO_CORE_PARALLEL_H_

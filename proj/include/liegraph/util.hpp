#pragma once

#include <functional>
#include <string>
#include <vector>

namespace liegraph {

// worker count: min(LIEGRAPH_THREADS, hardware_concurrency), at least 1
int worker_count();

// parallel for over [begin, end); fn(i) must be safe on disjoint i.
// Falls back to a serial loop when a single worker is configured.
void parallel_for(long long begin, long long end, const std::function<void(long long)>& fn);

// git-style SHA-1 content hash ("blob <len>\0" + content), hex digest
std::string git_blob_sha1(const std::string& content);

// fixed-format double for reproducible artifacts
std::string format_double(double x);

}  // namespace liegraph

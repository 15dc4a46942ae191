#include "liegraph/util.hpp"

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <thread>

namespace liegraph {

int worker_count() {
  int hw = (int)std::thread::hardware_concurrency();
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("LIEGRAPH_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < hw) hw = cap;
  }
  return hw;
}

void parallel_for(long long begin, long long end, const std::function<void(long long)>& fn) {
  long long count = end - begin;
  if (count <= 0) return;
  int workers = worker_count();
  if (workers == 1 || count == 1) {
    for (long long i = begin; i < end; ++i) fn(i);
    return;
  }
  if ((long long)workers > count) workers = (int)count;
  std::atomic<long long> next(begin);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        long long i = next.fetch_add(1);
        if (i >= end) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

namespace {

struct Sha1 {
  uint32_t h[5] = {0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u, 0xC3D2E1F0u};
  uint8_t block[64];
  size_t block_len = 0;
  uint64_t total = 0;

  static uint32_t rol(uint32_t x, int s) { return (x << s) | (x >> (32 - s)); }

  void process() {
    uint32_t w[80];
    for (int i = 0; i < 16; ++i)
      w[i] = (uint32_t(block[4 * i]) << 24) | (uint32_t(block[4 * i + 1]) << 16) |
             (uint32_t(block[4 * i + 2]) << 8) | uint32_t(block[4 * i + 3]);
    for (int i = 16; i < 80; ++i) w[i] = rol(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);
    uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4];
    for (int i = 0; i < 80; ++i) {
      uint32_t f, k;
      if (i < 20) { f = (b & c) | ((~b) & d); k = 0x5A827999u; }
      else if (i < 40) { f = b ^ c ^ d; k = 0x6ED9EBA1u; }
      else if (i < 60) { f = (b & c) | (b & d) | (c & d); k = 0x8F1BBCDCu; }
      else { f = b ^ c ^ d; k = 0xCA62C1D6u; }
      uint32_t tmp = rol(a, 5) + f + e + k + w[i];
      e = d; d = c; c = rol(b, 30); b = a; a = tmp;
    }
    h[0] += a; h[1] += b; h[2] += c; h[3] += d; h[4] += e;
  }

  void update(const uint8_t* data, size_t len) {
    total += len;
    while (len > 0) {
      size_t take = 64 - block_len;
      if (take > len) take = len;
      std::memcpy(block + block_len, data, take);
      block_len += take;
      data += take;
      len -= take;
      if (block_len == 64) { process(); block_len = 0; }
    }
  }

  std::string finish() {
    uint64_t bits = total * 8;
    uint8_t pad = 0x80;
    update(&pad, 1);
    uint8_t zero = 0;
    while (block_len != 56) update(&zero, 1);
    uint8_t len_be[8];
    for (int i = 0; i < 8; ++i) len_be[i] = (uint8_t)(bits >> (56 - 8 * i));
    update(len_be, 8);
    char out[41];
    for (int i = 0; i < 5; ++i) std::snprintf(out + 8 * i, 9, "%08x", h[i]);
    return std::string(out, 40);
  }
};

}  // namespace

std::string git_blob_sha1(const std::string& content) {
  Sha1 s;
  char header[40];
  int n = std::snprintf(header, sizeof(header), "blob %zu", content.size());
  s.update((const uint8_t*)header, (size_t)n + 1);  // includes the NUL
  s.update((const uint8_t*)content.data(), content.size());
  return s.finish();
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace liegraph

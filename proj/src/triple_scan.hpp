#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <optional>
#include <random>

#include "braceblock/group.hpp"
#include "braceblock/parallel.hpp"
#include "braceblock/verify_options.hpp"

namespace braceblock::detail {

struct TripleScan {
  CheckMode mode = CheckMode::Exhaustive;
  std::uint64_t checked = 0;
  std::optional<std::array<Elem, 3>> failure;
};

constexpr std::uint64_t kSampleChunks = 256;

inline std::mt19937_64 chunk_rng(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk)};
  return std::mt19937_64(seq);
}

inline std::uint64_t chunk_begin(std::uint64_t samples, std::uint64_t chunk) {
  const std::uint64_t base = samples / kSampleChunks, extra = samples % kSampleChunks;
  return chunk * base + std::min(chunk, extra);
}

/// Checks ok(g, h, k) over all n^3 triples, or over `samples` uniform triples
/// drawn from per-chunk generators seeded by (seed, chunk). The reported
/// failure is the first one in scan order, independent of thread scheduling.
/// `checked` counts triples up to and including that failure.
template <typename Pred>
TripleScan scan_triples(std::size_t n, CheckMode mode, std::uint64_t seed, std::uint64_t samples,
                        Pred&& ok) {
  TripleScan out;
  out.mode = mode;
  FirstFailure first;
  const auto elem = [](std::uint64_t i) { return Elem{static_cast<std::uint32_t>(i)}; };

  if (mode == CheckMode::Exhaustive) {
    const std::uint64_t nn = std::uint64_t{n} * n;
    parallel_for(n, [&](std::size_t g) {
      for (std::uint64_t h = 0; h < n; ++h) {
        if (first.beyond(g * nn + h * n)) return;
        for (std::uint64_t k = 0; k < n; ++k) {
          if (!ok(elem(g), elem(h), elem(k))) {
            first.record(g * nn + h * n + k);
            return;
          }
        }
      }
    });
    if (first.found()) {
      const std::uint64_t i = first.index();
      out.failure = std::array<Elem, 3>{elem(i / nn), elem(i / n % n), elem(i % n)};
      out.checked = i + 1;
    } else {
      out.checked = nn * n;
    }
    return out;
  }

  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
  parallel_for(kSampleChunks, [&](std::size_t c) {
    auto rng = chunk_rng(seed, c);
    auto dist = pick;
    const std::uint64_t lo = chunk_begin(samples, c), hi = chunk_begin(samples, c + 1);
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (first.beyond(i)) return;
      const Elem g{dist(rng)}, h{dist(rng)}, k{dist(rng)};
      if (!ok(g, h, k)) {
        first.record(i);
        return;
      }
    }
  });
  if (first.found()) {
    const std::uint64_t i = first.index();
    std::uint64_t c = 0;
    while (chunk_begin(samples, c + 1) <= i) ++c;
    auto rng = chunk_rng(seed, c);
    auto dist = pick;
    std::array<Elem, 3> t{};
    for (std::uint64_t j = chunk_begin(samples, c); j <= i; ++j) t = {Elem{dist(rng)}, Elem{dist(rng)}, Elem{dist(rng)}};
    out.failure = t;
    out.checked = i + 1;
  } else {
    out.checked = samples;
  }
  return out;
}

}  // namespace braceblock::detail

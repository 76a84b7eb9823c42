// SPDX-License-Identifier: Apache-2.0
#include "compsel/rng.hpp"

#include <array>

#include "compsel/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace compsel {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Stream derive_substream(std::uint64_t master_seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t state = splitmix64(master_seed);
  for (std::uint64_t step : path) state = splitmix64(state ^ splitmix64(step + 0x632be59bd9b4e019ULL));
  std::array<std::uint32_t, 8> words{};
  for (std::size_t i = 0; i < words.size(); i += 2) {
    state = splitmix64(state);
    words[i] = static_cast<std::uint32_t>(state);
    words[i + 1] = static_cast<std::uint32_t>(state >> 32);
  }
  std::seed_seq seq(words.begin(), words.end());
  return Stream(seq);
}

Stream derive_substream(std::uint64_t master_seed, std::uint64_t index) {
  return derive_substream(master_seed, {index});
}

int omp_default_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace compsel

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "centrality/parallel.hpp"
#include "centrality/rng.hpp"

using namespace centrality;

TEST_CASE("chunked_reduce merges in ascending chunk order") {
  for (int workers : {1, 2, 8}) {
    std::vector<std::size_t> merged;
    chunked_reduce<std::size_t>(
        1000, 64, workers, [](std::size_t b, std::size_t) { return b; },
        [&](std::size_t&& b) { merged.push_back(b); });
    REQUIRE(merged.size() == 16);
    CHECK(std::is_sorted(merged.begin(), merged.end()));
    CHECK(merged.front() == 0);
    CHECK(merged.back() == 960);
  }
}

TEST_CASE("chunked_reduce covers every index exactly once") {
  for (int workers : {1, 3, 8}) {
    std::vector<char> seen(501, 0);
    chunked_reduce<std::pair<std::size_t, std::size_t>>(
        501, 7, workers,
        [](std::size_t b, std::size_t e) { return std::make_pair(b, e); },
        [&](std::pair<std::size_t, std::size_t>&& range) {
          for (std::size_t i = range.first; i < range.second; ++i) {
            CHECK(!seen[i]);
            seen[i] = 1;
          }
        });
    CHECK(std::all_of(seen.begin(), seen.end(), [](char c) { return c == 1; }));
  }
}

TEST_CASE("chunked_reduce result independent of worker count") {
  // a reduction whose result depends on merge order: string concatenation
  auto run = [](int workers) {
    std::string out;
    chunked_reduce<std::string>(
        100, 3, workers,
        [](std::size_t b, std::size_t e) {
          return std::to_string(b) + ":" + std::to_string(e) + ";";
        },
        [&](std::string&& s) { out += s; });
    return out;
  };
  const std::string base = run(1);
  CHECK(run(2) == base);
  CHECK(run(8) == base);
}

TEST_CASE("chunked_reduce propagates compute exceptions") {
  for (int workers : {1, 4}) {
    CHECK_THROWS_AS(
        chunked_reduce<int>(
            100, 10, workers,
            [](std::size_t b, std::size_t) -> int {
              if (b >= 50) throw std::runtime_error("boom");
              return 0;
            },
            [](int&&) {}),
        std::runtime_error);
  }
}

TEST_CASE("chunked_reduce with empty input does nothing") {
  bool called = false;
  chunked_reduce<int>(
      0, 8, 4, [](std::size_t, std::size_t) { return 0; },
      [&](int&&) { called = true; });
  CHECK(!called);
}

TEST_CASE("rng determinism and stream derivation") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  Rng c(42);
  std::set<std::uint64_t> streams;
  for (std::uint64_t s = 0; s < 100; ++s) streams.insert(derive_seed(42, s));
  CHECK(streams.size() == 100);  // no collisions among derived streams
  CHECK(derive_seed(42, 1) != derive_seed(43, 1));

  SUBCASE("uniform01 stays in [0, 1)") {
    Rng r(7);
    for (int i = 0; i < 10000; ++i) {
      const double x = r.uniform01();
      CHECK(x >= 0.0);
      CHECK(x < 1.0);
    }
  }

  SUBCASE("below is in range and hits every residue") {
    Rng r(8);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 1000; ++i) seen.insert(r.below(7));
    CHECK(seen.size() == 7);
    CHECK(*seen.rbegin() == 6);
    CHECK(r.below(1) == 0);
  }

  SUBCASE("shuffle is a permutation") {
    Rng r(9);
    std::vector<int> v(50);
    std::iota(v.begin(), v.end(), 0);
    const std::vector<int> orig = v;
    r.shuffle(v);
    CHECK(v != orig);  // astronomically unlikely to be identity
    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == orig);
  }
}

TEST_CASE("default_workers respects the environment variable") {
  // setenv is fine here: doctest runs cases sequentially in one thread
  setenv("CENTRALITY_WORKERS", "3", 1);
  CHECK(default_workers() == 3);
  setenv("CENTRALITY_WORKERS", "not_a_number", 1);
  CHECK(default_workers() >= 1);
  unsetenv("CENTRALITY_WORKERS");
  CHECK(default_workers() >= 1);
}

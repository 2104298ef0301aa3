#include <doctest.h>

#include <algorithm>
#include <bit>

#include "lea/coding.hpp"
#include "lea/rng.hpp"

using namespace lea;

namespace {

Dataset random_dataset(int k, std::size_t len, fe p, Rng& rng) {
  Dataset data;
  data.chunks.assign(k, std::vector<fe>(len));
  for (auto& chunk : data.chunks) {
    for (auto& v : chunk) v = rng.next_below(p);
  }
  return data;
}

WorkFunction random_poly_function(int degree, fe p, Rng& rng) {
  WorkFunction f;
  f.kind = WorkFunction::Kind::elementwise_poly;
  f.coeffs.resize(degree + 1);
  for (auto& c : f.coeffs) c = rng.next_below(p);
  f.coeffs.back() = 1 + rng.next_below(p - 1);
  return f;
}

std::vector<ShardResult> results_for_mask(const std::vector<EncodedShard>& shards,
                                          const WorkFunction& f, fe p,
                                          std::uint64_t mask) {
  std::vector<ShardResult> results;
  for (std::size_t v = 0; v < shards.size(); ++v) {
    if (mask & (1ULL << v)) {
      results.push_back({shards[v].index, apply_function(f, shards[v].payload, p)});
    }
  }
  return results;
}

}  // namespace

TEST_CASE("recovery thresholds") {
  CHECK(recovery_threshold(3, 2, 2, 2) == 3);
  CHECK(recovery_threshold(3, 2, 4, 2) == 6);
  CHECK(recovery_threshold(15, 10, 50, 2) == 99);
  CHECK(recovery_threshold(15, 10, 50, 1) == 50);
}

TEST_CASE("lagrange encoding matches the hand-worked k=2 shards") {
  auto scheme = CodingScheme::make(3, 2, 2, 2);
  const fe p = scheme.p;
  REQUIRE(scheme.mode == CodingMode::lagrange);
  REQUIRE(scheme.recovery_threshold == 3);

  Rng rng = derive_stream(21, 0);
  Dataset data = random_dataset(2, 3, p, rng);
  auto shards = encode(data, scheme);
  REQUIRE(shards.size() == 6);

  // Shard v = (1-a)*X1 + a*X2 at a = v-1:
  // X1, X2, -X1+2X2, -2X1+3X2, -3X1+4X2, -4X1+5X2.
  for (int v = 1; v <= 6; ++v) {
    long long a = v - 1;
    CHECK(shards[v - 1].index == v);
    CHECK(shards[v - 1].owner == (v + 1) / 2);
    for (std::size_t c = 0; c < data.chunk_len(); ++c) {
      fe expect = fp_add(fp_mul(fp_from_signed(1 - a, p), data.chunks[0][c], p),
                         fp_mul(fp_from_signed(a, p), data.chunks[1][c], p), p);
      CHECK(shards[v - 1].payload[c] == expect);
    }
  }
  // Systematic prefix.
  CHECK(shards[0].payload == data.chunks[0]);
  CHECK(shards[1].payload == data.chunks[1]);
}

TEST_CASE("repetition encoding replicates chunks round-robin") {
  auto scheme = CodingScheme::make(3, 2, 4, 2);
  REQUIRE(scheme.mode == CodingMode::repetition);
  Rng rng = derive_stream(22, 0);
  Dataset data = random_dataset(4, 2, scheme.p, rng);
  auto shards = encode(data, scheme);
  REQUIRE(shards.size() == 6);
  CHECK(shards[0].payload == data.chunks[0]);
  CHECK(shards[1].payload == data.chunks[1]);
  CHECK(shards[2].payload == data.chunks[2]);
  CHECK(shards[3].payload == data.chunks[3]);
  CHECK(shards[4].payload == data.chunks[0]);
  CHECK(shards[5].payload == data.chunks[1]);
}

TEST_CASE("apply_function") {
  const fe p = 101;
  WorkFunction square{WorkFunction::Kind::elementwise_poly, {0, 0, 1}};
  CHECK(apply_function(square, std::vector<fe>{2, 3}, p) == std::vector<fe>{4, 9});

  WorkFunction w{WorkFunction::Kind::linear_map, {5, 7}};
  // Linearity over the shard X1 + X2.
  std::vector<fe> x1 = {1, 2}, x2 = {10, 20};
  std::vector<fe> sum = {fp_add(x1[0], x2[0], p), fp_add(x1[1], x2[1], p)};
  CHECK(apply_function(w, sum, p)[0] ==
        fp_add(apply_function(w, x1, p)[0], apply_function(w, x2, p)[0], p));

  WorkFunction zero{WorkFunction::Kind::linear_map, {0, 0}};
  CHECK(apply_function(zero, x1, p) == std::vector<fe>{0});

  WorkFunction bad{WorkFunction::Kind::linear_map, {1, 2, 3}};
  CHECK_THROWS_AS(apply_function(bad, x1, p), std::invalid_argument);
}

TEST_CASE("linear decode recovers X1*w and X2*w from two shards") {
  // k = 2, deg(f) = 1, so K* = 2; shards 1 and 3 suffice.
  auto scheme = CodingScheme::make(3, 1, 2, 1);
  Rng rng = derive_stream(23, 0);
  Dataset data = random_dataset(2, 4, scheme.p, rng);
  auto shards = encode(data, scheme);
  WorkFunction w{WorkFunction::Kind::linear_map, {3, 1, 4, 1}};

  auto decoded = decode(results_for_mask(shards, w, scheme.p, 0b101), scheme, w);
  CHECK(decoded[0] == apply_function(w, data.chunks[0], scheme.p));
  CHECK(decoded[1] == apply_function(w, data.chunks[1], scheme.p));
}

TEST_CASE("quadratic decode from every K*-subset and from all shards") {
  auto scheme = CodingScheme::make(3, 2, 2, 2);
  Rng rng = derive_stream(24, 0);
  Dataset data = random_dataset(2, 3, scheme.p, rng);
  auto shards = encode(data, scheme);
  WorkFunction f = random_poly_function(2, scheme.p, rng);

  std::vector<std::vector<fe>> expected = {apply_function(f, data.chunks[0], scheme.p),
                                           apply_function(f, data.chunks[1], scheme.p)};
  int subsets = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << 6); ++mask) {
    if (std::popcount(mask) != scheme.recovery_threshold) continue;
    ++subsets;
    CHECK(decode(results_for_mask(shards, f, scheme.p, mask), scheme, f) == expected);
  }
  CHECK(subsets == 20);
  CHECK(decode(results_for_mask(shards, f, scheme.p, 0b111111), scheme, f) == expected);
}

TEST_CASE("decodability over random schemes, exhaustive subsets") {
  Rng rng = derive_stream(25, 0);
  struct Case {
    int n, r, k, deg_f;
  };
  for (Case c : {Case{3, 2, 2, 2}, Case{2, 3, 3, 1}, Case{3, 4, 3, 2}, Case{4, 3, 5, 3},
                 Case{6, 2, 8, 2}}) {
    auto scheme = CodingScheme::make(c.n, c.r, c.k, c.deg_f);
    Dataset data = random_dataset(c.k, 2, scheme.p, rng);
    auto shards = encode(data, scheme);
    WorkFunction f = random_poly_function(c.deg_f, scheme.p, rng);
    std::vector<std::vector<fe>> expected(c.k);
    for (int j = 0; j < c.k; ++j) {
      expected[j] = apply_function(f, data.chunks[j], scheme.p);
    }
    int nr = scheme.shard_count();
    for (std::uint64_t mask = 0; mask < (1ULL << nr); ++mask) {
      if (std::popcount(mask) != scheme.recovery_threshold) continue;
      CHECK(decode(results_for_mask(shards, f, scheme.p, mask), scheme, f) == expected);
    }
  }
}

TEST_CASE("decode error paths") {
  auto scheme = CodingScheme::make(3, 2, 2, 2);
  Rng rng = derive_stream(26, 0);
  Dataset data = random_dataset(2, 2, scheme.p, rng);
  auto shards = encode(data, scheme);
  WorkFunction f = random_poly_function(2, scheme.p, rng);

  CHECK_THROWS_AS(decode(results_for_mask(shards, f, scheme.p, 0b11), scheme, f),
                  NotDecodableError);

  auto dup = results_for_mask(shards, f, scheme.p, 0b111);
  dup[2].index = dup[0].index;
  CHECK_THROWS_AS(decode(dup, scheme, f), std::invalid_argument);
}

TEST_CASE("K*-1 points under-determine f(u(z))") {
  // With one point short, interpolation yields a lower-degree polynomial
  // that disagrees with the true f(u(z)) at held-out evaluation points.
  auto scheme = CodingScheme::make(3, 2, 2, 2);
  const fe p = scheme.p;
  Rng rng = derive_stream(27, 0);
  Dataset data = random_dataset(2, 1, p, rng);
  auto shards = encode(data, scheme);
  WorkFunction f = random_poly_function(2, p, rng);

  std::vector<std::pair<fe, fe>> pts;
  for (int v : {0, 1}) {
    pts.push_back({scheme.alpha[v], apply_function(f, shards[v].payload, p)[0]});
  }
  Poly fitted = lagrange_interpolate(pts, p);
  bool mismatch = false;
  for (int v = 2; v < 6; ++v) {
    fe truth = apply_function(f, shards[v].payload, p)[0];
    if (poly_eval(fitted, scheme.alpha[v], p) != truth) mismatch = true;
  }
  CHECK(mismatch);
}

TEST_CASE("scheme construction validation") {
  CHECK_THROWS_AS(CodingScheme::make(0, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(CodingScheme::make(3, 2, 2, 2, 6), std::invalid_argument);   // not prime
  CHECK_THROWS_AS(CodingScheme::make(3, 2, 2, 2, 5), std::invalid_argument);   // too small
  CHECK_NOTHROW(CodingScheme::make(3, 2, 2, 2, 7));
  CHECK_THROWS_AS(CodingScheme::make(2, 2, 5, 3), std::invalid_argument);  // nr < k
}

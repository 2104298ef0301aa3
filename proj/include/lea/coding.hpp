#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lea/field.hpp"

namespace lea {

class NotDecodableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// k data chunks, each a fixed-length vector of field elements.
struct Dataset {
  std::vector<std::vector<fe>> chunks;

  int k() const { return static_cast<int>(chunks.size()); }
  std::size_t chunk_len() const { return chunks.empty() ? 0 : chunks.front().size(); }
};

enum class CodingMode { lagrange, repetition };

// Encoding parameters: n workers, r shards per worker, k chunks,
// function degree deg_f.  Lagrange mode applies when n*r >= k*deg_f - 1,
// otherwise chunks are replicated (repetition mode).
struct CodingScheme {
  int n = 0;
  int r = 0;
  int k = 0;
  int deg_f = 1;
  CodingMode mode = CodingMode::lagrange;
  fe p = kDefaultPrime;
  std::vector<fe> beta;   // k interpolation nodes, beta[j] = j
  std::vector<fe> alpha;  // n*r evaluation points, alpha[v] = v
  int recovery_threshold = 0;

  int shard_count() const { return n * r; }

  // Validates parameters (p prime, p > max(k, n*r)) and fills in the
  // evaluation points and recovery threshold.
  static CodingScheme make(int n, int r, int k, int deg_f, fe p = kDefaultPrime);
};

// Optimal recovery threshold: (k-1)*deg_f + 1 when n*r >= k*deg_f - 1,
// n*r - floor(n*r/k) + 1 otherwise.
int recovery_threshold(long long n, long long r, long long k, long long deg_f);

// Shard slot v in [1, n*r], stored by worker ceil(v/r).
struct EncodedShard {
  int index = 0;
  int owner = 0;
  std::vector<fe> payload;
};

// The per-round computation applied to each stored shard: either an inner
// product with a weight vector (degree 1) or a univariate polynomial
// applied componentwise.
struct WorkFunction {
  enum class Kind { linear_map, elementwise_poly };

  Kind kind = Kind::linear_map;
  // Weight vector for linear_map, polynomial coefficients (low degree
  // first) for elementwise_poly.
  std::vector<fe> coeffs;

  int degree() const;
};

std::vector<EncodedShard> encode(const Dataset& data, const CodingScheme& scheme);

std::vector<fe> apply_function(const WorkFunction& f, std::span<const fe> payload, fe p);

struct ShardResult {
  int index = 0;
  std::vector<fe> value;
};

// Recovers f(X_1),...,f(X_k) from any recovery_threshold results.
// Throws NotDecodableError with fewer results, std::invalid_argument on
// repeated shard indices.
std::vector<std::vector<fe>> decode(std::span<const ShardResult> results,
                                    const CodingScheme& scheme, const WorkFunction& f);

// Decimal-text dataset I/O: one row per chunk, whitespace-separated
// field elements.
Dataset read_dataset_text(const std::string& path, fe p);
void write_shards_text(const std::vector<EncodedShard>& shards, const std::string& path);

}  // namespace lea

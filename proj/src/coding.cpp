#include "lea/coding.hpp"

#include <fstream>
#include <sstream>

namespace lea {

int recovery_threshold(long long n, long long r, long long k, long long deg_f) {
  long long nr = n * r;
  if (nr >= k * deg_f - 1) {
    return static_cast<int>((k - 1) * deg_f + 1);
  }
  return static_cast<int>(nr - nr / k + 1);
}

CodingScheme CodingScheme::make(int n, int r, int k, int deg_f, fe p) {
  if (n < 1 || r < 1 || k < 1 || deg_f < 1) {
    throw std::invalid_argument("coding parameters must be >= 1");
  }
  if (p >= (1ULL << 32) || !is_prime(p)) {
    throw std::invalid_argument("modulus must be a prime below 2^32");
  }
  long long nr = static_cast<long long>(n) * r;
  if (nr < k) {
    throw std::invalid_argument("n*r slots cannot hold k chunks");
  }
  if (static_cast<long long>(p) <= std::max<long long>(k, nr)) {
    throw std::invalid_argument("field too small for distinct evaluation points");
  }
  CodingScheme s;
  s.n = n;
  s.r = r;
  s.k = k;
  s.deg_f = deg_f;
  s.p = p;
  s.mode = (nr >= static_cast<long long>(k) * deg_f - 1) ? CodingMode::lagrange
                                                         : CodingMode::repetition;
  s.recovery_threshold = lea::recovery_threshold(n, r, k, deg_f);
  s.beta.resize(k);
  for (int j = 0; j < k; ++j) s.beta[j] = static_cast<fe>(j);
  s.alpha.resize(nr);
  for (long long v = 0; v < nr; ++v) s.alpha[v] = static_cast<fe>(v);
  return s;
}

int WorkFunction::degree() const {
  if (kind == Kind::linear_map) return 1;
  int d = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) d = static_cast<int>(i);
  }
  return d;
}

namespace {

// Chunk index (0-based) stored in 1-based repetition slot v:
// chunk j occupies slots j, j+k, j+2k, ...
int repetition_chunk(int slot, int k) { return (slot - 1) % k; }

}  // namespace

std::vector<EncodedShard> encode(const Dataset& data, const CodingScheme& scheme) {
  if (data.k() != scheme.k) {
    throw std::invalid_argument("dataset chunk count does not match scheme");
  }
  const fe p = scheme.p;
  const int nr = scheme.shard_count();
  const std::size_t len = data.chunk_len();
  std::vector<EncodedShard> shards(nr);

  if (scheme.mode == CodingMode::repetition) {
    for (int v = 1; v <= nr; ++v) {
      shards[v - 1].index = v;
      shards[v - 1].owner = (v - 1) / scheme.r + 1;
      shards[v - 1].payload = data.chunks[repetition_chunk(v, scheme.k)];
    }
    return shards;
  }

  // Lagrange basis value L_j(alpha_v) for each (v, j), then
  // payload_v = sum_j L_j(alpha_v) * X_j componentwise.
  const int k = scheme.k;
  std::vector<fe> denom_inv(k);
  for (int j = 0; j < k; ++j) {
    fe denom = 1;
    for (int l = 0; l < k; ++l) {
      if (l == j) continue;
      denom = fp_mul(denom, fp_sub(scheme.beta[j], scheme.beta[l], p), p);
    }
    denom_inv[j] = fp_inv(denom, p);
  }
  for (int v = 1; v <= nr; ++v) {
    EncodedShard& shard = shards[v - 1];
    shard.index = v;
    shard.owner = (v - 1) / scheme.r + 1;
    shard.payload.assign(len, 0);
    fe av = scheme.alpha[v - 1];
    for (int j = 0; j < k; ++j) {
      fe num = 1;
      for (int l = 0; l < k; ++l) {
        if (l == j) continue;
        num = fp_mul(num, fp_sub(av, scheme.beta[l], p), p);
      }
      fe basis = fp_mul(num, denom_inv[j], p);
      if (basis == 0) continue;
      const auto& chunk = data.chunks[j];
      for (std::size_t c = 0; c < len; ++c) {
        shard.payload[c] = fp_add(shard.payload[c], fp_mul(basis, chunk[c] % p, p), p);
      }
    }
  }
  return shards;
}

std::vector<fe> apply_function(const WorkFunction& f, std::span<const fe> payload, fe p) {
  if (f.kind == WorkFunction::Kind::linear_map) {
    if (f.coeffs.size() != payload.size()) {
      throw std::invalid_argument("weight vector length does not match payload");
    }
    fe acc = 0;
    for (std::size_t c = 0; c < payload.size(); ++c) {
      acc = fp_add(acc, fp_mul(payload[c] % p, f.coeffs[c] % p, p), p);
    }
    return {acc};
  }
  Poly poly{std::vector<fe>(f.coeffs.begin(), f.coeffs.end())};
  std::vector<fe> out(payload.size());
  for (std::size_t c = 0; c < payload.size(); ++c) {
    out[c] = poly_eval(poly, payload[c] % p, p);
  }
  return out;
}

std::vector<std::vector<fe>> decode(std::span<const ShardResult> results,
                                    const CodingScheme& scheme, const WorkFunction& f) {
  const int k_star = scheme.recovery_threshold;
  if (static_cast<int>(results.size()) < k_star) {
    throw NotDecodableError("not decodable: fewer than K* results");
  }
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (std::size_t j = i + 1; j < results.size(); ++j) {
      if (results[i].index == results[j].index) {
        throw std::invalid_argument("duplicate shard index in results");
      }
    }
  }
  const fe p = scheme.p;
  const int k = scheme.k;

  if (scheme.mode == CodingMode::repetition) {
    std::vector<std::vector<fe>> out(k);
    std::vector<bool> have(k, false);
    for (const auto& res : results) {
      int j = repetition_chunk(res.index, k);
      if (!have[j]) {
        out[j] = res.value;
        have[j] = true;
      }
    }
    for (int j = 0; j < k; ++j) {
      // With >= K* distinct slots every chunk has a surviving copy.
      if (!have[j]) throw std::logic_error("repetition decode missed a chunk");
    }
    return out;
  }

  // f(u(z)) has degree (k-1)*deg_f; interpolate it componentwise from
  // (alpha_v, value_v) and evaluate at each beta_j.
  const std::size_t width = results.front().value.size();
  std::vector<std::vector<fe>> out(k, std::vector<fe>(width));
  std::vector<std::pair<fe, fe>> pts(results.size());
  for (std::size_t c = 0; c < width; ++c) {
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (results[i].value.size() != width) {
        throw std::invalid_argument("inconsistent result widths");
      }
      pts[i] = {scheme.alpha[results[i].index - 1], results[i].value[c]};
    }
    Poly h = lagrange_interpolate(pts, p);
    for (int j = 0; j < k; ++j) {
      out[j][c] = poly_eval(h, scheme.beta[j], p);
    }
  }
  return out;
}

Dataset read_dataset_text(const std::string& path, fe p) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read dataset file: " + path);
  Dataset data;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::vector<fe> chunk;
    long long v;
    while (row >> v) chunk.push_back(fp_from_signed(v, p));
    if (!chunk.empty()) data.chunks.push_back(std::move(chunk));
  }
  for (const auto& chunk : data.chunks) {
    if (chunk.size() != data.chunk_len()) {
      throw std::runtime_error("dataset rows have unequal lengths");
    }
  }
  return data;
}

void write_shards_text(const std::vector<EncodedShard>& shards, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write shards file: " + path);
  for (const auto& shard : shards) {
    for (std::size_t c = 0; c < shard.payload.size(); ++c) {
      if (c) out << ' ';
      out << shard.payload[c];
    }
    out << '\n';
  }
}

}  // namespace lea

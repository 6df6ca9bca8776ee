#include "leibten/tensorbasis.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "leibten/error.hpp"

namespace leibten {

namespace {

void wedge_rec(std::size_t dim, std::size_t n, std::size_t start, Tuple& cur, std::vector<Tuple>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < dim; ++i) {
    cur.push_back(static_cast<Index>(i));
    wedge_rec(dim, n, i + 1, cur, out);
    cur.pop_back();
  }
}

// Chooses which of the n positions receive the first run.
void choose_rec(std::size_t n, std::size_t p, std::size_t start, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == p) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + (p - cur.size()) <= n; ++i) {
    cur.push_back(i);
    choose_rec(n, p, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Shuffle> compute_shuffles(std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  std::vector<std::vector<std::size_t>> firsts;
  std::vector<std::size_t> cur;
  choose_rec(n, p, 0, cur, firsts);
  std::vector<Shuffle> out;
  out.reserve(firsts.size());
  for (const auto& first : firsts) {
    std::vector<bool> used(n, false);
    Shuffle s;
    s.perm = first;
    for (auto i : first) used[i] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!used[i]) s.perm.push_back(i);
    }
    s.sign = permutation_sign(s.perm);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<Tuple> enumerate_product(const std::vector<std::size_t>& slot_dims) {
  std::vector<Tuple> out;
  for (auto d : slot_dims) {
    if (d == 0) return out;
  }
  Tuple cur(slot_dims.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = slot_dims.size();
    while (i > 0) {
      --i;
      if (++cur[i] < slot_dims[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (slot_dims.empty()) return out;
  }
}

std::vector<Tuple> enumerate_basis(std::size_t dim, std::size_t n, TupleKind kind, std::size_t dim_v) {
  switch (kind) {
    case TupleKind::Tensor:
      return enumerate_product(std::vector<std::size_t>(n, dim));
    case TupleKind::Wedge: {
      std::vector<Tuple> out;
      Tuple cur;
      wedge_rec(dim, n, 0, cur, out);
      return out;
    }
    case TupleKind::Mixed: {
      if (n == 0) throw Error(ErrorCode::DimensionMismatch, "mixed tuples need n >= 1");
      std::vector<Tuple> prefixes;
      Tuple cur;
      wedge_rec(dim, n - 1, 0, cur, prefixes);
      std::vector<Tuple> out;
      for (const auto& p : prefixes) {
        for (std::size_t v = 0; v < dim_v; ++v) {
          Tuple t = p;
          t.push_back(static_cast<Index>(v));
          out.push_back(std::move(t));
        }
      }
      return out;
    }
  }
  return {};
}

std::size_t tensor_index(const Tuple& t, std::size_t dim) {
  std::size_t idx = 0;
  for (auto i : t) idx = idx * dim + i;
  return idx;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int permutation_sign(const std::vector<std::size_t>& perm) {
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

const std::vector<Shuffle>& shuffles(std::size_t p, std::size_t q) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<Shuffle>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, q);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, compute_shuffles(p, q)).first;
  return it->second;
}

std::vector<Shuffle> block_shuffles(const std::vector<std::size_t>& blocks) {
  // Built recursively: shuffle the first block against the rest.
  std::vector<Shuffle> acc{Shuffle{{}, 1}};
  std::size_t total = 0;
  for (auto k : blocks) {
    if (k == 0) throw Error(ErrorCode::DimensionMismatch, "block sizes must be positive");
    std::vector<Shuffle> next;
    for (const auto& prev : acc) {
      for (const auto& s : shuffles(total, k)) {
        // Positions s.perm[0..total) receive the previous blocks, the rest the new one.
        Shuffle out;
        out.perm.resize(total + k);
        for (std::size_t a = 0; a < total; ++a) out.perm[a] = s.perm[prev.perm[a]];
        for (std::size_t b = 0; b < k; ++b) out.perm[total + b] = s.perm[total + b];
        out.sign = permutation_sign(out.perm);
        next.push_back(std::move(out));
      }
    }
    acc = std::move(next);
    total += k;
  }
  std::sort(acc.begin(), acc.end(), [](const Shuffle& a, const Shuffle& b) { return a.perm < b.perm; });
  return acc;
}

std::vector<Shuffle> e_shuffles(const std::vector<std::size_t>& blocks) {
  std::vector<Shuffle> out;
  for (auto& s : block_shuffles(blocks)) {
    bool ok = true;
    std::size_t end = 0;
    std::size_t prev_max = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      end += blocks[b];
      const std::size_t mx = s.perm[end - 1];
      if (b > 0 && mx <= prev_max) {
        ok = false;
        break;
      }
      prev_max = mx;
    }
    if (ok) out.push_back(std::move(s));
  }
  return out;
}

int koszul_sign(const std::vector<std::size_t>& perm, const std::vector<int>& degrees) {
  if (perm.size() != degrees.size()) throw Error(ErrorCode::DimensionMismatch, "koszul_sign length mismatch");
  int sign = 1;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) {
      if (perm[a] > perm[b] && (degrees[perm[a]] & 1) && (degrees[perm[b]] & 1)) sign = -sign;
    }
  }
  return sign;
}

}  // namespace leibten

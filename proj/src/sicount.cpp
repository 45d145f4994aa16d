#include "signcount/sicount.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace signcount {

// ---------------------------------------------------------------------------
// OpenInterval
// ---------------------------------------------------------------------------

OpenInterval::OpenInterval(ExactScalar lo, ExactScalar hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_))
    throw MathError("empty open interval (" + lo_.str() + ", " + hi_.str() + ")");
}

std::optional<OpenInterval> OpenInterval::maybe(ExactScalar lo, ExactScalar hi) {
  if (!(lo < hi)) return std::nullopt;
  return OpenInterval(std::move(lo), std::move(hi));
}

// ---------------------------------------------------------------------------
// WeightVector
// ---------------------------------------------------------------------------

struct WeightVector::Cache {
  std::once_flag once;
  DegeneracyStatus status;
};

WeightVector::WeightVector() : scale_(1), cache_(std::make_shared<Cache>()) {}

WeightVector::WeightVector(std::vector<ExactScalar> weights)
    : weights_(std::move(weights)), scale_(1), cache_(std::make_shared<Cache>()) {
  for (const auto& w : weights_) {
    Int l;
    mpz_lcm(l.get_mpz_t(), scale_.get_mpz_t(), w.den().get_mpz_t());
    scale_ = l;
  }
  normalized_.reserve(weights_.size());
  for (const auto& w : weights_) normalized_.push_back(w.num() * (scale_ / w.den()));
}

WeightVector WeightVector::erased(int i, int j) const {
  if (i < 0 || j < 0 || i >= size() || j >= size())
    throw MathError("deletion index out of range");
  if (i == j) throw MathError("deletion indices must differ");
  std::vector<ExactScalar> rest;
  rest.reserve(weights_.size() - 2);
  for (int k = 0; k < size(); ++k)
    if (k != i && k != j) rest.push_back(weights_[k]);
  return WeightVector(std::move(rest));
}

bool WeightVector::all_positive() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](const ExactScalar& w) { return w.sgn() > 0; });
}

bool WeightVector::any_zero() const {
  return std::any_of(weights_.begin(), weights_.end(),
                     [](const ExactScalar& w) { return w.is_zero(); });
}

DegeneracyStatus WeightVector::degeneracy_status() const { return cache_->status; }

// ---------------------------------------------------------------------------
// Scaling to integers: one common positive multiplier for weights and both
// endpoints, so every inner-loop comparison is integer-only. Soundness rests
// on homogeneity of the defining inequalities.
// ---------------------------------------------------------------------------

namespace {

struct ScaledProblem {
  std::vector<Int> w;
  Int lo, hi;
  bool has_interval = false;
};

ScaledProblem scale_problem(const WeightVector& wv, const OpenInterval* iv) {
  ScaledProblem out;
  Int d = wv.scale();
  if (iv) {
    Int l;
    mpz_lcm(l.get_mpz_t(), d.get_mpz_t(), iv->lo().den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), iv->hi().den().get_mpz_t());
    d = l;
  }
  Int t = d / wv.scale();
  out.w.reserve(wv.normalized().size());
  for (const Int& n : wv.normalized()) out.w.push_back(n * t);
  if (iv) {
    out.lo = iv->lo().num() * (d / iv->lo().den());
    out.hi = iv->hi().num() * (d / iv->hi().den());
    out.has_interval = true;
  }
  return out;
}

// the a-priori bound sum |w_k| decides whether fixed-width arithmetic is safe
bool fits_fast_path(const ScaledProblem& p) {
  Int bound = 0;
  for (const Int& w : p.w) bound += abs(w);
  if (p.has_interval) {
    bound = std::max(bound, Int(abs(p.lo)));
    bound = std::max(bound, Int(abs(p.hi)));
  }
  return fits_int128(bound, 126);
}

template <class IntT>
struct Ops;

template <>
struct Ops<i128> {
  static std::vector<i128> convert(const std::vector<Int>& w) {
    std::vector<i128> out;
    out.reserve(w.size());
    for (const Int& z : w) out.push_back(to_int128(z));
    return out;
  }
  static i128 convert_one(const Int& z) { return to_int128(z); }
  static int sign(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
};

template <>
struct Ops<Int> {
  static const std::vector<Int>& convert(const std::vector<Int>& w) { return w; }
  static const Int& convert_one(const Int& z) { return z; }
  static int sign(const Int& v) { return sgn(v); }
};

// Gray-code walk over the index block [k0, k1) of the 2^r mask space.
// visit(mask_bits, sum, parity) sees every mask of the block exactly once;
// the running sum changes by +-2 w_b per step.
template <class IntT, class Visit>
void gray_walk(const std::vector<IntT>& w, const std::vector<IntT>& w2, std::uint64_t k0,
               std::uint64_t k1, Visit&& visit) {
  std::uint64_t mask = k0 ^ (k0 >> 1);
  IntT sum{};
  for (size_t b = 0; b < w.size(); ++b) {
    if ((mask >> b) & 1)
      sum -= w[b];
    else
      sum += w[b];
  }
  int parity = popcount_parity_sign(mask);
  for (std::uint64_t k = k0;;) {
    visit(mask, sum, parity);
    if (++k == k1) break;
    int b = std::countr_zero(k);
    std::uint64_t bit = 1ull << b;
    mask ^= bit;
    if (mask & bit)
      sum -= w2[b];
    else
      sum += w2[b];
    parity = -parity;
  }
}

// Block partition for the exhaustive walks: split on the top bits so each
// block is an independent Gray-code walk seeded with its starting sum.
// Results are combined in block order; exact addition makes the total
// schedule-independent.
template <class Result, class BlockFn>
std::vector<Result> run_blocks(int r, int threads, BlockFn&& block_result) {
  threads = std::clamp(threads, 1, 256);
  std::uint64_t total = 1ull << r;
  int top_bits = 0;
  while ((1ll << top_bits) < static_cast<long long>(threads) * 8) ++top_bits;
  top_bits = std::min(top_bits, r);
  std::uint64_t nblocks = 1ull << top_bits;
  std::uint64_t block = total >> top_bits;
  std::vector<Result> results(nblocks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (;;) {
        std::uint64_t b = next.fetch_add(1);
        if (b >= nblocks) return;
        results[b] = block_result(b * block, (b + 1) * block);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

template <class IntT>
CountPair brute_kernel(const std::vector<Int>& wz, const Int& loz, const Int& hiz, int threads) {
  auto w = Ops<IntT>::convert(wz);
  std::vector<IntT> w2;
  w2.reserve(w.size());
  for (const auto& x : w) w2.push_back(x + x);
  IntT lo = Ops<IntT>::convert_one(loz);
  IntT hi = Ops<IntT>::convert_one(hiz);
  int r = static_cast<int>(w.size());

  auto block_count = [&](std::uint64_t k0, std::uint64_t k1) {
    CountPair acc;
    gray_walk<IntT>(w, w2, k0, k1, [&](std::uint64_t, const IntT& sum, int parity) {
      if (lo < sum && sum < hi) {
        acc.signed_sum += parity;
        ++acc.cardinality;
      }
    });
    return acc;
  };

  if (threads <= 1 || r < 12) return block_count(0, 1ull << r);
  CountPair total;
  for (const CountPair& p : run_blocks<CountPair>(r, threads, block_count)) {
    total.signed_sum += p.signed_sum;
    total.cardinality += p.cardinality;
  }
  return total;
}

// second-half table for meet-in-the-middle: sums with attached parity weight,
// sorted, with prefix sums of the parity weights for O(log) range queries
template <class IntT>
struct HalfTable {
  std::vector<IntT> sums;              // sorted
  std::vector<long long> parity_prefix;  // parity_prefix[t] = sum of parities before t

  long long parity_in_range(const IntT& lo_excl, const IntT& hi_excl, unsigned long long* card) const {
    // strict bounds on both sides, half-open prefix indexing
    auto a = std::upper_bound(sums.begin(), sums.end(), lo_excl) - sums.begin();
    auto b = std::lower_bound(sums.begin(), sums.end(), hi_excl) - sums.begin();
    if (card) *card += static_cast<unsigned long long>(b - a);
    return parity_prefix[b] - parity_prefix[a];
  }
};

template <class IntT>
HalfTable<IntT> build_half_table(const std::vector<IntT>& w, const std::vector<IntT>& w2) {
  size_t r2 = w.size();
  std::vector<std::pair<IntT, int>> entries;
  entries.reserve(1ull << r2);
  gray_walk<IntT>(w, w2, 0, 1ull << r2, [&](std::uint64_t, const IntT& sum, int parity) {
    entries.emplace_back(sum, parity);
  });
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  HalfTable<IntT> table;
  table.sums.reserve(entries.size());
  table.parity_prefix.reserve(entries.size() + 1);
  table.parity_prefix.push_back(0);
  for (const auto& [sum, parity] : entries) {
    table.sums.push_back(sum);
    table.parity_prefix.push_back(table.parity_prefix.back() + parity);
  }
  return table;
}

template <class IntT>
CountPair mitm_kernel(const std::vector<Int>& wz, const Int& loz, const Int& hiz) {
  auto all = Ops<IntT>::convert(wz);
  int r = static_cast<int>(all.size());
  int h = (r + 1) / 2;  // first half [0, h), second half [h, r)
  std::vector<IntT> w1(all.begin(), all.begin() + h);
  std::vector<IntT> w2(all.begin() + h, all.end());
  auto dbl = [](const std::vector<IntT>& v) {
    std::vector<IntT> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x + x);
    return out;
  };
  auto table = build_half_table<IntT>(w2, dbl(w2));
  IntT lo = Ops<IntT>::convert_one(loz);
  IntT hi = Ops<IntT>::convert_one(hiz);

  CountPair acc;
  gray_walk<IntT>(w1, dbl(w1), 0, 1ull << h, [&](std::uint64_t, const IntT& s, int parity) {
    acc.signed_sum += parity * table.parity_in_range(lo - s, hi - s, &acc.cardinality);
  });
  return acc;
}

void check_brute_size(const WeightVector& w) {
  if (w.size() > kBruteMaxR)
    throw GuardrailError("exhaustive walk refused for r = " + std::to_string(w.size()) +
                         " > " + std::to_string(kBruteMaxR));
}

void check_mitm_size(const WeightVector& w) {
  if (w.size() > kMitmMaxR)
    throw GuardrailError("meet-in-the-middle refused for r = " + std::to_string(w.size()) +
                         " > " + std::to_string(kMitmMaxR));
}

}  // namespace

// ---------------------------------------------------------------------------
// public engine entry points
// ---------------------------------------------------------------------------

CountPair interval_count_brute(const WeightVector& w, const OpenInterval& iv, int threads) {
  check_brute_size(w);
  ScaledProblem p = scale_problem(w, &iv);
  if (fits_fast_path(p)) return brute_kernel<i128>(p.w, p.lo, p.hi, threads);
  return brute_kernel<Int>(p.w, p.lo, p.hi, threads);
}

CountPair interval_count_mitm(const WeightVector& w, const OpenInterval& iv) {
  check_mitm_size(w);
  ScaledProblem p = scale_problem(w, &iv);
  if (fits_fast_path(p)) return mitm_kernel<i128>(p.w, p.lo, p.hi);
  return mitm_kernel<Int>(p.w, p.lo, p.hi);
}

CountPair interval_count(const WeightVector& w, const OpenInterval& iv, const EngineConfig& cfg) {
  switch (cfg.engine) {
    case Engine::Brute:
      return interval_count_brute(w, iv, cfg.threads);
    case Engine::Mitm:
      return interval_count_mitm(w, iv);
    case Engine::Auto:
      break;
  }
  if (w.size() >= 24) return interval_count_mitm(w, iv);
  return interval_count_brute(w, iv, cfg.threads);
}

long long signed_count_brute(const WeightVector& w, const OpenInterval& iv, int threads) {
  return interval_count_brute(w, iv, threads).signed_sum;
}
long long signed_count_mitm(const WeightVector& w, const OpenInterval& iv) {
  return interval_count_mitm(w, iv).signed_sum;
}
long long signed_count(const WeightVector& w, const OpenInterval& iv, const EngineConfig& cfg) {
  return interval_count(w, iv, cfg).signed_sum;
}
unsigned long long unsigned_count_brute(const WeightVector& w, const OpenInterval& iv, int threads) {
  return interval_count_brute(w, iv, threads).cardinality;
}
unsigned long long unsigned_count_mitm(const WeightVector& w, const OpenInterval& iv) {
  return interval_count_mitm(w, iv).cardinality;
}
unsigned long long unsigned_count(const WeightVector& w, const OpenInterval& iv, const EngineConfig& cfg) {
  return interval_count(w, iv, cfg).cardinality;
}

// ---------------------------------------------------------------------------
// zero-sum search
// ---------------------------------------------------------------------------

namespace {

template <class IntT>
std::optional<SignMask> vanishing_kernel(const std::vector<Int>& wz, int r) {
  auto all = Ops<IntT>::convert(wz);
  int h = (r + 1) / 2;
  int r2 = r - h;
  std::vector<IntT> w1(all.begin(), all.begin() + h);
  std::vector<IntT> w2(all.begin() + h, all.end());
  auto dbl = [](const std::vector<IntT>& v) {
    std::vector<IntT> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x + x);
    return out;
  };

  std::vector<std::pair<IntT, std::uint64_t>> entries;  // (sum, second-half mask)
  entries.reserve(1ull << r2);
  gray_walk<IntT>(w2, dbl(w2), 0, 1ull << r2, [&](std::uint64_t mask, const IntT& sum, int) {
    entries.emplace_back(sum, mask);
  });
  std::sort(entries.begin(), entries.end());

  std::optional<SignMask> found;
  gray_walk<IntT>(w1, dbl(w1), 0, 1ull << h, [&](std::uint64_t mask1, const IntT& s, int) {
    if (found) return;
    IntT target = IntT{} - s;
    auto it = std::lower_bound(entries.begin(), entries.end(), target,
                               [](const auto& e, const IntT& v) { return e.first < v; });
    if (it != entries.end() && it->first == target)
      found = SignMask(mask1 | (it->second << h), r);
  });
  return found;
}

}  // namespace

DegeneracyStatus find_vanishing(const WeightVector& w) {
  check_mitm_size(w);
  auto cache = w.cache_;
  std::call_once(cache->once, [&] {
    ScaledProblem p = scale_problem(w, nullptr);
    std::optional<SignMask> witness;
    if (fits_fast_path(p))
      witness = vanishing_kernel<i128>(p.w, w.size());
    else
      witness = vanishing_kernel<Int>(p.w, w.size());
    if (witness)
      cache->status = {Degeneracy::Degenerate, *witness};
    else
      cache->status = {Degeneracy::NonDegenerate, SignMask()};
  });
  return cache->status;
}

// ---------------------------------------------------------------------------
// alternating sign sum
// ---------------------------------------------------------------------------

namespace {

template <class IntT>
long long alternating_kernel(const std::vector<Int>& wz, int r, int threads, bool allow_zero) {
  auto w = Ops<IntT>::convert(wz);
  std::vector<IntT> w2;
  w2.reserve(w.size());
  for (const auto& x : w) w2.push_back(x + x);

  auto block_sum = [&](std::uint64_t k0, std::uint64_t k1) {
    long long acc = 0;
    gray_walk<IntT>(w, w2, k0, k1, [&](std::uint64_t mask, const IntT& sum, int parity) {
      int s = Ops<IntT>::sign(sum);
      if (s == 0 && !allow_zero)
        throw DegenerateError("vanishing signed sum", SignMask(mask, static_cast<int>(w.size())));
      acc += parity * s;
    });
    return acc;
  };

  if (threads <= 1 || r < 12) return block_sum(0, 1ull << r);
  long long total = 0;
  for (long long p : run_blocks<long long>(r, threads, block_sum)) total += p;
  return total;
}

}  // namespace

long long alternating_sign_sum(const WeightVector& w, const EngineConfig& cfg) {
  check_brute_size(w);
  if (!cfg.allow_zero_sign) {
    DegeneracyStatus st = w.degeneracy_status();
    if (st.kind == Degeneracy::Unknown) st = find_vanishing(w);
    if (st.kind == Degeneracy::Degenerate)
      throw DegenerateError("alternating sign sum over a degenerate weight vector", st.witness);
  }
  ScaledProblem p = scale_problem(w, nullptr);
  if (fits_fast_path(p)) return alternating_kernel<i128>(p.w, w.size(), cfg.threads, cfg.allow_zero_sign);
  return alternating_kernel<Int>(p.w, w.size(), cfg.threads, cfg.allow_zero_sign);
}

}  // namespace signcount

#include <algorithm>
#include <atomic>
#include <thread>

#include "cyclothue/equation.hpp"
#include "cyclothue/errors.hpp"
#include "cyclothue/numtheory.hpp"

namespace cyclothue {

using nt::i64;

namespace {

void scan_one(i64 B, i64 n, i64 x_max, std::vector<SolutionRecord>& out) {
  mpz_class power, z;
  auto test = [&](i64 X) {
    if (nt::pow_mod(nt::mod(X, B), static_cast<nt::u64>(n), B) != 1 % B) return;
    mpz_pow_ui(power.get_mpz_t(), mpz_class(X).get_mpz_t(), static_cast<unsigned long>(n));
    power -= 1;
    mpz_divexact_ui(power.get_mpz_t(), power.get_mpz_t(), static_cast<unsigned long>(B));
    if (power < 0 && n % 2 == 0) return;
    if (mpz_root(z.get_mpz_t(), power.get_mpz_t(), static_cast<unsigned long>(n)) == 0) return;
    const i64 Z = z.get_si();
    out.push_back({B, n, X, Z, Z >= -1 && Z <= 1});
  };
  for (i64 X = -x_max; X <= -2; ++X) test(X);
  for (i64 X = 2; X <= x_max; ++X) test(X);
}

}  // namespace

std::vector<SolutionRecord> scan(const ScanParams& params) {
  if (params.b_min < 2 || params.b_max < params.b_min) throw PreconditionError("scan: need 2 <= b_min <= b_max");
  if (params.x_max < 2) throw PreconditionError("scan: x_max must be at least 2");
  if (params.x_max > 3037000499LL) throw PreconditionError("scan: x_max too large");
  std::vector<i64> ns = params.n_values;
  for (const i64 n : ns) {
    if (n < 2 || n > 4096) throw PreconditionError("scan: exponents must lie in [2, 4096]");
  }
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  const auto count = static_cast<std::size_t>(params.b_max - params.b_min + 1);
  std::vector<std::vector<SolutionRecord>> blocks(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const i64 B = params.b_min + static_cast<i64>(i);
      for (const i64 n : ns) {
        if (params.require_nosplit && !nosplit_holds(B, n)) continue;
        scan_one(B, n, params.x_max, blocks[i]);
      }
    }
  };
  const unsigned threads = std::max(1U, params.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  std::vector<SolutionRecord> out;
  for (auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace cyclothue

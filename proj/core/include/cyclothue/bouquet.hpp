#pragma once

// Hadamard products and W-bouquets of subspaces over a prime field or the
// rationals, with the dimension-growth check for the bouquet of
// A_2 = span{(1, ..., 1), a_2}.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "cyclothue/errors.hpp"
#include "cyclothue/numtheory.hpp"

namespace cyclothue {

struct PrimeField {
  using value_type = std::int64_t;
  std::int64_t p;

  explicit PrimeField(std::int64_t prime) : p(prime) {
    if (prime < 2 || !nt::is_prime(static_cast<nt::u64>(prime))) throw PreconditionError("PrimeField: p must be prime");
  }
  value_type from_int(std::int64_t v) const { return nt::mod(v, p); }
  value_type add(value_type a, value_type b) const { return nt::mod(a + b, p); }
  value_type sub(value_type a, value_type b) const { return nt::mod(a - b, p); }
  value_type mul(value_type a, value_type b) const { return nt::mul_mod(a, b, p); }
  value_type div(value_type a, value_type b) const { return nt::mul_mod(a, nt::inv_mod(b, p), p); }
  bool is_zero(value_type a) const { return a == 0; }
  // Number of elements, or nullopt for an infinite field.
  std::optional<std::int64_t> size() const { return p; }
  value_type random(std::mt19937_64& rng) const { return std::uniform_int_distribution<std::int64_t>(0, p - 1)(rng); }
};

struct RationalField {
  using value_type = mpq_class;

  value_type from_int(std::int64_t v) const { return mpq_class(v); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type div(const value_type& a, const value_type& b) const { return a / b; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  std::optional<std::int64_t> size() const { return std::nullopt; }
  value_type random(std::mt19937_64& rng) const {
    return mpq_class(std::uniform_int_distribution<std::int64_t>(-9, 9)(rng));
  }
};

template <typename F>
using FieldVector = std::vector<typename F::value_type>;

template <typename F>
FieldVector<F> hadamard(const F& field, const FieldVector<F>& x, const FieldVector<F>& y) {
  if (x.size() != y.size()) throw PreconditionError("hadamard: length mismatch");
  FieldVector<F> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(field.mul(x[i], y[i]));
  return out;
}

// Reduced row echelon basis of the span of rows.
template <typename F>
std::vector<FieldVector<F>> rref_basis(const F& field, std::vector<FieldVector<F>> rows) {
  if (rows.empty()) return rows;
  const std::size_t m = rows[0].size();
  for (const auto& r : rows) {
    if (r.size() != m) throw PreconditionError("rref_basis: length mismatch");
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && field.is_zero(rows[piv][col])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const auto lead = rows[rank][col];
    for (auto& v : rows[rank]) v = field.div(v, lead);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || field.is_zero(rows[i][col])) continue;
      const auto f = rows[i][col];
      for (std::size_t j = 0; j < m; ++j) rows[i][j] = field.sub(rows[i][j], field.mul(f, rows[rank][j]));
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

// Rank by fraction-free (Bareiss) elimination.
template <typename F>
std::size_t rank(const F& field, std::vector<FieldVector<F>> rows) {
  if (rows.empty()) return 0;
  const std::size_t m = rows[0].size();
  auto prev = field.from_int(1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < m && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && field.is_zero(rows[piv][col])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      for (std::size_t j = col + 1; j < m; ++j) {
        rows[i][j] = field.div(field.sub(field.mul(rows[i][j], rows[r][col]), field.mul(rows[i][col], rows[r][j])), prev);
      }
      rows[i][col] = field.from_int(0);
    }
    prev = rows[r][col];
    ++r;
  }
  return r;
}

template <typename F>
bool in_span(const F& field, const std::vector<FieldVector<F>>& basis, const FieldVector<F>& v) {
  auto rows = basis;
  const std::size_t before = rank(field, rows);
  rows.push_back(v);
  return rank(field, rows) == before;
}

// L_W = span{[w, x] : w in W, x in L}, as a reduced basis.
template <typename F>
std::vector<FieldVector<F>> bouquet_span(const F& field, const std::vector<FieldVector<F>>& L,
                                         const std::vector<FieldVector<F>>& W) {
  std::vector<FieldVector<F>> products;
  for (const auto& w : W) {
    for (const auto& x : L) products.push_back(hadamard(field, w, x));
  }
  return rref_basis(field, std::move(products));
}

template <typename F>
struct BouquetInstance {
  F field;
  std::size_t m = 0;
  std::vector<FieldVector<F>> L;
  FieldVector<F> a2;
  FieldVector<F> w1;
  std::uint64_t seed = 0;
};

struct BouquetGrowth {
  std::size_t dim_before = 0;
  std::size_t dim_after = 0;
  std::size_t witness_j = 0;  // least j with [w1, a2^j] outside L
};

template <typename F>
void require_bouquet_instance(const BouquetInstance<F>& inst) {
  const auto& f = inst.field;
  if (inst.a2.size() != inst.m || inst.w1.size() != inst.m) throw PreconditionError("bouquet: vector length mismatch");
  for (const auto& v : inst.L) {
    if (v.size() != inst.m) throw PreconditionError("bouquet: basis vector length mismatch");
  }
  if (rank(f, inst.L) >= inst.m) throw PreconditionError("bouquet: L must be a proper subspace");
  for (std::size_t i = 0; i < inst.m; ++i) {
    if (f.is_zero(inst.w1[i])) throw PreconditionError("bouquet: w1 has a zero coordinate");
    for (std::size_t j = i + 1; j < inst.m; ++j) {
      if (f.is_zero(f.sub(inst.a2[i], inst.a2[j]))) throw PreconditionError("bouquet: a2 coordinates must be distinct");
    }
  }
  if (!in_span(f, inst.L, inst.w1)) throw PreconditionError("bouquet: w1 must lie in L");
}

template <typename F>
BouquetGrowth verify_bouquet_growth(const BouquetInstance<F>& inst) {
  require_bouquet_instance(inst);
  const auto& f = inst.field;
  const FieldVector<F> a1(inst.m, f.from_int(1));
  BouquetGrowth out;
  out.dim_before = rank(f, inst.L);
  out.dim_after = bouquet_span(f, inst.L, {a1, inst.a2}).size();
  FieldVector<F> power = inst.w1;
  for (std::size_t j = 1; j <= inst.m; ++j) {
    power = hadamard(f, power, inst.a2);
    if (!in_span(f, inst.L, power)) {
      out.witness_j = j;
      break;
    }
  }
  if (out.witness_j == 0 || out.dim_after <= out.dim_before) {
    throw InvariantViolation("verify_bouquet_growth: bouquet did not grow");
  }
  return out;
}

// (w1, [w1, a2], ..., [w1, a2^{m-1}]).
template <typename F>
std::vector<FieldVector<F>> hadamard_powers(const F& field, const FieldVector<F>& w1, const FieldVector<F>& a2) {
  std::vector<FieldVector<F>> out{w1};
  while (out.size() < w1.size()) out.push_back(hadamard(field, out.back(), a2));
  return out;
}

// Random valid instance with ambient dimension m; retries until the
// conditions on L, w1 and a2 hold.
template <typename F>
BouquetInstance<F> random_bouquet_instance(const F& field, std::size_t m, std::uint64_t seed) {
  if (m < 2) throw PreconditionError("random_bouquet_instance: m must be at least 2");
  if (field.size() && static_cast<std::uint64_t>(*field.size()) < m) {
    throw PreconditionError("random_bouquet_instance: field too small for distinct coordinates");
  }
  std::mt19937_64 rng(seed);
  for (;;) {
    BouquetInstance<F> inst{field, m, {}, {}, {}, seed};
    const std::size_t r = std::uniform_int_distribution<std::size_t>(1, m - 1)(rng);
    for (std::size_t i = 0; i < m; ++i) {
      auto v = field.random(rng);
      while (field.is_zero(v)) v = field.random(rng);
      inst.w1.push_back(v);
    }
    inst.L.push_back(inst.w1);
    for (std::size_t k = 1; k < r; ++k) {
      FieldVector<F> v;
      for (std::size_t i = 0; i < m; ++i) v.push_back(field.random(rng));
      inst.L.push_back(v);
    }
    if (rank(field, inst.L) != r) continue;
    bool distinct = true;
    for (std::size_t i = 0; i < m; ++i) inst.a2.push_back(field.random(rng));
    for (std::size_t i = 0; i < m && distinct; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (field.is_zero(field.sub(inst.a2[i], inst.a2[j]))) {
          distinct = false;
          break;
        }
      }
    }
    if (!distinct) continue;
    return inst;
  }
}

}  // namespace cyclothue

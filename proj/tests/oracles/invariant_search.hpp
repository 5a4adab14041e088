#pragma once

// Brute-force irreducibility and envelope oracles, independent of the
// library's decomposition code.
//
// reducible_by_search: enumerates every vector with coordinates in
// {0, 1, -1, i, -i} and reports whether some nonzero one generates a proper
// invariant subspace. Exponential (5^d), meant for d <= 6.

#include "oracles/elimination.hpp"

#include <vector>

namespace ospd::oracles {

using exactlin::ExactMatrix;
using exactlin::Scalar;
using exactlin::Vector;

// Textbook incremental elimination: rows kept with a normalized pivot.
struct NaiveSpan {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;

  bool add(Vector v) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Scalar f = v[pivots[k]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] - f * rows[k][j];
    }
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return false;
    const Scalar inv = Scalar(1) / v[p];
    for (auto& x : v) x = x * inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Scalar f = rows[k][p];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j) rows[k][j] = rows[k][j] - f * v[j];
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

inline std::size_t naive_closure_dim(const std::vector<ExactMatrix>& mats, const Vector& v) {
  NaiveSpan span;
  std::vector<Vector> queue{v};
  span.add(v);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& m : mats) {
      Vector u = m.apply(queue[i]);
      if (span.add(u)) queue.push_back(std::move(u));
    }
  return span.rows.size();
}

inline bool reducible_by_search(const std::vector<ExactMatrix>& mats, std::size_t d) {
  const Scalar choices[5] = {Scalar(0), Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()};
  std::vector<std::size_t> digit(d, 0);
  for (;;) {
    std::size_t k = 0;
    while (k < d && digit[k] == 4) digit[k++] = 0;
    if (k == d) return false;
    ++digit[k];
    Vector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = choices[digit[i]];
    // Normalizing the first nonzero entry to 1 loses no subspaces.
    std::size_t first = 0;
    while (v[first].is_zero()) ++first;
    if (!v[first].is_one()) continue;
    if (naive_closure_dim(mats, v) < d) return true;
  }
}

// Envelope dimension by closing the span of all products of pairs until the
// rank stops growing.
inline std::size_t naive_envelope_dim(const std::vector<ExactMatrix>& mats, std::size_t d) {
  std::vector<ExactMatrix> basis{ExactMatrix::identity(d)};
  for (const auto& m : mats) basis.push_back(m);
  auto rank_of = [](const std::vector<ExactMatrix>& ms) {
    std::vector<Vector> rows;
    for (const auto& m : ms) rows.push_back(m.vectorize());
    return gauss_rank(rows);
  };
  std::size_t r = rank_of(basis);
  for (;;) {
    std::vector<ExactMatrix> grown;
    std::size_t cur = 0;
    auto keep = [&](const ExactMatrix& m) {
      grown.push_back(m);
      std::size_t rr = rank_of(grown);
      if (rr == cur) grown.pop_back();
      cur = rr;
    };
    for (const auto& a : basis) keep(a);
    const std::size_t base = grown.size();
    for (std::size_t i = 0; i < base; ++i)
      for (std::size_t j = 0; j < base && cur < d * d; ++j) keep(grown[i] * grown[j]);
    if (cur == r) return r;
    r = cur;
    basis = grown;
  }
}

}  // namespace ospd::oracles

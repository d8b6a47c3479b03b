#pragma once

// Brute-force enumeration over 𝔽₂, used as an independent check of the
// linear-algebra answers at small sizes.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "codomin/structures.hpp"

namespace testing {

using namespace codomin;

constexpr std::uint64_t kMaxCandidates = 4096;

/// Every 0/1 matrix of the given shape, in lexicographic order of the entries.
inline std::vector<Matrix> all_matrices_f2(Index rows, Index cols) {
  const Field f2 = Field::prime(2);
  const Index entries = rows * cols;
  if (entries >= 63 || (std::uint64_t{1} << entries) > kMaxCandidates)
    throw std::length_error("oracle: too many candidate matrices");
  std::vector<Matrix> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << entries); ++code) {
    Matrix m = zeros(f2, rows, cols);
    for (Index e = 0; e < entries; ++e)
      if (code >> (entries - 1 - e) & 1) m(e / cols, e % cols) = Scalar(f2, 1);
    out.push_back(std::move(m));
  }
  return out;
}

/// Every subspace of 𝔽₂ⁿ, found as closures of vector sets encoded as bitmasks.
inline std::vector<Subspace> all_subspaces_f2(Index n) {
  const Field f2 = Field::prime(2);
  const unsigned size = 1u << n;
  using Members = std::vector<bool>;
  std::set<Members> seen;
  std::vector<Members> frontier{Members(size, false)};
  frontier[0][0] = true;
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Members> next;
    for (const Members& s : frontier)
      for (unsigned v = 1; v < size; ++v) {
        if (s[v]) continue;
        Members t = s;
        for (unsigned w = 0; w < size; ++w)
          if (s[w]) t[w ^ v] = true;
        if (seen.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  std::vector<Subspace> out;
  for (const Members& s : seen) {
    Matrix cols = zeros(f2, n, size);
    for (unsigned v = 0; v < size; ++v)
      if (s[v])
        for (Index i = 0; i < n; ++i)
          if (v >> i & 1) cols(i, v) = Scalar(f2, 1);
    out.push_back(Subspace::column_span(f2, cols));
  }
  return out;
}

inline std::vector<Matrix> coalgebra_maps_f2(const Coalgebra& src, const Coalgebra& dst) {
  std::vector<Matrix> out;
  for (Matrix& m : all_matrices_f2(dst.dim, src.dim))
    if (violations(CoalgebraMap{src, dst, m}).empty()) out.push_back(std::move(m));
  return out;
}

inline std::vector<Matrix> algebra_maps_f2(const Algebra& src, const Algebra& dst) {
  std::vector<Matrix> out;
  for (Matrix& m : all_matrices_f2(dst.dim, src.dim))
    if (violations(AlgebraMap{src, dst, m}).empty()) out.push_back(std::move(m));
  return out;
}

/// Whether f: A → B is epic against algebra maps into `probe`.
inline bool epic_against_f2(const AlgebraMap& f, const Algebra& probe) {
  const auto maps = algebra_maps_f2(f.dst, probe);
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = i + 1; j < maps.size(); ++j)
      if (equal(maps[i] * f.matrix, maps[j] * f.matrix)) return false;
  return true;
}

/// Whether f: C → D is monic against coalgebra maps out of `probe`.
inline bool monic_against_f2(const CoalgebraMap& f, const Coalgebra& probe) {
  const auto maps = coalgebra_maps_f2(probe, f.src);
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = i + 1; j < maps.size(); ++j)
      if (equal(f.matrix * maps[i], f.matrix * maps[j])) return false;
  return true;
}

/// Every coideal of a small 𝔽₂ coalgebra, as quotient presentations.
inline std::vector<QuotientPresentation> all_quotients_f2(const Coalgebra& c) {
  std::vector<QuotientPresentation> out;
  for (const Subspace& k : all_subspaces_f2(c.dim))
    if (is_coideal(c, k)) out.push_back(quotient_by_coideal(c, k));
  return out;
}

/// The sum of every subcoalgebra inside V, by enumeration.
inline Subspace largest_subcoalgebra_f2(const Coalgebra& c, const Subspace& v) {
  Subspace best = Subspace::zero(c.field, c.dim);
  for (const Subspace& e : all_subspaces_f2(c.dim))
    if (v.contains(e) && is_subcoalgebra(c, e)) best = sum(best, e);
  return best;
}

}  // namespace testing

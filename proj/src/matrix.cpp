#include "morseposet/matrix.hpp"

#include <algorithm>

namespace morseposet {

namespace {

void swap_rows(IntegerMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntegerMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

}  // namespace

SmithResult smith_normal_form(IntegerMatrix m) {
  SmithResult out;
  std::size_t t = 0;
  const std::size_t bound = std::min(m.rows, m.cols);
  while (t < bound) {
    // Locate a nonzero entry of minimal absolute value in the submatrix.
    std::size_t pr = 0, pc = 0;
    Integer best = 0;
    for (std::size_t r = t; r < m.rows; ++r) {
      for (std::size_t c = t; c < m.cols; ++c) {
        const Integer& v = m.at(r, c);
        if (v == 0) continue;
        Integer av = abs(v);
        if (best == 0 || av < best) {
          best = av;
          pr = r;
          pc = c;
        }
      }
    }
    if (best == 0) break;
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);

    bool settled = false;
    while (!settled) {
      settled = true;
      for (std::size_t r = t + 1; r < m.rows; ++r) {
        if (m.at(r, t) == 0) continue;
        Integer q = m.at(r, t) / m.at(t, t);
        for (std::size_t c = t; c < m.cols; ++c)
          m.at(r, c) -= q * m.at(t, c);
        if (m.at(r, t) != 0) {
          // Truncated division left a smaller remainder; promote it.
          swap_rows(m, t, r);
          settled = false;
        }
      }
      for (std::size_t c = t + 1; c < m.cols; ++c) {
        if (m.at(t, c) == 0) continue;
        Integer q = m.at(t, c) / m.at(t, t);
        for (std::size_t r = t; r < m.rows; ++r)
          m.at(r, c) -= q * m.at(r, t);
        if (m.at(t, c) != 0) {
          swap_cols(m, t, c);
          settled = false;
        }
      }
      if (!settled) continue;
      // Pivot must divide the rest of the submatrix for the invariant
      // factor chain; fold an offending row in and restart.
      for (std::size_t r = t + 1; r < m.rows && settled; ++r) {
        for (std::size_t c = t + 1; c < m.cols; ++c) {
          if (m.at(r, c) % m.at(t, t) != 0) {
            for (std::size_t cc = t; cc < m.cols; ++cc)
              m.at(t, cc) += m.at(r, cc);
            settled = false;
            break;
          }
        }
      }
    }
    ++t;
  }
  out.rank = t;
  for (std::size_t i = 0; i < t; ++i) out.factors.push_back(abs(m.at(i, i)));
  return out;
}

std::size_t rank_mod_p(const IntegerMatrix& m, long p) {
  std::vector<long> a(m.rows * m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) {
    long v = static_cast<long>(m.a[i] % p);
    a[i] = (v % p + p) % p;
  }
  auto at = [&](std::size_t r, std::size_t c) -> long& {
    return a[r * m.cols + c];
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows) continue;
    for (std::size_t cc = 0; cc < m.cols; ++cc)
      std::swap(at(rank, cc), at(pivot, cc));
    // Normalize pivot row to 1 via modular inverse (p prime).
    long inv = 1, base = at(rank, c) % p, e = p - 2;
    while (e > 0) {
      if (e & 1) inv = (inv * base) % p;
      base = (base * base) % p;
      e >>= 1;
    }
    for (std::size_t cc = 0; cc < m.cols; ++cc)
      at(rank, cc) = (at(rank, cc) * inv) % p;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank || at(r, c) == 0) continue;
      long f = at(r, c);
      for (std::size_t cc = 0; cc < m.cols; ++cc)
        at(r, cc) = ((at(r, cc) - f * at(rank, cc)) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace morseposet

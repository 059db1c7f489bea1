#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "morseposet/poset.hpp"

namespace morseposet {

using Integer = boost::multiprecision::cpp_int;

/// Dense integer matrix with labeled bases. Entries are arbitrary
/// precision: Smith reduction can grow intermediates without bound.
struct IntegerMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Integer> a;  // row-major
  std::vector<std::string> row_labels, col_labels;

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), a(r * c, 0) {}

  Integer& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Integer& at(std::size_t r, std::size_t c) const {
    return a[r * cols + c];
  }
};

struct SmithResult {
  std::vector<Integer> factors;  // d_1 | d_2 | ... | d_r, all positive
  std::size_t rank = 0;          // == factors.size()
};

/// Smith normal form over Z; pivots by minimal absolute value to limit
/// entry growth. The input is taken by value and consumed.
SmithResult smith_normal_form(IntegerMatrix m);

/// Rank of m over the field with p elements (p prime, caller-checked).
std::size_t rank_mod_p(const IntegerMatrix& m, long p);

}  // namespace morseposet

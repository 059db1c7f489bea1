#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace morseposet {

using Id = std::string;
using Bitset = boost::dynamic_bitset<>;
using IdPair = std::pair<Id, Id>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CycleError : Error {
  using Error::Error;
};
struct UnknownElement : Error {
  using Error::Error;
};
struct PreconditionError : Error {
  using Error::Error;
};

/// A state the underlying theory rules out; reaching it is a bug here.
struct InternalError : Error {
  using Error::Error;
};

/// A finite poset given by its Hasse diagram. Elements are opaque string
/// identifiers, re-indexed densely (in sorted id order) at construction.
/// The reflexive-transitive closure is cached as per-element bitsets and
/// the instance is immutable afterwards, so concurrent readers are safe.
class Poset {
 public:
  Poset() = default;

  /// Builds from an arbitrary acyclic relation: the stored covers are the
  /// transitive reduction of the input's transitive closure. Duplicate
  /// edges are tolerated; a directed cycle raises CycleError.
  static Poset build(std::vector<Id> elements,
                     const std::vector<IdPair>& relations);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::vector<Id>& ids() const { return ids_; }
  const Id& id(std::size_t i) const { return ids_[i]; }
  bool contains(const Id& x) const { return index_.count(x) != 0; }
  std::size_t index(const Id& x) const;

  /// a <= b in the partial order.
  bool leq(std::size_t a, std::size_t b) const { return down_[b].test(a); }
  bool is_cover(std::size_t a, std::size_t b) const;

  /// U_x and F_x as bitsets (both include x itself).
  const Bitset& down_set(std::size_t x) const { return down_[x]; }
  const Bitset& up_set(std::size_t x) const { return up_[x]; }

  /// Cover edges (lower, upper), sorted by index pair.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const {
    return covers_;
  }
  const std::vector<std::size_t>& lower_covers(std::size_t x) const {
    return lower_[x];
  }
  const std::vector<std::size_t>& upper_covers(std::size_t x) const {
    return upper_[x];
  }

  /// Element indices in a fixed linear extension (lower elements first).
  const std::vector<std::size_t>& linear_extension() const { return linext_; }

  std::vector<Id> to_ids(const Bitset& s) const;
  Bitset full_set() const { return Bitset(size()).set(); }

  /// The element of S dominating all of S, if S has a maximum.
  std::optional<std::size_t> maximum_of(const Bitset& s) const;
  std::optional<std::size_t> minimum_of(const Bitset& s) const;

  std::vector<IdPair> cover_id_pairs() const;

 private:
  std::vector<Id> ids_;
  std::map<Id, std::size_t> index_;
  std::vector<Bitset> down_, up_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> lower_, upper_;
  std::vector<std::size_t> linext_;
};

/// A subset of a poset's elements carrying the induced order. `open` marks
/// subposets known to be downward closed (unions of minimal open sets).
struct Subposet {
  const Poset* parent = nullptr;
  Bitset members;
  bool open = false;

  std::size_t count() const { return members.count(); }
  bool empty() const { return members.none(); }
  bool contains(std::size_t i) const { return members.test(i); }
  std::vector<Id> member_ids() const;

  /// Induced cover pairs: transitive reduction of the restricted order.
  std::vector<std::pair<std::size_t, std::size_t>> induced_covers() const;

  /// A standalone Poset on the members with the induced order.
  Poset materialize() const;
};

Subposet full_subposet(const Poset& p);
Subposet make_subposet(const Poset& p, const Bitset& members, bool open = false);

/// Number of connected components of the comparability graph on `members`.
std::size_t component_count(const Poset& p, const Bitset& members);

struct Neighborhoods {
  Subposet u;      // U_x      = { y : y <= x }
  Subposet u_hat;  // U_x - x
  Subposet f;      // F_x      = { y : y >= x }
  Subposet f_hat;  // F_x - x
  Subposet c_hat;  // (U_x u F_x) - x
};

struct HeightProfile {
  std::vector<int> height;  // height(x) = height of U_x
  int poset_height = -1;    // -1 for the empty poset
  bool graded = false;      // every U_x homogeneous; degree == height then
};

struct TwoWideResult {
  bool two_wide = true;
  std::optional<std::array<Id, 3>> witness;  // x < z < y covers, no alternative
};

struct DownWideResult {
  bool down_wide = true;
  std::optional<Id> witness;  // non-minimal element with a single lower cover
};

Poset build_poset(const std::vector<IdPair>& covers);

/// true iff x <= y.
bool order_query(const Poset& p, const Id& x, const Id& y);

Neighborhoods neighborhoods(const Poset& p, const Id& x);

HeightProfile height_profile(const Poset& p);

TwoWideResult is_two_wide(const Poset& p);

/// For w < y with w not covered by y in a two-wide poset, two distinct
/// elements x, x~ with w -< x < y and w -< x~ < y.
std::pair<Id, Id> key_lemma_witness(const Poset& p, const Id& w, const Id& y);

DownWideResult is_down_wide(const Poset& p);

/// Connected components of the Hasse graph, each sorted; count equals b_0.
std::vector<std::vector<Id>> components(const Poset& p);

}  // namespace morseposet

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace locoh {

inline constexpr int kMaxVariables = 64;

/// Subset of a fixed variable universe {0,..,n-1}, stored as a bitmask.
/// All binary operations require both operands to share the same universe.
class VarSet {
 public:
  VarSet() = default;

  explicit VarSet(int universe) : n_(check_universe(universe)) {}

  VarSet(int universe, std::uint64_t bits) : n_(check_universe(universe)), bits_(bits) {
    if (universe < kMaxVariables && (bits >> universe) != 0)
      throw std::invalid_argument("VarSet: bits outside the variable universe");
  }

  static VarSet full(int universe) {
    VarSet s(universe);
    s.bits_ = universe == kMaxVariables ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << universe) - 1;
    return s;
  }

  static VarSet single(int universe, int j) { return VarSet(universe).with(j); }

  int universe_size() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  bool test(int j) const {
    check_index(j);
    return (bits_ >> j) & 1u;
  }

  VarSet with(int j) const {
    check_index(j);
    return VarSet(n_, bits_ | (std::uint64_t{1} << j));
  }

  VarSet without(int j) const {
    check_index(j);
    return VarSet(n_, bits_ & ~(std::uint64_t{1} << j));
  }

  bool subset_of(const VarSet& o) const {
    check_same(o);
    return (bits_ & ~o.bits_) == 0;
  }

  bool intersects(const VarSet& o) const {
    check_same(o);
    return (bits_ & o.bits_) != 0;
  }

  VarSet operator|(const VarSet& o) const {
    check_same(o);
    return VarSet(n_, bits_ | o.bits_);
  }

  VarSet operator&(const VarSet& o) const {
    check_same(o);
    return VarSet(n_, bits_ & o.bits_);
  }

  /// Set difference.
  VarSet operator-(const VarSet& o) const {
    check_same(o);
    return VarSet(n_, bits_ & ~o.bits_);
  }

  VarSet complement() const { return VarSet(n_, full(n_).bits_ & ~bits_); }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  bool operator==(const VarSet&) const = default;

 private:
  static int check_universe(int n) {
    if (n < 0 || n > kMaxVariables)
      throw std::invalid_argument("VarSet: universe size must be in [0,64]");
    return n;
  }

  void check_index(int j) const {
    if (j < 0 || j >= n_) throw std::invalid_argument("VarSet: variable index out of range");
  }

  void check_same(const VarSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("VarSet: variable universe mismatch");
  }

  int n_ = 0;
  std::uint64_t bits_ = 0;
};

/// Order on equal-cardinality sets: lexicographic on the ascending vertex
/// lists. Used as the canonical face order everywhere cochain coordinates
/// are needed.
inline bool face_lex_less(const VarSet& a, const VarSet& b) {
  std::uint64_t x = a.bits(), y = b.bits();
  while (x != 0 && y != 0) {
    const std::uint64_t lx = x & (~x + 1), ly = y & (~y + 1);
    if (lx != ly) return lx < ly;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

/// Keep only the inclusion-maximal sets (deduplicated, face-lex sorted).
std::vector<VarSet> inclusion_maximal(std::vector<VarSet> sets);

/// Keep only the inclusion-minimal sets (deduplicated, face-lex sorted).
std::vector<VarSet> inclusion_minimal(std::vector<VarSet> sets);

}  // namespace locoh

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "locoh/varset.hpp"

namespace locoh {

/// Element of the grading group Z^n.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<int> coords) : c_(std::move(coords)) { check_len(c_); }

  static MultiDegree zero(int n) { return MultiDegree(std::vector<int>(check_n(n), 0)); }

  /// 0/1 vector with ones on the given support.
  static MultiDegree indicator(const VarSet& support) {
    MultiDegree d = zero(support.universe_size());
    for (int j : support.members()) d.c_[static_cast<std::size_t>(j)] = 1;
    return d;
  }

  int n() const { return static_cast<int>(c_.size()); }
  int operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& coords() const { return c_; }

  /// Total degree |alpha| = sum of coordinates.
  int total() const {
    int s = 0;
    for (int v : c_) s += v;
    return s;
  }

  /// The set I_alpha = { j | alpha_j <= -1 }.
  VarSet negative_support() const {
    VarSet s(n());
    for (int j = 0; j < n(); ++j)
      if (c_[static_cast<std::size_t>(j)] <= -1) s = s.with(j);
    return s;
  }

  /// Coordinates where alpha_j >= 1.
  VarSet positive_support() const {
    VarSet s(n());
    for (int j = 0; j < n(); ++j)
      if (c_[static_cast<std::size_t>(j)] >= 1) s = s.with(j);
    return s;
  }

  bool is_zero_one() const {
    for (int v : c_)
      if (v != 0 && v != 1) return false;
    return true;
  }

  bool all_at_least(int bound) const {
    for (int v : c_)
      if (v < bound) return false;
    return true;
  }

  bool coordinatewise_leq(const MultiDegree& o) const {
    check_same(o);
    for (int j = 0; j < n(); ++j)
      if (c_[static_cast<std::size_t>(j)] > o.c_[static_cast<std::size_t>(j)]) return false;
    return true;
  }

  MultiDegree plus_unit(int j) const {
    if (j < 0 || j >= n()) throw std::invalid_argument("MultiDegree: index out of range");
    MultiDegree d = *this;
    ++d.c_[static_cast<std::size_t>(j)];
    return d;
  }

  MultiDegree negated() const {
    MultiDegree d = *this;
    for (int& v : d.c_) v = -v;
    return d;
  }

  MultiDegree operator+(const MultiDegree& o) const {
    check_same(o);
    MultiDegree d = *this;
    for (int j = 0; j < n(); ++j) d.c_[static_cast<std::size_t>(j)] += o[j];
    return d;
  }

  bool operator==(const MultiDegree&) const = default;
  bool operator<(const MultiDegree& o) const {
    check_same(o);
    return c_ < o.c_;
  }

 private:
  static int check_n(int n) {
    if (n < 0 || n > kMaxVariables)
      throw std::invalid_argument("MultiDegree: length must be in [0,64]");
    return n;
  }
  static void check_len(const std::vector<int>& c) { check_n(static_cast<int>(c.size())); }
  void check_same(const MultiDegree& o) const {
    if (n() != o.n()) throw std::invalid_argument("MultiDegree: length mismatch");
  }

  std::vector<int> c_;
};

/// Monomial in n variables, stored as its exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    if (static_cast<int>(e_.size()) > kMaxVariables)
      throw std::invalid_argument("Monomial: too many variables");
    for (int v : e_)
      if (v < 0) throw std::invalid_argument("Monomial: negative exponent");
  }

  static Monomial one(int n) { return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  static Monomial from_support(const VarSet& s) {
    std::vector<int> e(static_cast<std::size_t>(s.universe_size()), 0);
    for (int j : s.members()) e[static_cast<std::size_t>(j)] = 1;
    return Monomial(std::move(e));
  }

  int n() const { return static_cast<int>(e_.size()); }
  int exponent(int j) const { return e_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& exponents() const { return e_; }

  MultiDegree degree() const { return MultiDegree(e_); }

  bool is_one() const {
    for (int v : e_)
      if (v != 0) return false;
    return true;
  }

  bool is_squarefree() const {
    for (int v : e_)
      if (v > 1) return false;
    return true;
  }

  VarSet support() const {
    VarSet s(n());
    for (int j = 0; j < n(); ++j)
      if (e_[static_cast<std::size_t>(j)] > 0) s = s.with(j);
    return s;
  }

  bool divides(const Monomial& o) const {
    check_same(o);
    for (int j = 0; j < n(); ++j)
      if (e_[static_cast<std::size_t>(j)] > o.e_[static_cast<std::size_t>(j)]) return false;
    return true;
  }

  Monomial lcm_with(const Monomial& o) const {
    check_same(o);
    Monomial m = *this;
    for (int j = 0; j < n(); ++j)
      if (o.e_[static_cast<std::size_t>(j)] > m.e_[static_cast<std::size_t>(j)])
        m.e_[static_cast<std::size_t>(j)] = o.e_[static_cast<std::size_t>(j)];
    return m;
  }

  Monomial operator*(const Monomial& o) const {
    check_same(o);
    Monomial m = *this;
    for (int j = 0; j < n(); ++j) m.e_[static_cast<std::size_t>(j)] += o.e_[static_cast<std::size_t>(j)];
    return m;
  }

  /// Exact quotient; requires o | *this.
  Monomial operator/(const Monomial& o) const {
    if (!o.divides(*this)) throw std::invalid_argument("Monomial: quotient is not a monomial");
    Monomial m = *this;
    for (int j = 0; j < n(); ++j) m.e_[static_cast<std::size_t>(j)] -= o.e_[static_cast<std::size_t>(j)];
    return m;
  }

  Monomial power(int d) const {
    if (d < 0) throw std::invalid_argument("Monomial: negative power");
    Monomial m = *this;
    for (int& v : m.e_) v *= d;
    return m;
  }

  bool operator==(const Monomial&) const = default;
  bool operator<(const Monomial& o) const {
    check_same(o);
    return e_ < o.e_;
  }

 private:
  void check_same(const Monomial& o) const {
    if (n() != o.n()) throw std::invalid_argument("Monomial: ambient dimension mismatch");
  }

  std::vector<int> e_;
};

/// Monomial ideal held by its minimal generating set. Construction always
/// minimalizes, so two ideals are equal iff their generator lists are.
/// The zero ideal (no generators) is representable; most operations reject it.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  MonomialIdeal(int n, std::vector<Monomial> gens);

  static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }

  int n() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_proper() const { return !is_unit(); }
  bool is_squarefree() const { return squarefree_; }

  /// Membership: true iff some minimal generator divides m.
  bool contains(const Monomial& m) const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  int n_ = 0;
  std::vector<Monomial> gens_;  // divisibility-incomparable, sorted
  bool squarefree_ = true;
};

/// The unique inclusion-minimal generating subset of the given monomials.
MonomialIdeal minimalize(const std::vector<Monomial>& gens);

/// (m_1^d, ..., m_r^d) for a squarefree ideal; d >= 1.
MonomialIdeal frobenius_power(const MonomialIdeal& ideal, int d);

/// Alexander dual of a squarefree, nonzero, proper monomial ideal:
/// generated by X^F for the inclusion-minimal F meeting the support of
/// every generator.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

/// All inclusion-minimal subsets of {0..n-1} meeting every set in the
/// family (Berge's incremental construction).
std::vector<VarSet> minimal_transversals(int n, const std::vector<VarSet>& family);

}  // namespace locoh

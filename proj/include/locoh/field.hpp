#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace locoh {

/// Runtime choice of coefficient field: exact rationals or GF(p).
/// Cohomology dimensions can depend on the characteristic, so the choice is
/// explicit everywhere and part of every cache key.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime_field(std::uint32_t p);

  /// Accepts "rational", "gf <p>" or "gf<p>"; bare "gf" means GF(32003).
  static FieldSpec parse(const std::string& text);

  std::string name() const;

  auto operator<=>(const FieldSpec&) const = default;
};

/// Element of GF(p) with a runtime modulus. Elements created from different
/// moduli refuse to combine.
class Fp {
 public:
  Fp(std::uint32_t p, long long value) : p_(p) {
    long long r = value % static_cast<long long>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint64_t>(r);
  }

  std::uint32_t modulus() const { return p_; }
  std::uint64_t residue() const { return v_; }

  bool is_zero() const { return v_ == 0; }

  Fp operator+(const Fp& o) const {
    check(o);
    return raw(p_, (v_ + o.v_) % p_);
  }
  Fp operator-(const Fp& o) const {
    check(o);
    return raw(p_, (v_ + p_ - o.v_) % p_);
  }
  Fp operator*(const Fp& o) const {
    check(o);
    return raw(p_, (v_ * o.v_) % p_);
  }
  Fp operator-() const { return raw(p_, v_ == 0 ? 0 : p_ - v_); }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    // extended Euclid on (v, p)
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p_), new_r = static_cast<long long>(v_);
    while (new_r != 0) {
      const long long q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    if (t < 0) t += p_;
    return raw(p_, static_cast<std::uint64_t>(t));
  }

  Fp operator/(const Fp& o) const { return *this * o.inverse(); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  bool operator==(const Fp& o) const {
    check(o);
    return v_ == o.v_;
  }

 private:
  static Fp raw(std::uint32_t p, std::uint64_t v) {
    Fp x(p, 0);
    x.v_ = v;
    return x;
  }
  void check(const Fp& o) const {
    if (p_ != o.p_) throw std::logic_error("Fp: mixed moduli");
  }

  std::uint64_t v_;
  std::uint32_t p_;
};

struct RationalField {
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long k) const { return Elem(static_cast<long>(k)); }
  static bool is_zero(const Elem& e) { return sgn(e) == 0; }
  static std::string str(const Elem& e) { return e.get_str(); }
  FieldSpec spec() const { return FieldSpec::rationals(); }
};

struct PrimeField {
  std::uint32_t p;

  using Elem = Fp;

  Elem zero() const { return Fp(p, 0); }
  Elem one() const { return Fp(p, 1); }
  Elem from_int(long long k) const { return Fp(p, k); }
  static bool is_zero(const Elem& e) { return e.is_zero(); }
  static std::string str(const Elem& e) { return std::to_string(e.residue()); }
  FieldSpec spec() const { return FieldSpec::prime_field(p); }
};

/// Calls fn with the field object selected by spec; fn must be callable with
/// both RationalField and PrimeField.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::Rationals) return fn(RationalField{});
  return fn(PrimeField{spec.p});
}

}  // namespace locoh

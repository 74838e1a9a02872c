#pragma once

// Arithmetic in GF(p^k), p odd.
//
// Elements are encoded as a single integer code in [0, q): the base-p digits
// of the code, least significant first, are the coefficients of the element
// in the polynomial basis 1, x, x^2, ... modulo a fixed monic irreducible.
// The modulus is the first irreducible in the order given by reading
// (c_{k-1}, ..., c_1, c_0) as a base-p integer.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>
#include <compare>

namespace pgq {

enum class FieldErrc {
  not_prime,
  even_characteristic,
  bad_exponent,
  too_large,
  not_prime_power,
  division_by_zero,
};

class field_error : public std::invalid_argument {
 public:
  field_error(FieldErrc code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  FieldErrc code() const noexcept { return code_; }

 private:
  FieldErrc code_;
};

struct FieldElement {
  std::uint32_t code = 0;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as coefficient vectors, lowest degree first.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p prime, a != 0: a^(p-2)
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo b (b nonzero, trimmed).
inline Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = c * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

// Monic polynomial of degree `deg` whose lower coefficients are the base-p
// digits of `index`, read (c_{deg-1}, ..., c_0) most significant first.
inline Poly monic_from_index(std::uint64_t index, unsigned deg, std::uint32_t p) {
  Poly f(deg + 1, 0);
  f[deg] = 1;
  for (unsigned i = 0; i < deg; ++i) {
    f[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return f;
}

inline bool has_root(const Poly& f, std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  if (k == 1) return true;
  if (has_root(f, p)) return false;
  if (k <= 3) return true;
  // trial division by every monic polynomial of degree 2..k/2
  for (unsigned d = 2; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_mod(f, monic_from_index(idx, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Finite field GF(p^k) for odd prime p. Immutable after construction.
class Field {
 public:
  static constexpr std::uint32_t max_order = 1u << 16;

  Field(std::uint32_t p, unsigned k) : p_(p), k_(k) {
    if (k < 1) throw field_error(FieldErrc::bad_exponent, "exponent k must be >= 1");
    if (!detail::is_prime(p)) throw field_error(FieldErrc::not_prime, "characteristic " + std::to_string(p) + " is not prime");
    if (p == 2) throw field_error(FieldErrc::even_characteristic, "even characteristic is not supported");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
      q *= p;
      if (q > max_order) throw field_error(FieldErrc::too_large, "field order exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);

    if (k_ > 1) {
      std::uint64_t count = q_ / p_;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        auto f = detail::monic_from_index(idx, k_, p_);
        if (detail::is_irreducible(f, p_)) {
          modulus_ = std::move(f);
          break;
        }
      }
    }
    build_tables();
  }

  /// Field of order q; q must be an odd prime power.
  static Field of_order(std::uint64_t q) {
    if (q < 3) throw field_error(FieldErrc::not_prime_power, "order " + std::to_string(q) + " is not an odd prime power");
    if (q % 2 == 0) throw field_error(FieldErrc::even_characteristic, "even order " + std::to_string(q) + " is not supported");
    std::uint64_t p = 3;
    while (q % p != 0) p += 2;
    unsigned k = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r != 1) throw field_error(FieldErrc::not_prime_power, "order " + std::to_string(q) + " is not a prime power");
    if (q > max_order) throw field_error(FieldErrc::too_large, "field order exceeds 2^16");
    return Field(static_cast<std::uint32_t>(p), k);
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }

  /// Coefficients of the modulus, constant term first; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  FieldElement element(std::uint32_t code) const {
    if (code >= q_) throw std::out_of_range("field code out of range");
    return {code};
  }
  /// Image of the integer n under Z -> GF(p).
  FieldElement from_int(std::int64_t n) const {
    auto r = n % std::int64_t(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
  }

  FieldElement add(FieldElement x, FieldElement y) const noexcept {
    if (k_ == 1) return {(x.code + y.code) % p_};
    std::uint32_t out = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
      out += ((x.code % p_ + y.code % p_) % p_) * place;
      x.code /= p_;
      y.code /= p_;
      place *= p_;
    }
    return {out};
  }

  FieldElement neg(FieldElement x) const noexcept {
    if (k_ == 1) return {(p_ - x.code) % p_};
    std::uint32_t out = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
      out += ((p_ - x.code % p_) % p_) * place;
      x.code /= p_;
      place *= p_;
    }
    return {out};
  }

  FieldElement sub(FieldElement x, FieldElement y) const noexcept { return add(x, neg(y)); }

  FieldElement mul(FieldElement x, FieldElement y) const noexcept {
    if (x.code == 0 || y.code == 0) return {0};
    return {exp_[(log_[x.code] + log_[y.code]) % (q_ - 1)]};
  }

  FieldElement inv(FieldElement x) const {
    if (x.code == 0) throw field_error(FieldErrc::division_by_zero, "inverse of zero");
    return {exp_[(q_ - 1 - log_[x.code]) % (q_ - 1)]};
  }

  FieldElement div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }

  FieldElement pow(FieldElement x, std::uint64_t e) const noexcept {
    if (e == 0) return {1};
    if (x.code == 0) return {0};
    return {exp_[(std::uint64_t(log_[x.code]) * (e % (q_ - 1))) % (q_ - 1)]};
  }

  /// Multiplicative order of a nonzero element.
  std::uint32_t multiplicative_order(FieldElement x) const {
    if (x.code == 0) throw field_error(FieldErrc::division_by_zero, "zero has no multiplicative order");
    std::uint32_t ord = 1;
    for (FieldElement y = x; y.code != 1; y = mul_poly(y, x)) ++ord;
    return ord;
  }

  /// Smallest code of multiplicative order q - 1.
  FieldElement primitive_root() const noexcept { return {primitive_}; }

  /// Multiplication straight from the polynomial representation.
  FieldElement mul_poly(FieldElement x, FieldElement y) const {
    if (k_ == 1) return {static_cast<std::uint32_t>(std::uint64_t(x.code) * y.code % p_)};
    detail::Poly a = digits(x.code), b = digits(y.code), c(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = 0; j < k_; ++j)
        c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t(a[i]) * b[j]) % p_);
    auto r = detail::poly_mod(std::move(c), modulus_, p_);
    std::uint32_t code = 0;
    for (std::size_t i = r.size(); i-- > 0;) code = code * p_ + r[i];
    return {code};
  }

 private:
  detail::Poly digits(std::uint32_t code) const {
    detail::Poly d(k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
      d[i] = code % p_;
      code /= p_;
    }
    return d;
  }

  void build_tables() {
    // search for the smallest generator of the multiplicative group
    std::vector<std::uint32_t> prime_factors;
    std::uint32_t m = q_ - 1;
    for (std::uint32_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        prime_factors.push_back(d);
        while (m % d == 0) m /= d;
      }
    }
    if (m > 1) prime_factors.push_back(m);

    auto slow_pow = [this](FieldElement x, std::uint64_t e) {
      FieldElement r{1};
      while (e) {
        if (e & 1) r = mul_poly(r, x);
        x = mul_poly(x, x);
        e >>= 1;
      }
      return r;
    };
    for (std::uint32_t c = 1; c < q_; ++c) {
      bool ok = true;
      for (auto r : prime_factors) {
        if (slow_pow({c}, (q_ - 1) / r).code == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        primitive_ = c;
        break;
      }
    }

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    FieldElement cur{1};
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
      exp_[i] = cur.code;
      log_[cur.code] = i;
      cur = mul_poly(cur, {primitive_});
    }
  }

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_ = 0;
  detail::Poly modulus_;
  std::uint32_t primitive_ = 1;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace pgq

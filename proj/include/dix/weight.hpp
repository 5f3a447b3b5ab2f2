#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "dix/rational.hpp"

namespace dix {

// A vector of t^* in ambient epsilon-coordinates.
struct Weight {
  std::vector<Rational> c;

  Weight() = default;
  explicit Weight(std::size_t n) : c(n) {}
  Weight(std::initializer_list<Rational> values) : c(values) {}
  explicit Weight(std::vector<Rational> values) : c(std::move(values)) {}

  std::size_t size() const { return c.size(); }
  Rational& operator[](std::size_t i) { return c[i]; }
  const Rational& operator[](std::size_t i) const { return c[i]; }

  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Rational& s);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Weight a, const Rational& s) { return a *= s; }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }

  friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  // Lexicographic on coordinates.
  friend bool operator<(const Weight& a, const Weight& b);
};

// Standard inner product on coordinates.
Rational inner(const Weight& a, const Weight& b);

// 2(lambda, alpha)/(alpha, alpha).
Rational pairing(const Weight& lambda, const Weight& alpha);

// s_alpha(v) = v - <v, alpha^vee> alpha.
Weight reflect(const Weight& v, const Weight& alpha);

std::string to_string(const Weight& w);

}  // namespace dix

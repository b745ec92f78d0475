#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace wts {

enum class SemiringId {
  Boolean,
  Natural,
  Integer,
  Rational,
  RationalNonneg,
  MaxPlusNat,
  MaxPlusInt,
  MinPlusNat,
  MinPlusInt,
};

SemiringId semiring_id_from_name(const std::string& name);
const std::string& semiring_name(SemiringId id);
std::vector<SemiringId> all_semiring_ids();

// A carrier element. Exact everywhere: booleans, arbitrary-precision
// integers, canonical rationals (lowest terms, positive denominator), and a
// distinguished tropical infinity (sign -1 for -inf, +1 for +inf).
class Weight {
public:
  struct Infinity {
    int sign;  // -1 or +1
    bool operator==(const Infinity& o) const { return sign == o.sign; }
  };

  Weight() : v_(false) {}

  static Weight boolean(bool b) { return Weight(Var(b)); }
  static Weight integer(mpz_class z) { return Weight(Var(std::move(z))); }
  static Weight integer(long z) { return Weight(Var(mpz_class(z))); }
  static Weight rational(mpq_class q) {
    q.canonicalize();
    return Weight(Var(std::move(q)));
  }
  static Weight rational(long num, long den);
  static Weight neg_infinity() { return Weight(Var(Infinity{-1})); }
  static Weight pos_infinity() { return Weight(Var(Infinity{+1})); }

  bool is_boolean() const { return std::holds_alternative<bool>(v_); }
  bool is_integer() const { return std::holds_alternative<mpz_class>(v_); }
  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  bool is_infinite() const { return std::holds_alternative<Infinity>(v_); }

  bool as_boolean() const { return std::get<bool>(v_); }
  const mpz_class& as_integer() const { return std::get<mpz_class>(v_); }
  const mpq_class& as_rational() const { return std::get<mpq_class>(v_); }
  int infinity_sign() const { return std::get<Infinity>(v_).sign; }

  // Structural equality; all representations are canonical.
  bool operator==(const Weight& o) const { return v_ == o.v_; }
  bool operator!=(const Weight& o) const { return !(*this == o); }

  // Canonical text form: "0"/"1" for booleans, decimal integers, "p/q"
  // fractions (plain integer when the denominator is 1), "-inf"/"+inf".
  std::string str() const;

private:
  using Var = std::variant<bool, mpz_class, mpq_class, Infinity>;
  explicit Weight(Var v) : v_(std::move(v)) {}
  Var v_;
};

// One of the nine fixed commutative semirings, exposing a uniform interface
// used by every evaluator. Instances are immutable values.
class Semiring {
public:
  explicit Semiring(SemiringId id) : id_(id) {}

  SemiringId id() const { return id_; }
  const std::string& name() const { return semiring_name(id_); }

  Weight zero() const;
  Weight one() const;
  Weight add(const Weight& a, const Weight& b) const;
  Weight mul(const Weight& a, const Weight& b) const;
  bool eq(const Weight& a, const Weight& b) const { return a == b; }
  bool is_zero(const Weight& a) const { return a == zero(); }

  // Throws ParseError on syntax errors, ValidationError when the value lies
  // outside the carrier (e.g. negative weight in natural).
  Weight parse(const std::string& text) const;
  std::string render(const Weight& w) const { return w.str(); }
  void validate(const Weight& w) const;

  // Uniform-ish sample with magnitudes bounded by `magnitude`; tropical
  // carriers include their infinity with small probability.
  Weight random(std::mt19937_64& rng, long magnitude = 1000) const;

private:
  bool tropical() const;
  SemiringId id_;
};

Semiring make_semiring(SemiringId id);
Semiring make_semiring(const std::string& name);

// Law checking is generic over an operation table so deliberately broken
// stand-ins can be probed by the same code path.
struct SemiringOps {
  std::string name;
  std::function<Weight()> zero;
  std::function<Weight()> one;
  std::function<Weight(const Weight&, const Weight&)> add;
  std::function<Weight(const Weight&, const Weight&)> mul;
  std::function<bool(const Weight&, const Weight&)> eq;
  std::function<Weight(std::mt19937_64&)> sample;
};

SemiringOps ops_of(const Semiring& s, long magnitude = 1000);

struct LawFailure {
  std::string law;
  Weight a, b, c;
  std::string detail;
};

struct LawReport {
  bool ok = true;
  int samples = 0;
  std::vector<LawFailure> failures;  // first failure per law
  std::string summary() const;
};

LawReport check_semiring_laws(const SemiringOps& ops, int samples, std::uint64_t seed = 1);
LawReport check_semiring_laws(const Semiring& s, int samples, std::uint64_t seed = 1);

}  // namespace wts

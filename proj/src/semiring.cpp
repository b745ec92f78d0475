#include "semiring.hpp"

#include <array>
#include <sstream>

#include "rng.hpp"

namespace wts {

namespace {

struct NameEntry {
  SemiringId id;
  const char* name;
};

constexpr std::array<NameEntry, 9> kNames = {{
    {SemiringId::Boolean, "boolean"},
    {SemiringId::Natural, "natural"},
    {SemiringId::Integer, "integer"},
    {SemiringId::Rational, "rational"},
    {SemiringId::RationalNonneg, "rational-nonneg"},
    {SemiringId::MaxPlusNat, "max-plus-nat"},
    {SemiringId::MaxPlusInt, "max-plus-int"},
    {SemiringId::MinPlusNat, "min-plus-nat"},
    {SemiringId::MinPlusInt, "min-plus-int"},
}};

}  // namespace

SemiringId semiring_id_from_name(const std::string& name) {
  for (const auto& e : kNames)
    if (name == e.name) return e.id;
  throw ParseError("unknown semiring identifier: \"" + name + "\"");
}

const std::string& semiring_name(SemiringId id) {
  static const std::array<std::string, 9> names = [] {
    std::array<std::string, 9> a;
    for (const auto& e : kNames) a[static_cast<size_t>(e.id)] = e.name;
    return a;
  }();
  return names[static_cast<size_t>(id)];
}

std::vector<SemiringId> all_semiring_ids() {
  std::vector<SemiringId> out;
  for (const auto& e : kNames) out.push_back(e.id);
  return out;
}

Weight Weight::rational(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return Weight(Var(std::move(q)));
}

std::string Weight::str() const {
  if (is_boolean()) return as_boolean() ? "1" : "0";
  if (is_integer()) return as_integer().get_str();
  if (is_rational()) {
    const mpq_class& q = as_rational();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_str();
  }
  return infinity_sign() < 0 ? "-inf" : "+inf";
}

bool Semiring::tropical() const {
  switch (id_) {
    case SemiringId::MaxPlusNat:
    case SemiringId::MaxPlusInt:
    case SemiringId::MinPlusNat:
    case SemiringId::MinPlusInt:
      return true;
    default:
      return false;
  }
}

Weight Semiring::zero() const {
  switch (id_) {
    case SemiringId::Boolean: return Weight::boolean(false);
    case SemiringId::Natural:
    case SemiringId::Integer: return Weight::integer(0);
    case SemiringId::Rational:
    case SemiringId::RationalNonneg: return Weight::rational(mpq_class(0));
    case SemiringId::MaxPlusNat:
    case SemiringId::MaxPlusInt: return Weight::neg_infinity();
    case SemiringId::MinPlusNat:
    case SemiringId::MinPlusInt: return Weight::pos_infinity();
  }
  throw ValidationError("bad semiring id");
}

Weight Semiring::one() const {
  switch (id_) {
    case SemiringId::Boolean: return Weight::boolean(true);
    case SemiringId::Natural:
    case SemiringId::Integer: return Weight::integer(1);
    case SemiringId::Rational:
    case SemiringId::RationalNonneg: return Weight::rational(mpq_class(1));
    default: return Weight::integer(0);  // tropical unit
  }
}

Weight Semiring::add(const Weight& a, const Weight& b) const {
  switch (id_) {
    case SemiringId::Boolean:
      return Weight::boolean(a.as_boolean() || b.as_boolean());
    case SemiringId::Natural:
    case SemiringId::Integer:
      return Weight::integer(mpz_class(a.as_integer() + b.as_integer()));
    case SemiringId::Rational:
    case SemiringId::RationalNonneg:
      return Weight::rational(mpq_class(a.as_rational() + b.as_rational()));
    case SemiringId::MaxPlusNat:
    case SemiringId::MaxPlusInt: {
      if (a.is_infinite()) return b;  // -inf is neutral
      if (b.is_infinite()) return a;
      return Weight::integer(a.as_integer() >= b.as_integer() ? a.as_integer() : b.as_integer());
    }
    case SemiringId::MinPlusNat:
    case SemiringId::MinPlusInt: {
      if (a.is_infinite()) return b;  // +inf is neutral
      if (b.is_infinite()) return a;
      return Weight::integer(a.as_integer() <= b.as_integer() ? a.as_integer() : b.as_integer());
    }
  }
  throw ValidationError("bad semiring id");
}

Weight Semiring::mul(const Weight& a, const Weight& b) const {
  switch (id_) {
    case SemiringId::Boolean:
      return Weight::boolean(a.as_boolean() && b.as_boolean());
    case SemiringId::Natural:
    case SemiringId::Integer:
      return Weight::integer(mpz_class(a.as_integer() * b.as_integer()));
    case SemiringId::Rational:
    case SemiringId::RationalNonneg:
      return Weight::rational(mpq_class(a.as_rational() * b.as_rational()));
    default: {
      // tropical product: additive, absorbed by the infinity
      if (a.is_infinite()) return a;
      if (b.is_infinite()) return b;
      return Weight::integer(mpz_class(a.as_integer() + b.as_integer()));
    }
  }
}

void Semiring::validate(const Weight& w) const {
  switch (id_) {
    case SemiringId::Boolean:
      if (!w.is_boolean()) throw ValidationError("boolean weight expected, got " + w.str());
      return;
    case SemiringId::Natural:
      if (!w.is_integer() || w.as_integer() < 0)
        throw ValidationError("natural weight expected, got " + w.str());
      return;
    case SemiringId::Integer:
      if (!w.is_integer()) throw ValidationError("integer weight expected, got " + w.str());
      return;
    case SemiringId::Rational:
      if (!w.is_rational()) throw ValidationError("rational weight expected, got " + w.str());
      return;
    case SemiringId::RationalNonneg:
      if (!w.is_rational() || w.as_rational() < 0)
        throw ValidationError("nonnegative rational weight expected, got " + w.str());
      return;
    case SemiringId::MaxPlusNat:
      if (w.is_infinite() && w.infinity_sign() == -1) return;
      if (!w.is_integer() || w.as_integer() < 0)
        throw ValidationError("max-plus-nat weight expected, got " + w.str());
      return;
    case SemiringId::MaxPlusInt:
      if (w.is_infinite() && w.infinity_sign() == -1) return;
      if (!w.is_integer()) throw ValidationError("max-plus-int weight expected, got " + w.str());
      return;
    case SemiringId::MinPlusNat:
      if (w.is_infinite() && w.infinity_sign() == +1) return;
      if (!w.is_integer() || w.as_integer() < 0)
        throw ValidationError("min-plus-nat weight expected, got " + w.str());
      return;
    case SemiringId::MinPlusInt:
      if (w.is_infinite() && w.infinity_sign() == +1) return;
      if (!w.is_integer()) throw ValidationError("min-plus-int weight expected, got " + w.str());
      return;
  }
}

namespace {

// optional '-', digits, optional '/' digits. No whitespace, no exponents.
bool looks_like_number(const std::string& s, bool* has_slash) {
  *has_slash = false;
  size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  *has_slash = true;
  ++i;
  digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  return digits > 0 && i == s.size();
}

}  // namespace

Weight Semiring::parse(const std::string& text) const {
  Weight w;
  if (text == "-inf") {
    w = Weight::neg_infinity();
  } else if (text == "+inf") {
    w = Weight::pos_infinity();
  } else {
    bool has_slash = false;
    if (!looks_like_number(text, &has_slash))
      throw ParseError("bad weight literal: \"" + text + "\"");
    if (id_ == SemiringId::Boolean) {
      if (text == "0") w = Weight::boolean(false);
      else if (text == "1") w = Weight::boolean(true);
      else throw ValidationError("boolean weight must be 0 or 1, got \"" + text + "\"");
      return w;
    }
    if (id_ == SemiringId::Rational || id_ == SemiringId::RationalNonneg) {
      mpq_class q;
      if (q.set_str(text, 10) != 0) throw ParseError("bad weight literal: \"" + text + "\"");
      if (q.get_den() == 0) throw ParseError("zero denominator: \"" + text + "\"");
      q.canonicalize();
      w = Weight::rational(std::move(q));
    } else {
      if (has_slash) throw ValidationError("fractional weight not in carrier: \"" + text + "\"");
      mpz_class z;
      if (z.set_str(text, 10) != 0) throw ParseError("bad weight literal: \"" + text + "\"");
      w = Weight::integer(std::move(z));
    }
  }
  validate(w);
  return w;
}

Weight Semiring::random(std::mt19937_64& rng, long magnitude) const {
  switch (id_) {
    case SemiringId::Boolean:
      return Weight::boolean(rng_bool(rng));
    case SemiringId::Natural:
      return Weight::integer(rng_range(rng, 0, magnitude));
    case SemiringId::Integer:
      return Weight::integer(rng_range(rng, -magnitude, magnitude));
    case SemiringId::Rational: {
      long den = rng_range(rng, 1, magnitude);
      return Weight::rational(rng_range(rng, -magnitude, magnitude), den);
    }
    case SemiringId::RationalNonneg: {
      long den = rng_range(rng, 1, magnitude);
      return Weight::rational(rng_range(rng, 0, magnitude), den);
    }
    case SemiringId::MaxPlusNat:
      if (rng_chance(rng, 1, 8)) return Weight::neg_infinity();
      return Weight::integer(rng_range(rng, 0, magnitude));
    case SemiringId::MaxPlusInt:
      if (rng_chance(rng, 1, 8)) return Weight::neg_infinity();
      return Weight::integer(rng_range(rng, -magnitude, magnitude));
    case SemiringId::MinPlusNat:
      if (rng_chance(rng, 1, 8)) return Weight::pos_infinity();
      return Weight::integer(rng_range(rng, 0, magnitude));
    case SemiringId::MinPlusInt:
      if (rng_chance(rng, 1, 8)) return Weight::pos_infinity();
      return Weight::integer(rng_range(rng, -magnitude, magnitude));
  }
  throw ValidationError("bad semiring id");
}

Semiring make_semiring(SemiringId id) { return Semiring(id); }
Semiring make_semiring(const std::string& name) {
  return Semiring(semiring_id_from_name(name));
}

SemiringOps ops_of(const Semiring& s, long magnitude) {
  SemiringOps ops;
  ops.name = s.name();
  ops.zero = [s] { return s.zero(); };
  ops.one = [s] { return s.one(); };
  ops.add = [s](const Weight& a, const Weight& b) { return s.add(a, b); };
  ops.mul = [s](const Weight& a, const Weight& b) { return s.mul(a, b); };
  ops.eq = [s](const Weight& a, const Weight& b) { return s.eq(a, b); };
  ops.sample = [s, magnitude](std::mt19937_64& rng) { return s.random(rng, magnitude); };
  return ops;
}

std::string LawReport::summary() const {
  std::ostringstream os;
  if (ok) {
    os << "all laws hold on " << samples << " samples";
  } else {
    os << failures.size() << " law(s) failed:";
    for (const auto& f : failures)
      os << " [" << f.law << " at a=" << f.a.str() << " b=" << f.b.str()
         << " c=" << f.c.str() << "]";
  }
  return os.str();
}

LawReport check_semiring_laws(const SemiringOps& ops, int samples, std::uint64_t seed) {
  if (samples < 1) throw ValidationError("law check needs at least one sample");
  LawReport report;
  report.samples = samples;
  std::mt19937_64 rng(seed);

  struct Law {
    const char* name;
    std::function<bool(const Weight&, const Weight&, const Weight&)> holds;
  };
  const Weight zero = ops.zero();
  const Weight one = ops.one();
  std::vector<Law> laws = {
      {"add-commutative",
       [&](const Weight& a, const Weight& b, const Weight&) {
         return ops.eq(ops.add(a, b), ops.add(b, a));
       }},
      {"mul-commutative",
       [&](const Weight& a, const Weight& b, const Weight&) {
         return ops.eq(ops.mul(a, b), ops.mul(b, a));
       }},
      {"add-associative",
       [&](const Weight& a, const Weight& b, const Weight& c) {
         return ops.eq(ops.add(ops.add(a, b), c), ops.add(a, ops.add(b, c)));
       }},
      {"mul-associative",
       [&](const Weight& a, const Weight& b, const Weight& c) {
         return ops.eq(ops.mul(ops.mul(a, b), c), ops.mul(a, ops.mul(b, c)));
       }},
      {"left-distributive",
       [&](const Weight& a, const Weight& b, const Weight& c) {
         return ops.eq(ops.mul(a, ops.add(b, c)), ops.add(ops.mul(a, b), ops.mul(a, c)));
       }},
      {"right-distributive",
       [&](const Weight& a, const Weight& b, const Weight& c) {
         return ops.eq(ops.mul(ops.add(b, c), a), ops.add(ops.mul(b, a), ops.mul(c, a)));
       }},
      {"additive-identity",
       [&](const Weight& a, const Weight&, const Weight&) {
         return ops.eq(ops.add(a, zero), a);
       }},
      {"multiplicative-identity",
       [&](const Weight& a, const Weight&, const Weight&) {
         return ops.eq(ops.mul(a, one), a) && ops.eq(ops.mul(one, a), a);
       }},
      {"annihilation",
       [&](const Weight& a, const Weight&, const Weight&) {
         return ops.eq(ops.mul(a, zero), zero) && ops.eq(ops.mul(zero, a), zero);
       }},
  };
  std::vector<bool> failed(laws.size(), false);

  for (int i = 0; i < samples; ++i) {
    Weight a = ops.sample(rng);
    Weight b = ops.sample(rng);
    Weight c = ops.sample(rng);
    for (size_t l = 0; l < laws.size(); ++l) {
      if (failed[l]) continue;
      if (!laws[l].holds(a, b, c)) {
        failed[l] = true;
        report.ok = false;
        report.failures.push_back({laws[l].name, a, b, c, ops.name});
      }
    }
  }
  return report;
}

LawReport check_semiring_laws(const Semiring& s, int samples, std::uint64_t seed) {
  return check_semiring_laws(ops_of(s), samples, seed);
}

}  // namespace wts

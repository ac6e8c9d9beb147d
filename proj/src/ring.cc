// Copyright 2026 The czdg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "czdg/ring.h"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>
#include <utility>

#include "czdg/error.h"
#include "czdg/numeric.h"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace czdg {
namespace {

void check_order(std::uint64_t order, std::size_t cap, const std::string& what) {
  if (order < 2) {
    throw Error(ErrorCode::kOrderOutOfRange,
                what + " has order " + std::to_string(order) + ", below 2");
  }
  if (order > cap || order > kMaxCap) {
    throw Error(ErrorCode::kOrderOutOfRange,
                what + " has order " + std::to_string(order) + ", exceeds the order cap " +
                    std::to_string(std::min<std::size_t>(cap, kMaxCap)));
  }
}

// Dense polynomial over Z_p, coefficient i multiplies t^i.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo the monic polynomial g.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    std::uint64_t lead = f.back();
    std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p * p - lead * g[i] % p) % p;
    }
    trim(f);
  }
  return f;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& g, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_mod(std::move(prod), g, p);
}

// Digits of v in base p, least significant first, padded to `len`.
Poly digits(std::uint64_t v, std::uint64_t p, std::size_t len) {
  Poly d(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

std::uint64_t undigits(const Poly& f, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = f.size(); i-- > 0;) v = v * p + f[i];
  return v;
}

// Monic polynomial t^k + sum c_i t^i where v encodes (c_{k-1}, ..., c_0) with
// c_{k-1} as the most significant base-p digit.
Poly monic_from_code(std::uint64_t v, std::uint64_t p, unsigned k) {
  Poly f = digits(v, p, k);
  f.push_back(1);
  return f;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= k; ++d) {
    const std::uint64_t count = *checked_pow(p, d, ~std::uint64_t{0});
    for (std::uint64_t v = 0; v < count; ++v) {
      if (poly_mod(f, monic_from_code(v, p, d), p).empty()) return false;
    }
  }
  return true;
}

std::string gf_label(std::uint64_t v, std::uint64_t p, unsigned k) {
  Poly f = digits(v, p, k);
  std::string out;
  for (unsigned i = k; i-- > 0;) {
    if (f[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(f[i]);
      continue;
    }
    if (f[i] != 1) out += std::to_string(f[i]);
    out += 't';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

// Every axiom instance whose first argument is `a`, in a fixed order.
std::optional<std::string> check_row(const FiniteRing& r, Element a) {
  const Element n = static_cast<Element>(r.order());
  auto at = [&](const char* what, Element x, Element y, Element z) {
    return std::string(what) + " fails at (" + r.label(x) + ", " + r.label(y) +
           ", " + r.label(z) + ")";
  };
  if (r.add(a, r.zero()) != a) return at("additive identity", a, a, a);
  if (r.mul(a, r.one()) != a) return at("multiplicative identity", a, a, a);
  if (r.add(a, r.neg(a)) != r.zero()) return at("additive inverse", a, a, a);
  for (Element b = 0; b < n; ++b) {
    const Element ab_add = r.add(a, b);
    const Element ab_mul = r.mul(a, b);
    if (ab_add != r.add(b, a)) return at("commutativity of +", a, b, b);
    if (ab_mul != r.mul(b, a)) return at("commutativity of *", a, b, b);
    for (Element c = 0; c < n; ++c) {
      if (r.add(ab_add, c) != r.add(a, r.add(b, c))) {
        return at("associativity of +", a, b, c);
      }
      if (r.mul(ab_mul, c) != r.mul(a, r.mul(b, c))) {
        return at("associativity of *", a, b, c);
      }
      if (r.mul(a, r.add(b, c)) != r.add(ab_mul, r.mul(a, c))) {
        return at("distributivity", a, b, c);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::uint64_t> gf_modulus(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
  for (std::uint64_t v = 0;; ++v) {
    Poly f = monic_from_code(v, p, k);
    if (is_irreducible(f, p)) return f;
  }
}

std::size_t cap_from_env() {
  const char* raw = std::getenv("CZDG_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultCap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v < 2 || v > kMaxCap) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("CZDG_CAP must be an integer in [2, ") +
                    std::to_string(kMaxCap) + "], got '" + raw + "'");
  }
  return static_cast<std::size_t>(v);
}

FiniteRing::FiniteRing(std::size_t order, std::vector<TableEntry> add_table,
                       std::vector<TableEntry> mul_table, Element zero,
                       Element one, std::vector<std::string> labels,
                       std::string source_spec)
    : order_(order),
      add_(std::move(add_table)),
      mul_(std::move(mul_table)),
      zero_(zero),
      one_(one),
      labels_(std::move(labels)),
      source_spec_(std::move(source_spec)) {
  if (order_ < 2 || order_ > kMaxCap) {
    throw Error(ErrorCode::kOrderOutOfRange,
                "ring order " + std::to_string(order_) +
                    (order_ < 2 ? " below 2" : " exceeds the order cap"));
  }
  if (add_.size() != order_ * order_ || mul_.size() != order_ * order_ ||
      labels_.size() != order_) {
    throw Error(ErrorCode::kInvalidArgument, "ring tables have wrong shape");
  }
  if (zero_ >= order_ || one_ >= order_ || zero_ == one_) {
    throw Error(ErrorCode::kInvalidArgument, "ring needs distinct 0 and 1");
  }
  for (std::size_t i = 0; i < add_.size(); ++i) {
    if (add_[i] >= order_ || mul_[i] >= order_) {
      throw Error(ErrorCode::kInvalidArgument, "table entry out of range");
    }
  }
  // A missing inverse leaves neg(a) = a; find_axiom_violation reports it.
  neg_.resize(order_);
  for (Element a = 0; a < order_; ++a) {
    neg_[a] = static_cast<TableEntry>(a);
    for (Element b = 0; b < order_; ++b) {
      if (add(a, b) == zero_) {
        neg_[a] = static_cast<TableEntry>(b);
        break;
      }
    }
  }
}

std::optional<Element> FiniteRing::find(const std::string& text) const {
  for (Element a = 0; a < order_; ++a) {
    if (labels_[a] == text) return a;
  }
  return std::nullopt;
}

FiniteRing FiniteRing::with_source_spec(std::string spec) const {
  FiniteRing copy = *this;
  copy.source_spec_ = std::move(spec);
  return copy;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(bits_.count());
  bits_.for_each([&](std::size_t i) { out.push_back(static_cast<Element>(i)); });
  return out;
}

FiniteRing build_zn(std::uint64_t n, std::size_t cap) {
  check_order(n, cap, "Z" + std::to_string(n));
  const std::size_t order = n;
  std::vector<FiniteRing::TableEntry> add(order * order), mul(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      add[a * order + b] = static_cast<FiniteRing::TableEntry>((a + b) % n);
      mul[a * order + b] = static_cast<FiniteRing::TableEntry>((a * b) % n);
    }
  }
  std::vector<std::string> labels(order);
  for (std::size_t a = 0; a < order; ++a) labels[a] = std::to_string(a);
  return FiniteRing(order, std::move(add), std::move(mul), 0, 1,
                    std::move(labels), "Z" + std::to_string(n));
}

FiniteRing build_gf(std::uint64_t p, unsigned k, std::size_t cap) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
  if (k == 0) {
    throw Error(ErrorCode::kOrderOutOfRange, "field degree must be positive");
  }
  const auto order_or = checked_pow(p, k, kMaxCap);
  const std::string name = "GF(" + (order_or ? std::to_string(*order_or)
                                             : std::to_string(p) + "^" +
                                                   std::to_string(k)) + ")";
  if (!order_or) {
    throw Error(ErrorCode::kOrderOutOfRange, name + " exceeds the order cap");
  }
  const std::uint64_t order = *order_or;
  check_order(order, cap, name);
  if (k == 1) return build_zn(p, cap).with_source_spec(name);

  const Poly modulus = gf_modulus(p, k);

  // Multiplication through discrete logs of a primitive element.
  const std::uint64_t group = order - 1;
  std::vector<std::uint64_t> group_primes;
  for (std::uint64_t d = 2, m = group; m > 1; ++d) {
    if (m % d == 0) {
      group_primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  auto power = [&](const Poly& base, std::uint64_t e) {
    Poly result{1}, b = base;
    while (e > 0) {
      if (e & 1) result = poly_mul_mod(result, b, modulus, p);
      b = poly_mul_mod(b, b, modulus, p);
      e >>= 1;
    }
    return result;
  };
  Poly generator;
  for (std::uint64_t v = 2; v < order; ++v) {
    Poly g = digits(v, p, k);
    trim(g);
    bool primitive = true;
    for (std::uint64_t q : group_primes) {
      if (power(g, group / q) == Poly{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator = g;
      break;
    }
  }
  if (generator.empty()) generator = Poly{1};  // order 2 only; unreachable for k >= 2
  std::vector<std::uint64_t> antilog(group), log(order, 0);
  Poly acc{1};
  for (std::uint64_t i = 0; i < group; ++i) {
    Poly padded = acc;
    padded.resize(k, 0);
    antilog[i] = undigits(padded, p);
    log[antilog[i]] = i;
    acc = poly_mul_mod(acc, generator, modulus, p);
  }

  std::vector<FiniteRing::TableEntry> add(order * order), mul(order * order);
  for (std::uint64_t a = 0; a < order; ++a) {
    const Poly da = digits(a, p, k);
    for (std::uint64_t b = 0; b < order; ++b) {
      const Poly db = digits(b, p, k);
      Poly s(k);
      for (unsigned i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
      add[a * order + b] = static_cast<FiniteRing::TableEntry>(undigits(s, p));
      mul[a * order + b] = static_cast<FiniteRing::TableEntry>(
          (a == 0 || b == 0) ? 0 : antilog[(log[a] + log[b]) % group]);
    }
  }
  std::vector<std::string> labels(order);
  for (std::uint64_t a = 0; a < order; ++a) labels[a] = gf_label(a, p, k);
  return FiniteRing(order, std::move(add), std::move(mul), 0, 1,
                    std::move(labels), name);
}

FiniteRing build_product(const FiniteRing& left, const FiniteRing& right,
                         std::size_t cap) {
  const std::size_t nl = left.order(), nr = right.order();
  const std::uint64_t order = static_cast<std::uint64_t>(nl) * nr;
  const std::string name = left.source_spec() + " x " + right.source_spec();
  check_order(order, cap, name);
  std::vector<FiniteRing::TableEntry> add(order * order), mul(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    const Element a1 = static_cast<Element>(a / nr), a2 = static_cast<Element>(a % nr);
    for (std::size_t b = 0; b < order; ++b) {
      const Element b1 = static_cast<Element>(b / nr), b2 = static_cast<Element>(b % nr);
      add[a * order + b] = static_cast<FiniteRing::TableEntry>(
          left.add(a1, b1) * nr + right.add(a2, b2));
      mul[a * order + b] = static_cast<FiniteRing::TableEntry>(
          left.mul(a1, b1) * nr + right.mul(a2, b2));
    }
  }
  std::vector<std::string> labels(order);
  for (std::size_t a = 0; a < order; ++a) {
    labels[a] = "(" + left.label(static_cast<Element>(a / nr)) + "," +
                right.label(static_cast<Element>(a % nr)) + ")";
  }
  return FiniteRing(order, std::move(add), std::move(mul),
                    left.zero() * static_cast<Element>(nr) + right.zero(),
                    left.one() * static_cast<Element>(nr) + right.one(),
                    std::move(labels), name);
}

ElementSet units(const FiniteRing& r) {
  ElementSet out(r.order());
  for (Element a = 0; a < r.order(); ++a) {
    for (Element b = 0; b < r.order(); ++b) {
      if (r.mul(a, b) == r.one()) {
        out.insert(a);
        break;
      }
    }
  }
  return out;
}

ElementSet zero_divisors(const FiniteRing& r) {
  ElementSet out(r.order());
  for (Element a = 0; a < r.order(); ++a) {
    if (a == r.zero()) continue;
    for (Element b = 0; b < r.order(); ++b) {
      if (b != r.zero() && r.mul(a, b) == r.zero()) {
        out.insert(a);
        break;
      }
    }
  }
  return out;
}

ElementSet annihilator(const FiniteRing& r, Element x) {
  if (x >= r.order()) {
    throw Error(ErrorCode::kInvalidArgument,
                "element index " + std::to_string(x) + " out of range");
  }
  ElementSet out(r.order());
  for (Element y = 0; y < r.order(); ++y) {
    if (r.mul(x, y) == r.zero()) out.insert(y);
  }
  return out;
}

bool is_field(const FiniteRing& r) {
  return units(r).size() == r.order() - 1;
}

bool is_local(const FiniteRing& r) {
  const ElementSet u = units(r);
  std::vector<Element> nonunits;
  for (Element a = 0; a < r.order(); ++a) {
    if (!u.contains(a)) nonunits.push_back(a);
  }
  for (Element a : nonunits) {
    for (Element b : nonunits) {
      if (u.contains(r.add(a, b))) return false;
    }
  }
  return true;
}

bool is_reduced(const FiniteRing& r) {
  // x^k = 0 for some k <= order iff x^(2^j) = 0 once 2^j >= order.
  for (Element a = 0; a < r.order(); ++a) {
    if (a == r.zero()) continue;
    Element x = a;
    for (std::size_t span = 1; span < 2 * r.order(); span *= 2) {
      if (x == r.zero()) return false;
      x = r.mul(x, x);
    }
    if (x == r.zero()) return false;
  }
  return true;
}

bool is_boolean(const FiniteRing& r) {
  for (Element a = 0; a < r.order(); ++a) {
    if (r.mul(a, a) != a) return false;
  }
  return true;
}

bool is_vnr(const FiniteRing& r) {
  for (Element a = 0; a < r.order(); ++a) {
    const Element sq = r.mul(a, a);
    bool found = false;
    for (Element b = 0; b < r.order() && !found; ++b) {
      found = r.mul(sq, b) == a;
    }
    if (!found) return false;
  }
  return true;
}

std::optional<std::string> find_axiom_violation_serial(const FiniteRing& r) {
  for (Element a = 0; a < r.order(); ++a) {
    if (auto v = check_row(r, a)) return v;
  }
  return std::nullopt;
}

std::optional<std::string> find_axiom_violation(const FiniteRing& r) {
  const long n = static_cast<long>(r.order());
  long first_bad = n;
#pragma omp parallel for schedule(dynamic, 1) reduction(min : first_bad)
  for (long a = 0; a < n; ++a) {
    if (a < first_bad && check_row(r, static_cast<Element>(a))) first_bad = a;
  }
  if (first_bad == n) return std::nullopt;
  return check_row(r, static_cast<Element>(first_bad));
}

}  // namespace czdg

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

// Finite commutative rings with unity, stored as explicit operation tables.

#ifndef CZDG_RING_H_
#define CZDG_RING_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "czdg/bitset.h"

namespace czdg {

using Element = std::uint32_t;

// Largest ring order accepted by the builders unless overridden.
inline constexpr std::size_t kDefaultCap = 4096;
// Tables store 16-bit element indices, so no cap may exceed this.
inline constexpr std::size_t kMaxCap = 65536;

// Reads CZDG_CAP from the environment; falls back to kDefaultCap. Values
// outside [2, kMaxCap] are rejected with kInvalidArgument.
std::size_t cap_from_env();

class FiniteRing {
 public:
  using TableEntry = std::uint16_t;

  // Checks table shape and index ranges only; the ring axioms are checked
  // separately by find_axiom_violation().
  FiniteRing(std::size_t order, std::vector<TableEntry> add_table,
             std::vector<TableEntry> mul_table, Element zero, Element one,
             std::vector<std::string> labels, std::string source_spec);

  std::size_t order() const { return order_; }
  Element zero() const { return zero_; }
  Element one() const { return one_; }

  Element add(Element a, Element b) const { return add_[a * order_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& source_spec() const { return source_spec_; }

  std::span<const TableEntry> add_table() const { return add_; }
  std::span<const TableEntry> mul_table() const { return mul_; }

  // Element whose label equals `text`, if any.
  std::optional<Element> find(const std::string& text) const;

  FiniteRing with_source_spec(std::string spec) const;

 private:
  std::size_t order_;
  std::vector<TableEntry> add_;
  std::vector<TableEntry> mul_;
  std::vector<TableEntry> neg_;
  Element zero_;
  Element one_;
  std::vector<std::string> labels_;
  std::string source_spec_;
};

// A subset of a ring's elements.
class ElementSet {
 public:
  explicit ElementSet(std::size_t order) : bits_(order) {}
  explicit ElementSet(Bitset bits) : bits_(std::move(bits)) {}

  bool contains(Element e) const { return bits_.test(e); }
  void insert(Element e) { bits_.set(e); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  std::vector<Element> elements() const;
  const Bitset& bits() const { return bits_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  Bitset bits_;
};

// ---- builders --------------------------------------------------------------

// Integers modulo n.
FiniteRing build_zn(std::uint64_t n, std::size_t cap = kDefaultCap);

// Field with p^k elements: Z_p[t] modulo the lexicographically smallest monic
// irreducible of degree k. Element labels are polynomials in `t`.
FiniteRing build_gf(std::uint64_t p, unsigned k, std::size_t cap = kDefaultCap);

// The modulus build_gf uses: coefficients of t^0..t^k (the last is 1).
// Candidates t^k + c_{k-1} t^{k-1} + ... + c_0 are ordered by the tuple
// (c_{k-1}, ..., c_0).
std::vector<std::uint64_t> gf_modulus(std::uint64_t p, unsigned k);

// Componentwise product; element (a,b) has index a * |right| + b.
FiniteRing build_product(const FiniteRing& left, const FiniteRing& right,
                         std::size_t cap = kDefaultCap);

// One term of an integer polynomial: coefficient times prod var_i^exponents[i].
struct Term {
  std::int64_t coefficient = 0;
  std::vector<unsigned> exponents;

  friend bool operator==(const Term&, const Term&) = default;
};
using TermList = std::vector<Term>;

// Z_m[vars] / (relations), or GF(q)[vars] / (relations).
struct RingPresentation {
  enum class Base { kIntegersMod, kGaloisField };

  Base base = Base::kIntegersMod;
  std::uint64_t base_order = 2;  // m for Z_m, q for GF(q)
  std::vector<std::string> variables;
  std::vector<TermList> relations;
};

// Builds the quotient ring by completing the relations into a rewrite system
// over the base, enumerating normal forms, and tabulating + and *.
// Errors: kNonOrientableRelation (a relation vanishes over the base),
// kNonTerminating (completion diverges, quotient infinite, or larger than
// cap), kInconsistentPresentation (zero ring, or the axiom check fails).
FiniteRing build_quotient(const RingPresentation& pres,
                          std::size_t cap = kDefaultCap);

// ---- queries ---------------------------------------------------------------

ElementSet units(const FiniteRing& r);
// Nonzero x with xy = 0 for some nonzero y.
ElementSet zero_divisors(const FiniteRing& r);
// {y : xy = 0}; always contains zero.
ElementSet annihilator(const FiniteRing& r, Element x);

bool is_field(const FiniteRing& r);
// Nonunits closed under addition.
bool is_local(const FiniteRing& r);
bool is_reduced(const FiniteRing& r);
bool is_boolean(const FiniteRing& r);
// For all a there is b with a = a^2 b.
bool is_vnr(const FiniteRing& r);

// Exhaustive check of commutativity, associativity, distributivity,
// identities and additive inverses. Returns a description of the first
// violation found (in a fixed scan order), or nullopt.
std::optional<std::string> find_axiom_violation(const FiniteRing& r);
// Single-threaded reference for find_axiom_violation().
std::optional<std::string> find_axiom_violation_serial(const FiniteRing& r);

}  // namespace czdg

#endif  // CZDG_RING_H_

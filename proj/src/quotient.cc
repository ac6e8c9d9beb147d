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

// Quotients Z_m[x_1..x_v] / I.
//
// The relations are completed into a strong rewrite system over Z_m under the
// graded-lexicographic order (x_1 > x_2 > ...). Each rule reads
//   c * mu + tail = 0,   c a divisor of m, tail below mu,
// and rewrites c * mu to -tail. Completion adds, until everything reduces to
// zero: overlaps of two rules (lcm of coefficients), gcd combinations of two
// rules, and (m / c) * rule, whose leading term vanishes. A monomial mu then
// carries coefficients modulo g(mu), the smallest rule coefficient among
// rules whose leading monomial divides mu (m when there is none); the
// monomials with g(mu) > 1 form the normal-form basis.

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "czdg/error.h"
#include "czdg/numeric.h"
#include "czdg/ring.h"

namespace czdg {
namespace {

using Coeff = std::uint64_t;
using Monomial = std::vector<unsigned>;

// Completion gives up past these sizes; every presentation we care about
// closes with a handful of rules of small degree.
constexpr std::size_t kMaxRules = 4000;
constexpr unsigned kMaxDegree = 256;

unsigned degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0u);
}

// Graded lexicographic order, first variable largest.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = degree(a), db = degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial q(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
  return q;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

Monomial times(const Monomial& a, const Monomial& b) {
  Monomial p(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) p[i] = a[i] + b[i];
  return p;
}

// Sparse polynomial, leading term first.
using Poly = std::map<Monomial, Coeff, GrlexGreater>;

class Arith {
 public:
  explicit Arith(Coeff m) : m_(m) {}

  Coeff modulus() const { return m_; }

  void add_term(Poly& f, const Monomial& mono, Coeff c) const {
    c %= m_;
    if (c == 0) return;
    auto [it, inserted] = f.emplace(mono, c);
    if (!inserted) {
      it->second = (it->second + c) % m_;
      if (it->second == 0) f.erase(it);
    }
  }

  // f += c * shift * g
  void add_scaled(Poly& f, const Poly& g, Coeff c, const Monomial& shift) const {
    c %= m_;
    if (c == 0) return;
    for (const auto& [mono, coeff] : g) add_term(f, times(mono, shift), coeff * c);
  }

  Poly scaled(const Poly& g, Coeff c, const Monomial& shift) const {
    Poly out;
    add_scaled(out, g, c, shift);
    return out;
  }

  Poly multiply(const Poly& a, const Poly& b) const {
    Poly out;
    for (const auto& [mono, coeff] : a) add_scaled(out, b, coeff, mono);
    return out;
  }

  Coeff negate(Coeff c) const { return (m_ - c % m_) % m_; }

  // Multiplies f by a unit so that its leading coefficient becomes
  // gcd(lc, m), a divisor of m.
  Poly normalized(const Poly& f) const {
    const Coeff lc = f.begin()->second;
    const Coeff g = std::gcd(lc, m_);
    if (g == lc) return f;
    const Coeff reduced_m = m_ / g;
    const Coeff inv = inverse(lc / g % reduced_m, reduced_m);
    Coeff w = inv;
    while (std::gcd(w, m_) != 1) w += reduced_m;
    return scaled(f, w % m_, Monomial(f.begin()->first.size(), 0));
  }

 private:
  static Coeff inverse(Coeff a, Coeff mod) {
    if (mod == 1) return 0;
    // Extended Euclid on signed values.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(mod), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
      const std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    return mod_reduce(t, mod);
  }

  Coeff m_;
};

class RewriteSystem {
 public:
  RewriteSystem(Arith arith, std::size_t nvars) : arith_(arith), nvars_(nvars) {}

  const std::vector<Poly>& rules() const { return rules_; }

  // Index of the rule with the smallest leading coefficient whose leading
  // monomial divides `mono`; ties go to the older rule.
  std::optional<std::size_t> best_rule(const Monomial& mono) const {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      const auto& lead = *rules_[i].begin();
      if (!divides(lead.first, mono)) continue;
      if (!best || lead.second < rules_[*best].begin()->second) best = i;
    }
    return best;
  }

  // Coefficient modulus of `mono` in normal forms.
  Coeff slot_modulus(const Monomial& mono) const {
    auto r = best_rule(mono);
    return r ? rules_[*r].begin()->second : arith_.modulus();
  }

  // Full reduction: every coefficient left is below its slot modulus.
  Poly reduce(Poly f) const {
    Poly out;
    while (!f.empty()) {
      auto it = f.begin();
      const Monomial mono = it->first;
      const Coeff a = it->second;
      if (auto r = best_rule(mono)) {
        const Poly& rule = rules_[*r];
        const Coeff lc = rule.begin()->second;
        const Coeff q = a / lc;
        if (q != 0) {
          const Monomial shift = quotient(mono, rule.begin()->first);
          arith_.add_scaled(f, rule, arith_.negate(q), shift);
        }
      }
      auto left = f.find(mono);
      if (left != f.end()) {
        out.emplace(mono, left->second);
        f.erase(left);
      }
    }
    return out;
  }

  void complete(const std::vector<Poly>& relations) {
    std::deque<Poly> pending(relations.begin(), relations.end());
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    std::deque<std::size_t> singles;

    auto admit = [&](Poly f) {
      f = reduce(std::move(f));
      if (f.empty()) return;
      f = arith_.normalized(f);
      if (degree(f.begin()->first) > kMaxDegree || rules_.size() >= kMaxRules) {
        throw Error(ErrorCode::kNonTerminating,
                    "rewrite completion exceeded its size limits");
      }
      const std::size_t idx = rules_.size();
      rules_.push_back(std::move(f));
      for (std::size_t j = 0; j < idx; ++j) pairs.emplace_back(j, idx);
      singles.push_back(idx);
    };

    while (!pending.empty() || !pairs.empty() || !singles.empty()) {
      if (!pending.empty()) {
        Poly f = std::move(pending.front());
        pending.pop_front();
        admit(std::move(f));
        continue;
      }
      if (!singles.empty()) {
        const Poly& f = rules_[singles.front()];
        singles.pop_front();
        const Coeff lc = f.begin()->second;
        if (lc != 1) {
          // (m / lc) * f kills the leading term; what is left is in the ideal.
          pending.push_back(arith_.scaled(f, arith_.modulus() / lc,
                                          Monomial(nvars_, 0)));
        }
        continue;
      }
      auto [i, j] = pairs.front();
      pairs.pop_front();
      const Poly& f = rules_[i];
      const Poly& g = rules_[j];
      const auto& [mf, cf] = *f.begin();
      const auto& [mg, cg] = *g.begin();
      const Monomial l = lcm(mf, mg);
      const Monomial sf = quotient(l, mf), sg = quotient(l, mg);
      const Coeff c = std::lcm(cf, cg);
      Poly s = arith_.scaled(f, c / cf, sf);
      arith_.add_scaled(s, g, arith_.negate(c / cg), sg);
      pending.push_back(std::move(s));
      // gcd(cf, cg) = u cf + v cg.
      const Coeff e = std::gcd(cf, cg);
      if (e != cf && e != cg) {
        auto [u, v] = bezout(cf, cg);
        Poly gp = arith_.scaled(f, mod_reduce(u, arith_.modulus()), sf);
        arith_.add_scaled(gp, g, mod_reduce(v, arith_.modulus()), sg);
        pending.push_back(std::move(gp));
      }
    }
  }

 private:
  static std::pair<std::int64_t, std::int64_t> bezout(Coeff a, Coeff b) {
    std::int64_t old_r = static_cast<std::int64_t>(a), r = static_cast<std::int64_t>(b);
    std::int64_t old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      const std::int64_t q = old_r / r;
      old_r = std::exchange(r, old_r - q * r);
      old_s = std::exchange(s, old_s - q * s);
      old_t = std::exchange(t, old_t - q * t);
    }
    return {old_s, old_t};
  }

  Arith arith_;
  std::size_t nvars_;
  std::vector<Poly> rules_;
};

std::string monomial_text(const Monomial& mono,
                          const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (mono[i] == 0) continue;
    out += names[i];
    if (mono[i] > 1) out += '^' + std::to_string(mono[i]);
  }
  return out;
}

// Terms from the largest monomial down, e.g. "2x^2+x+3".
std::string poly_text(const Poly& f, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& [mono, coeff] : f) {
    if (!out.empty()) out += '+';
    const std::string m = monomial_text(mono, names);
    if (m.empty()) {
      out += std::to_string(coeff);
    } else {
      if (coeff != 1) out += std::to_string(coeff);
      out += m;
    }
  }
  return out.empty() ? "0" : out;
}

std::string presentation_text(const RingPresentation& pres) {
  std::string out = pres.base == RingPresentation::Base::kGaloisField
                        ? "GF(" + std::to_string(pres.base_order) + ")"
                        : "Z" + std::to_string(pres.base_order);
  out += '[';
  for (std::size_t i = 0; i < pres.variables.size(); ++i) {
    if (i) out += ',';
    out += pres.variables[i];
  }
  out += "]/(";
  for (std::size_t r = 0; r < pres.relations.size(); ++r) {
    if (r) out += ',';
    std::string rel;
    for (const Term& t : pres.relations[r]) {
      std::string mono;
      for (std::size_t i = 0; i < t.exponents.size(); ++i) {
        if (t.exponents[i] == 0) continue;
        mono += pres.variables[i];
        if (t.exponents[i] > 1) mono += '^' + std::to_string(t.exponents[i]);
      }
      const std::int64_t c = t.coefficient;
      std::string coeff = std::to_string(c < 0 ? -c : c);
      if (!mono.empty() && (c == 1 || c == -1)) coeff.clear();
      if (c < 0) {
        rel += '-';
      } else if (!rel.empty()) {
        rel += '+';
      }
      rel += coeff + mono;
    }
    out += rel.empty() ? "0" : rel;
  }
  return out + ")";
}

}  // namespace

FiniteRing build_quotient(const RingPresentation& pres, std::size_t cap) {
  const std::string name = presentation_text(pres);
  if (pres.variables.empty()) {
    throw Error(ErrorCode::kInvalidArgument, name + ": no variables");
  }

  // A GF(p^k) base becomes Z_p with one extra generator, the smallest
  // variable, subject to the modulus build_gf uses.
  Coeff m = pres.base_order;
  std::vector<std::string> names = pres.variables;
  std::vector<Poly> relations;
  std::optional<std::vector<std::uint64_t>> field_modulus;
  if (pres.base == RingPresentation::Base::kGaloisField) {
    auto pk = as_prime_power(pres.base_order);
    if (!pk) {
      throw Error(ErrorCode::kNonPrimePowerGF,
                  "GF(" + std::to_string(pres.base_order) + ") is not a field");
    }
    m = pk->prime;
    if (pk->exponent > 1) {
      field_modulus = gf_modulus(pk->prime, pk->exponent);
      for (char c : std::string("tuvwsrqponmlkjihgfedcbazyx")) {
        const std::string gen(1, c);
        if (std::find(names.begin(), names.end(), gen) == names.end()) {
          names.push_back(gen);
          break;
        }
      }
    }
  }
  if (m < 2) {
    throw Error(ErrorCode::kOrderOutOfRange, name + ": base modulus below 2");
  }
  const std::size_t nvars = names.size();
  Arith arith(m);

  for (std::size_t r = 0; r < pres.relations.size(); ++r) {
    Poly f;
    for (const Term& t : pres.relations[r]) {
      if (t.exponents.size() != pres.variables.size()) {
        throw Error(ErrorCode::kInvalidArgument, name + ": malformed term");
      }
      Monomial mono = t.exponents;
      mono.resize(nvars, 0);
      arith.add_term(f, mono, mod_reduce(t.coefficient, m));
    }
    if (f.empty()) {
      throw Error(ErrorCode::kNonOrientableRelation,
                  name + ": relation " + std::to_string(r + 1) +
                      " vanishes over the base and has no leading term");
    }
    relations.push_back(std::move(f));
  }
  if (field_modulus) {
    Poly f;
    for (std::size_t i = 0; i < field_modulus->size(); ++i) {
      Monomial mono(nvars, 0);
      mono.back() = static_cast<unsigned>(i);
      arith.add_term(f, mono, (*field_modulus)[i]);
    }
    relations.insert(relations.begin(), std::move(f));
  }

  RewriteSystem system(arith, nvars);
  system.complete(relations);

  const Monomial unit_mono(nvars, 0);
  if (system.slot_modulus(unit_mono) == 1) {
    throw Error(ErrorCode::kInconsistentPresentation,
                name + ": relations collapse the ring to zero");
  }
  // Finite iff every variable has a monic pure-power rule.
  for (std::size_t v = 0; v < nvars; ++v) {
    bool bounded = false;
    for (const Poly& rule : system.rules()) {
      const auto& [lead, lc] = *rule.begin();
      if (lc != 1 || lead[v] == 0) continue;
      bool pure = true;
      for (std::size_t w = 0; w < nvars; ++w) pure &= (w == v || lead[w] == 0);
      bounded |= pure;
    }
    if (!bounded) {
      throw Error(ErrorCode::kNonTerminating,
                  name + ": quotient is infinite (no power of " + names[v] +
                      " reduces)");
    }
  }

  // Normal-form basis in increasing order; coefficient of basis[i] lives in
  // [0, moduli[i]).
  std::set<Monomial, GrlexGreater> seen{unit_mono};
  std::vector<Monomial> frontier{unit_mono};
  std::uint64_t order = 1;
  while (!frontier.empty()) {
    Monomial mono = frontier.back();
    frontier.pop_back();
    const Coeff g = system.slot_modulus(mono);
    if (order > cap / g) {
      throw Error(ErrorCode::kNonTerminating,
                  name + ": quotient has more than " + std::to_string(cap) +
                      " elements");
    }
    order *= g;
    for (std::size_t v = 0; v < nvars; ++v) {
      Monomial next = mono;
      ++next[v];
      if (seen.count(next) || system.slot_modulus(next) == 1) continue;
      seen.insert(next);
      frontier.push_back(std::move(next));
    }
  }
  std::vector<Monomial> basis(seen.rbegin(), seen.rend());
  std::vector<Coeff> moduli, radix;
  Coeff place = 1;
  for (const Monomial& mono : basis) {
    moduli.push_back(system.slot_modulus(mono));
    radix.push_back(place);
    place *= moduli.back();
  }
  if (order < 2) {
    throw Error(ErrorCode::kInconsistentPresentation, name + ": zero ring");
  }

  auto decode = [&](std::uint64_t index) {
    Poly f;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      arith.add_term(f, basis[i], index % moduli[i]);
      index /= moduli[i];
    }
    return f;
  };
  auto encode = [&](const Poly& reduced) {
    std::uint64_t index = 0;
    for (const auto& [mono, coeff] : reduced) {
      auto pos = std::lower_bound(basis.begin(), basis.end(), mono,
                                  [](const Monomial& a, const Monomial& b) {
                                    return GrlexGreater{}(b, a);
                                  });
      if (pos == basis.end() || *pos != mono || coeff >= moduli[pos - basis.begin()]) {
        throw Error(ErrorCode::kInconsistentPresentation,
                    name + ": rewrite system is not confluent");
      }
      index += coeff * radix[pos - basis.begin()];
    }
    return index;
  };

  // Tables by linearity: b = b' + basis[k] where k is b's highest nonzero
  // digit, so row a only needs a + basis[k] and a * basis[k].
  const std::size_t n = order, nb = basis.size();
  std::vector<std::size_t> add_basis(n * nb), mul_basis(n * nb);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Poly pa = decode(a);
    labels[a] = poly_text(pa, names);
    for (std::size_t k = 0; k < nb; ++k) {
      Poly sum = pa;
      arith.add_term(sum, basis[k], 1);
      add_basis[a * nb + k] = encode(system.reduce(std::move(sum)));
      mul_basis[a * nb + k] =
          encode(system.reduce(arith.scaled(pa, 1, basis[k])));
    }
  }
  std::vector<std::size_t> high_digit(n, 0);
  for (std::size_t b = 1; b < n; ++b) {
    std::size_t k = nb;
    while (k-- > 0) {
      if ((b / radix[k]) % moduli[k] != 0) break;
    }
    high_digit[b] = k;
  }
  std::vector<FiniteRing::TableEntry> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    add[a * n] = static_cast<FiniteRing::TableEntry>(a);
    for (std::size_t b = 1; b < n; ++b) {
      const std::size_t k = high_digit[b];
      add[a * n + b] = static_cast<FiniteRing::TableEntry>(
          add_basis[add[a * n + b - radix[k]] * nb + k]);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    mul[a * n] = 0;
    for (std::size_t b = 1; b < n; ++b) {
      const std::size_t k = high_digit[b];
      mul[a * n + b] =
          add[mul[a * n + b - radix[k]] * n + mul_basis[a * nb + k]];
    }
  }

  FiniteRing ring(n, std::move(add), std::move(mul), 0, 1, std::move(labels),
                  name);
  if (auto violation = find_axiom_violation(ring)) {
    throw Error(ErrorCode::kInconsistentPresentation,
                name + ": " + *violation);
  }
  return ring;
}

}  // namespace czdg

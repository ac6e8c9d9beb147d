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

// Ring expressions such as "Z4[x]/(2x,x^2-2)", "GF(9)" or "Z2 x Z3".
//
//   spec      := product
//   product   := atom ( "x" atom )*        -- "x" needs whitespace on both sides
//   atom      := "Z" INT | "GF(" INT ")" | quotient | "(" spec ")"
//   quotient  := base "[" var ("," var)* "]" "/" "(" item ("," item)* ")"
//   item      := poly | "(" var ("," var)* ")" "^" INT
//   poly      := ["+"|"-"] term (("+"|"-") term)*
//   term      := INT ["*"] factors | INT | factors
//   factors   := var ["^" INT] (["*"] var ["^" INT])*
//
// Whitespace between tokens is ignored apart from the product separator.

#ifndef CZDG_SPEC_PARSER_H_
#define CZDG_SPEC_PARSER_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "czdg/ring.h"

namespace czdg {

struct RingSpecAst {
  enum class Kind { kZn, kGaloisField, kProduct, kQuotient };

  Kind kind = Kind::kZn;
  // kZn: n. kGaloisField: q. kQuotient: order of the base.
  std::uint64_t order = 0;
  // kQuotient only: whether the base is GF(q) rather than Z_m.
  bool galois_base = false;
  std::vector<std::string> variables;
  // Terms as written; exponents are indexed like `variables`.
  std::vector<TermList> relations;
  // kProduct only.
  std::shared_ptr<const RingSpecAst> left;
  std::shared_ptr<const RingSpecAst> right;

  friend bool operator==(const RingSpecAst& a, const RingSpecAst& b);
};

// Errors: ParseError with kSyntaxError, kUnknownVariable or kNonPrimePowerGF.
RingSpecAst parse_ring_spec(std::string_view text);

// Canonical text; parse_ring_spec(render_ring_spec(a)) == a.
std::string render_ring_spec(const RingSpecAst& ast);

// Builds the tables; the ring's source spec is the canonical rendering.
// Propagates ring builder errors.
FiniteRing elaborate(const RingSpecAst& ast, std::size_t cap = kDefaultCap);

FiniteRing build_ring(std::string_view text, std::size_t cap = kDefaultCap);

}  // namespace czdg

#endif  // CZDG_SPEC_PARSER_H_

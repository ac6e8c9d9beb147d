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

#include "czdg/spec_parser.h"

#include <algorithm>
#include <cctype>
#include <limits>

#include "czdg/error.h"
#include "czdg/numeric.h"

namespace czdg {

bool operator==(const RingSpecAst& a, const RingSpecAst& b) {
  if (a.kind != b.kind || a.order != b.order || a.galois_base != b.galois_base ||
      a.variables != b.variables || a.relations != b.relations) {
    return false;
  }
  auto same = [](const std::shared_ptr<const RingSpecAst>& x,
                 const std::shared_ptr<const RingSpecAst>& y) {
    if (!x || !y) return !x && !y;
    return *x == *y;
  };
  return same(a.left, b.left) && same(a.right, b.right);
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
bool is_var(char c) { return c >= 'a' && c <= 'z'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RingSpecAst parse() {
    skip_space();
    if (at_end()) fail("empty ring spec");
    RingSpecAst ast = product();
    skip_space();
    if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
    return ast;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg,
                            ErrorCode code = ErrorCode::kSyntaxError) {
    throw ParseError(code, at, msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && is_space(text_[pos_])) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) {
      fail(at_end() ? "expected '" + std::string(1, c) + "' at end of input"
                    : "expected '" + std::string(1, c) + "'");
    }
  }
  bool accept_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  std::uint64_t integer() {
    skip_space();
    if (!is_digit(peek())) fail("expected an integer");
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (is_digit(peek())) {
      const unsigned d = static_cast<unsigned>(peek() - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() / 2 - d) / 10) {
        fail_at(start, "integer too large");
      }
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  RingSpecAst product() {
    RingSpecAst left = atom();
    for (;;) {
      // The separator must be a standalone "x": whitespace, x, whitespace.
      const std::size_t save = pos_;
      const bool space_before = !at_end() && is_space(peek());
      skip_space();
      if (peek() != 'x') {
        pos_ = save;
        return left;
      }
      const std::size_t x_at = pos_;
      ++pos_;
      if (!space_before || at_end() || !is_space(peek())) {
        fail_at(x_at, "product separator 'x' needs whitespace on both sides");
      }
      RingSpecAst node;
      node.kind = RingSpecAst::Kind::kProduct;
      node.left = std::make_shared<const RingSpecAst>(std::move(left));
      node.right = std::make_shared<const RingSpecAst>(atom());
      left = std::move(node);
    }
  }

  RingSpecAst atom() {
    skip_space();
    const std::size_t start = pos_;
    RingSpecAst ast;
    if (accept('(')) {
      ast = product();
      expect(')');
      return ast;
    }
    if (accept_word("GF")) {
      expect('(');
      const std::size_t q_at = (skip_space(), pos_);
      ast.kind = RingSpecAst::Kind::kGaloisField;
      ast.order = integer();
      if (!as_prime_power(ast.order)) {
        fail_at(q_at, "GF(" + std::to_string(ast.order) + "): " +
                          std::to_string(ast.order) + " is not a prime power",
                ErrorCode::kNonPrimePowerGF);
      }
      expect(')');
    } else if (accept('Z')) {
      ast.kind = RingSpecAst::Kind::kZn;
      ast.order = integer();
    } else {
      fail_at(start, at_end() ? "expected a ring at end of input"
                              : "expected 'Z', 'GF(' or '('");
    }
    const std::size_t save = pos_;
    skip_space();
    if (peek() == '[') {
      quotient(ast);
    } else {
      pos_ = save;
    }
    return ast;
  }

  void quotient(RingSpecAst& ast) {
    ast.galois_base = ast.kind == RingSpecAst::Kind::kGaloisField;
    ast.kind = RingSpecAst::Kind::kQuotient;
    expect('[');
    do {
      skip_space();
      const std::size_t at = pos_;
      if (!is_var(peek())) fail("expected a variable (a-z)");
      const std::string v(1, peek());
      ++pos_;
      if (std::find(ast.variables.begin(), ast.variables.end(), v) !=
          ast.variables.end()) {
        fail_at(at, "variable '" + v + "' declared twice");
      }
      ast.variables.push_back(v);
    } while (accept(','));
    expect(']');
    expect('/');
    expect('(');
    do {
      item(ast);
    } while (accept(','));
    expect(')');
  }

  int var_index(const RingSpecAst& ast, std::size_t at) {
    const std::string v(1, text_[at]);
    auto it = std::find(ast.variables.begin(), ast.variables.end(), v);
    if (it == ast.variables.end()) {
      fail_at(at, "unknown variable '" + v + "'", ErrorCode::kUnknownVariable);
    }
    return static_cast<int>(it - ast.variables.begin());
  }

  // Either a polynomial or "(vars)^k", which expands to every monomial of
  // degree k in those variables.
  void item(RingSpecAst& ast) {
    skip_space();
    if (peek() != '(') {
      ast.relations.push_back(poly(ast));
      return;
    }
    ++pos_;
    std::vector<int> vars;
    do {
      skip_space();
      if (!is_var(peek())) fail("expected a variable (a-z)");
      const int v = var_index(ast, pos_);
      if (std::find(vars.begin(), vars.end(), v) != vars.end()) {
        fail("variable repeated in ideal power");
      }
      vars.push_back(v);
      ++pos_;
    } while (accept(','));
    expect(')');
    expect('^');
    const std::size_t k_at = (skip_space(), pos_);
    const std::uint64_t k = integer();
    if (k == 0 || k > 64) fail_at(k_at, "ideal power must be in [1, 64]");
    // Exponent vectors over `vars`, first variable's exponent descending.
    std::vector<unsigned> e(vars.size(), 0);
    auto emit = [&](auto&& self, std::size_t i, unsigned left) -> void {
      if (i + 1 == vars.size()) {
        e[i] = left;
        Term t{1, std::vector<unsigned>(ast.variables.size(), 0)};
        for (std::size_t j = 0; j < vars.size(); ++j) t.exponents[vars[j]] = e[j];
        ast.relations.push_back({t});
        return;
      }
      for (unsigned a = left + 1; a-- > 0;) {
        e[i] = a;
        self(self, i + 1, left - a);
      }
    };
    emit(emit, 0, static_cast<unsigned>(k));
  }

  TermList poly(const RingSpecAst& ast) {
    TermList terms;
    skip_space();
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    for (;;) {
      terms.push_back(term(ast, negative));
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        return terms;
      }
    }
  }

  Term term(const RingSpecAst& ast, bool negative) {
    skip_space();
    Term t{1, std::vector<unsigned>(ast.variables.size(), 0)};
    bool any = false;
    if (is_digit(peek())) {
      t.coefficient = static_cast<std::int64_t>(integer());
      any = true;
      accept('*');
      skip_space();
    }
    bool first_factor = true;
    for (;;) {
      skip_space();
      if (!first_factor && peek() == '*') {
        ++pos_;
        skip_space();
        if (!is_var(peek())) fail("expected a variable after '*'");
      }
      if (!is_var(peek())) break;
      const int v = var_index(ast, pos_);
      ++pos_;
      unsigned exp = 1;
      if (accept('^')) {
        const std::size_t at = (skip_space(), pos_);
        const std::uint64_t e = integer();
        if (e > 4096) fail_at(at, "exponent too large");
        exp = static_cast<unsigned>(e);
      }
      t.exponents[v] += exp;
      any = true;
      first_factor = false;
    }
    if (!any) fail(at_end() ? "expected a term at end of input" : "expected a term");
    if (negative) t.coefficient = -t.coefficient;
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string render_term_list(const TermList& terms,
                             const std::vector<std::string>& vars) {
  std::string out;
  for (const Term& t : terms) {
    std::string mono;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      mono += vars[i];
      if (t.exponents[i] > 1) mono += '^' + std::to_string(t.exponents[i]);
    }
    const std::int64_t c = t.coefficient;
    std::string coeff = std::to_string(c < 0 ? -c : c);
    if (!mono.empty() && (c == 1 || c == -1)) coeff.clear();
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    out += coeff + mono;
  }
  return out;
}

}  // namespace

RingSpecAst parse_ring_spec(std::string_view text) {
  return Parser(text).parse();
}

std::string render_ring_spec(const RingSpecAst& ast) {
  using Kind = RingSpecAst::Kind;
  switch (ast.kind) {
    case Kind::kZn:
      return "Z" + std::to_string(ast.order);
    case Kind::kGaloisField:
      return "GF(" + std::to_string(ast.order) + ")";
    case Kind::kProduct: {
      std::string right = render_ring_spec(*ast.right);
      if (ast.right->kind == Kind::kProduct) right = "(" + right + ")";
      return render_ring_spec(*ast.left) + " x " + right;
    }
    case Kind::kQuotient: {
      std::string out = ast.galois_base ? "GF(" + std::to_string(ast.order) + ")"
                                        : "Z" + std::to_string(ast.order);
      out += '[';
      for (std::size_t i = 0; i < ast.variables.size(); ++i) {
        if (i) out += ',';
        out += ast.variables[i];
      }
      out += "]/(";
      for (std::size_t r = 0; r < ast.relations.size(); ++r) {
        if (r) out += ',';
        out += render_term_list(ast.relations[r], ast.variables);
      }
      return out + ")";
    }
  }
  return "";
}

namespace {

FiniteRing elaborate_node(const RingSpecAst& ast, std::size_t cap) {
  using Kind = RingSpecAst::Kind;
  switch (ast.kind) {
    case Kind::kZn:
      return build_zn(ast.order, cap);
    case Kind::kGaloisField: {
      const auto pk = as_prime_power(ast.order);
      if (!pk) {
        throw Error(ErrorCode::kNonPrimePowerGF,
                    "GF(" + std::to_string(ast.order) + ") is not a field");
      }
      return build_gf(pk->prime, pk->exponent, cap);
    }
    case Kind::kProduct:
      return build_product(elaborate_node(*ast.left, cap),
                           elaborate_node(*ast.right, cap), cap);
    case Kind::kQuotient: {
      RingPresentation pres;
      pres.base = ast.galois_base ? RingPresentation::Base::kGaloisField
                                  : RingPresentation::Base::kIntegersMod;
      pres.base_order = ast.order;
      pres.variables = ast.variables;
      pres.relations = ast.relations;
      return build_quotient(pres, cap);
    }
  }
  throw Error(ErrorCode::kInternal, "bad ring spec node");
}

}  // namespace

FiniteRing elaborate(const RingSpecAst& ast, std::size_t cap) {
  return elaborate_node(ast, cap).with_source_spec(render_ring_spec(ast));
}

FiniteRing build_ring(std::string_view text, std::size_t cap) {
  return elaborate(parse_ring_spec(text), cap);
}

}  // namespace czdg

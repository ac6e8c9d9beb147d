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

#include "czdg/zdg.h"

#include <unordered_map>

#include "czdg/error.h"

namespace czdg {

namespace {

[[noreturn]] void throw_domain(const FiniteRing& r) {
  throw Error(ErrorCode::kEmptyGraphUndefined,
              r.source_spec() + " has no zero divisors; the graph is undefined");
}

}  // namespace

Graph build_zdg(const FiniteRing& r) {
  const std::vector<Element> zd = zero_divisors(r).elements();
  if (zd.empty()) throw_domain(r);
  std::vector<std::string> labels;
  labels.reserve(zd.size());
  for (Element e : zd) labels.push_back(r.label(e));
  Graph g(zd.size(), std::move(labels));
  for (Vertex i = 0; i < zd.size(); ++i) {
    for (Vertex j = i + 1; j < zd.size(); ++j) {
      if (r.mul(zd[i], zd[j]) == r.zero()) g.add_edge(i, j);
    }
  }
  return g;
}

std::vector<std::size_t> AnnClassPartition::zero_divisor_classes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].kind == AnnClass::Kind::kZeroDivisor) out.push_back(i);
  }
  return out;
}

AnnClassPartition ann_classes(const FiniteRing& r) {
  const std::size_t n = r.order();
  AnnClassPartition p;
  p.class_of.assign(n, 0);
  std::unordered_map<Bitset, std::size_t, BitsetHash> by_ann;
  // Scanning in index order makes the first member the representative.
  for (Element x = 0; x < n; ++x) {
    ElementSet ann = annihilator(r, x);
    auto [it, inserted] = by_ann.try_emplace(ann.bits(), p.classes.size());
    if (inserted) {
      AnnClass::Kind kind = AnnClass::Kind::kZeroDivisor;
      if (x == r.zero()) {
        kind = AnnClass::Kind::kZero;
      } else if (ann.size() == 1) {
        kind = AnnClass::Kind::kUnit;
      }
      p.classes.push_back(AnnClass{kind, x, ElementSet(n), std::move(ann)});
    }
    p.classes[it->second].members.insert(x);
    p.class_of[x] = it->second;
  }
  return p;
}

std::string class_label(const FiniteRing& r, Element rep) {
  return "[" + r.label(rep) + "]";
}

std::string CompressedGraph::members_text(const FiniteRing& r, Vertex v) const {
  std::string out = "{";
  bool first = true;
  for (Element e : partition.classes[class_index[v]].members.elements()) {
    if (!first) out += ',';
    out += r.label(e);
    first = false;
  }
  return out + "}";
}

CompressedGraph build_czdg(const FiniteRing& r) {
  CompressedGraph c;
  c.partition = ann_classes(r);
  c.class_index = c.partition.zero_divisor_classes();
  if (c.class_index.empty()) throw_domain(r);
  const std::size_t k = c.class_index.size();
  std::vector<std::string> labels;
  for (std::size_t i : c.class_index) {
    labels.push_back(class_label(r, c.partition.classes[i].representative));
  }
  c.graph = Graph(k, std::move(labels));
  for (Vertex a = 0; a < k; ++a) {
    const AnnClass& ca = c.partition.classes[c.class_index[a]];
    for (Vertex b = a + 1; b < k; ++b) {
      const AnnClass& cb = c.partition.classes[c.class_index[b]];
      const bool edge = r.mul(ca.representative, cb.representative) == r.zero();
      // Every member of [b] must lie in ann(a) exactly when the
      // representatives multiply to zero.
      const bool all = cb.members.bits().is_subset_of(ca.annihilator.bits());
      const bool none = !cb.members.bits().intersects(ca.annihilator.bits());
      if (edge ? !all : !none) {
        throw Error(ErrorCode::kInternal,
                    "class adjacency depends on representatives in " +
                        r.source_spec());
      }
      if (edge) c.graph.add_edge(a, b);
    }
  }
  return c;
}

}  // namespace czdg

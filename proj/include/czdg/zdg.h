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

// Zero-divisor graph and compressed zero-divisor graph of a finite ring.

#ifndef CZDG_ZDG_H_
#define CZDG_ZDG_H_

#include <string>
#include <vector>

#include "czdg/graph.h"
#include "czdg/ring.h"

namespace czdg {

// Vertices are the nonzero zero divisors in increasing element index,
// labelled by element; x -- y iff x != y and xy = 0.
// Throws kEmptyGraphUndefined when the ring has no zero divisors.
Graph build_zdg(const FiniteRing& r);

struct AnnClass {
  enum class Kind { kZero, kUnit, kZeroDivisor };

  Kind kind;
  Element representative;  // smallest member index
  ElementSet members;
  ElementSet annihilator;
};

// Elements grouped by equal annihilators, ordered by representative. Element
// 0 forms the zero class, the units form the unit class.
struct AnnClassPartition {
  std::vector<AnnClass> classes;
  std::vector<std::size_t> class_of;  // element -> index into classes

  // Indices of the zero-divisor classes, in order.
  std::vector<std::size_t> zero_divisor_classes() const;
};

AnnClassPartition ann_classes(const FiniteRing& r);

struct CompressedGraph {
  // One vertex per zero-divisor class, labelled "[rep]".
  Graph graph;
  // vertex -> index into partition.classes.
  std::vector<std::size_t> class_index;
  AnnClassPartition partition;

  // Member labels of a vertex's class, e.g. "{2,6,10,14}".
  std::string members_text(const FiniteRing& r, Vertex v) const;
};

// Adjacency is checked for every member pair, not just representatives;
// a mismatch throws kInternal. Throws kEmptyGraphUndefined for domains.
CompressedGraph build_czdg(const FiniteRing& r);

// Label "[x]" for an element.
std::string class_label(const FiniteRing& r, Element rep);

}  // namespace czdg

#endif  // CZDG_ZDG_H_

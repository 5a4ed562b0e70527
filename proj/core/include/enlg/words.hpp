// Copyright 2026 The enlg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <string>
#include <vector>

namespace enlg {

enum class Party : int { A = 0, B = 1 };

struct Letter {
  Party party = Party::A;
  int question = 0;
  int answer = 0;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

// Normal form under idempotence, cross-party commutation and orthogonality.
struct CanonicalWord {
  Word alice;  // letters with party A, adjacent letters never share a question
  Word bob;    // letters with party B, likewise
  bool is_zero = false;

  size_t length() const { return alice.size() + bob.size(); }
  bool empty() const { return !is_zero && alice.empty() && bob.empty(); }
  Word letters() const;  // alice part followed by bob part
  std::string to_string() const;
  auto operator<=>(const CanonicalWord&) const = default;
};

CanonicalWord canonicalize(const Word& w);

// Reverses each party's part (the word read backwards, then reordered).
CanonicalWord reverse(const CanonicalWord& w);

// Canonical form of s^R t.
CanonicalWord pair_word(const CanonicalWord& s, const CanonicalWord& t);

// Canonical form of the concatenation s t.
CanonicalWord concat(const CanonicalWord& s, const CanonicalWord& t);

struct HierarchyLevel {
  int base = 1;
  bool plus_ab = false;
  std::string to_string() const;
};

// Parses "1", "2", "1+AB".
HierarchyLevel parse_level(const std::string& s);

// Orders words by length, then lexicographically by letters (Alice letters
// sort before Bob letters); this puts epsilon first, then Alice singletons,
// then Bob singletons.
bool word_order(const CanonicalWord& a, const CanonicalWord& b);

// Nonzero canonical words of length <= base over the given alphabets, plus all
// (x,a)(y,b) products when plus_ab is set, deduplicated and ordered.
std::vector<CanonicalWord> word_set(int questions_a, int answers_a, int questions_b,
                                    int answers_b, const HierarchyLevel& lvl);

}  // namespace enlg

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

#include "enlg/words.hpp"

#include <algorithm>
#include <set>

#include "enlg/errors.hpp"

namespace enlg {
namespace {

// Appends a letter to a reduced single-party part. Returns false when the
// result is the zero word.
bool push_reduced(Word& part, const Letter& l) {
  if (!part.empty() && part.back().question == l.question) {
    if (part.back().answer == l.answer) return true;
    return false;
  }
  part.push_back(l);
  return true;
}

CanonicalWord zero_word() {
  CanonicalWord z;
  z.is_zero = true;
  return z;
}

}  // namespace

Word CanonicalWord::letters() const {
  Word w = alice;
  w.insert(w.end(), bob.begin(), bob.end());
  return w;
}

std::string CanonicalWord::to_string() const {
  if (is_zero) return "0";
  if (alice.empty() && bob.empty()) return "e";
  std::string s;
  for (const auto& l : letters()) {
    s += l.party == Party::A ? "A" : "B";
    s += "(" + std::to_string(l.question) + "," + std::to_string(l.answer) + ")";
  }
  return s;
}

CanonicalWord canonicalize(const Word& w) {
  CanonicalWord out;
  for (const auto& l : w) {
    Word& part = l.party == Party::A ? out.alice : out.bob;
    if (!push_reduced(part, l)) return zero_word();
  }
  return out;
}

CanonicalWord reverse(const CanonicalWord& w) {
  if (w.is_zero) return w;
  CanonicalWord out;
  out.alice.assign(w.alice.rbegin(), w.alice.rend());
  out.bob.assign(w.bob.rbegin(), w.bob.rend());
  return out;
}

CanonicalWord concat(const CanonicalWord& s, const CanonicalWord& t) {
  if (s.is_zero || t.is_zero) return zero_word();
  CanonicalWord out = s;
  for (const auto& l : t.alice)
    if (!push_reduced(out.alice, l)) return zero_word();
  for (const auto& l : t.bob)
    if (!push_reduced(out.bob, l)) return zero_word();
  return out;
}

CanonicalWord pair_word(const CanonicalWord& s, const CanonicalWord& t) {
  return concat(reverse(s), t);
}

std::string HierarchyLevel::to_string() const {
  return std::to_string(base) + (plus_ab ? "+AB" : "");
}

HierarchyLevel parse_level(const std::string& s) {
  HierarchyLevel lvl;
  std::string body = s;
  const auto plus = s.find('+');
  if (plus != std::string::npos) {
    std::string tail = s.substr(plus + 1);
    std::transform(tail.begin(), tail.end(), tail.begin(), ::toupper);
    if (tail != "AB") throw InvalidInput("hierarchy level: unknown suffix in '" + s + "'");
    lvl.plus_ab = true;
    body = s.substr(0, plus);
  }
  try {
    size_t used = 0;
    lvl.base = std::stoi(body, &used);
    if (used != body.size()) throw InvalidInput("");
  } catch (const std::exception&) {
    throw InvalidInput("hierarchy level: cannot parse '" + s + "'");
  }
  if (lvl.base < 1) throw InvalidInput("hierarchy level: base must be at least 1");
  return lvl;
}

bool word_order(const CanonicalWord& a, const CanonicalWord& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.letters() < b.letters();
}

std::vector<CanonicalWord> word_set(int qa, int aa, int qb, int ab, const HierarchyLevel& lvl) {
  Word alphabet;
  for (int x = 0; x < qa; ++x)
    for (int a = 0; a < aa; ++a) alphabet.push_back({Party::A, x, a});
  for (int y = 0; y < qb; ++y)
    for (int b = 0; b < ab; ++b) alphabet.push_back({Party::B, y, b});

  std::set<CanonicalWord> found;
  std::vector<Word> frontier{Word{}};
  found.insert(CanonicalWord{});
  for (int len = 1; len <= lvl.base; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (const auto& l : alphabet) {
        Word ext = w;
        ext.push_back(l);
        const CanonicalWord c = canonicalize(ext);
        if (c.is_zero) continue;
        found.insert(c);
        next.push_back(std::move(ext));
      }
    frontier = std::move(next);
  }
  if (lvl.plus_ab)
    for (int x = 0; x < qa; ++x)
      for (int a = 0; a < aa; ++a)
        for (int y = 0; y < qb; ++y)
          for (int b = 0; b < ab; ++b)
            found.insert(canonicalize({{Party::A, x, a}, {Party::B, y, b}}));
  std::vector<CanonicalWord> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), word_order);
  return out;
}

}  // namespace enlg

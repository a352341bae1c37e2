// Test-only oracle, independent of the rewriting engine: the dimension of
// the degree-n component of T(V)/(relations) computed by dense linear
// algebra.  Relations must be group-free and letter-multiset homogeneous
// (true for all diagonal-braiding relations used here), so the computation
// splits into small blocks indexed by the letter multiset.

#pragma once

#include <map>
#include <vector>

#include "qdeform/freealg.hpp"
#include "qdeform/linalg.hpp"

namespace qdeform::oracle {

using Multiset = std::vector<int>;  // count per letter

inline Multiset multiset_of(const YDDatum& d, const Word& w) {
  Multiset m(d.letter_count(), 0);
  for (int i : w) m[i]++;
  return m;
}

inline void enumerate_words(int letters, int len, Word& cur,
                            std::vector<Word>& out) {
  if (len == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = 0; i < letters; ++i) {
    cur.push_back(i);
    enumerate_words(letters, len - 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Word> all_words(int letters, int len) {
  std::vector<Word> out;
  Word cur;
  enumerate_words(letters, len, cur, out);
  return out;
}

// dim of degree-n component of T(V) / (two-sided ideal of the relations)
inline int graded_dim(DatumPtr datum, const std::vector<NcPoly>& relations,
                      int n) {
  const Field& F = datum->field();
  int k = datum->letter_count();

  for (const auto& r : relations) {
    if (!r.is_group_free() || !r.is_letter_homogeneous())
      throw error("oracle needs group-free homogeneous relations");
    Multiset mu = multiset_of(*datum, r.terms().begin()->first.word);
    for (const auto& [m, c] : r.terms())
      if (multiset_of(*datum, m.word) != mu)
        throw error("oracle needs multiset-homogeneous relations");
  }

  // group all degree-n words into multiset blocks
  std::map<Multiset, std::vector<Word>> blocks;
  for (auto& w : all_words(k, n)) blocks[multiset_of(*datum, w)].push_back(w);

  int dim = 0;
  for (const auto& [mu, words] : blocks) {
    std::map<Word, int> col;
    for (size_t j = 0; j < words.size(); ++j) col[words[j]] = int(j);
    std::vector<ScalarRow> rows;
    for (const auto& rel : relations) {
      int d = rel.degree();
      if (d > n) continue;
      for (int a = 0; a + d <= n; ++a) {
        int b = n - d - a;
        for (const auto& u : all_words(k, a)) {
          for (const auto& v : all_words(k, b)) {
            ScalarRow row(words.size(), Scalar::zero(F));
            bool in_block = true;
            for (const auto& [m, c] : rel.terms()) {
              Word w = u;
              w.insert(w.end(), m.word.begin(), m.word.end());
              w.insert(w.end(), v.begin(), v.end());
              auto it = col.find(w);
              if (it == col.end()) {
                in_block = false;
                break;
              }
              row[it->second] += c;
            }
            if (in_block) rows.push_back(std::move(row));
          }
        }
      }
    }
    dim += int(words.size()) - rank_of(F, std::move(rows));
  }
  return dim;
}

}  // namespace qdeform::oracle

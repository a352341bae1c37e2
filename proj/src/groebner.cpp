#include "qdeform/groebner.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace qdeform {

RewriteRule orient(const NcPoly& relation) {
  if (relation.is_zero()) throw error("orient: zero relation");
  auto [lead, c] = relation.leading();
  if (!lead.group.is_identity())
    throw error("orient: leading monomial carries a nontrivial group element: " +
                mono_str(*relation.datum(), lead));
  NcPoly rhs = relation.datum() ? NcPoly::zero(relation.datum()) : NcPoly();
  Scalar inv = c.inverse();
  for (const auto& [m, x] : relation.terms()) {
    if (deglex_cmp(*relation.datum(), m, lead) == 0) continue;
    if (m.word == lead.word)
      throw error("orient: a lower monomial shares the leading word " +
                  mono_str(*relation.datum(), lead));
    rhs.add_term(m, -(x * inv));
  }
  return RewriteRule{lead.word, std::move(rhs)};
}

Presentation::Presentation(DatumPtr datum, std::vector<RewriteRule> rules,
                           int confluence_checked_to)
    : datum_(std::move(datum)),
      rules_(std::move(rules)),
      confluence_checked_to_(confluence_checked_to) {
  std::sort(rules_.begin(), rules_.end(),
            [this](const RewriteRule& a, const RewriteRule& b) {
              return word_cmp(*datum_, a.lhs, b.lhs) < 0;
            });
  for (size_t i = 0; i + 1 < rules_.size(); ++i)
    if (rules_[i].lhs == rules_[i + 1].lhs)
      throw error("presentation has duplicate rule lhs");
  for (const auto& r : rules_) {
    if (r.lhs.empty()) throw error("rule lhs must be a nonempty word");
    Monomial lead{r.lhs, GroupElement::identity(datum_->group())};
    for (const auto& [m, c] : r.rhs.terms()) {
      if (deglex_cmp(*datum_, m, lead) >= 0)
        throw error("rule rhs is not strictly smaller than its lhs");
      if (m.word == r.lhs)
        throw error("rule rhs contains its own lhs word");
    }
  }
}

Presentation Presentation::free_algebra(DatumPtr datum, int degree_bound) {
  return Presentation(std::move(datum), {}, degree_bound);
}

namespace {

// first redex in the word: smallest start position, then smallest rule index
// (rules are kept sorted by lhs, so this is deterministic)
struct Redex {
  int pos;
  int rule;
};

std::optional<Redex> find_redex(const std::vector<RewriteRule>& rules,
                                const Word& w) {
  for (int pos = 0; pos < static_cast<int>(w.size()); ++pos) {
    for (int r = 0; r < static_cast<int>(rules.size()); ++r) {
      const Word& lhs = rules[r].lhs;
      if (pos + lhs.size() > w.size()) continue;
      if (std::equal(lhs.begin(), lhs.end(), w.begin() + pos))
        return Redex{pos, r};
    }
  }
  return std::nullopt;
}

NcPoly reduce_with(const DatumPtr& datum, const std::vector<RewriteRule>& rules,
                   const NcPoly& p) {
  NcPoly out(datum);
  // worklist ordered by deglex; always take the largest term
  TermMap work(p.terms());
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Monomial m = it->first;
    Scalar c = it->second;
    work.erase(it);
    auto redex = find_redex(rules, m.word);
    if (!redex) {
      out.add_term(m, c);
      continue;
    }
    const RewriteRule& rule = rules[redex->rule];
    Word u(m.word.begin(), m.word.begin() + redex->pos);
    Word v(m.word.begin() + redex->pos + rule.lhs.size(), m.word.end());
    Monomial left{std::move(u), GroupElement::identity(datum->group())};
    Monomial right{std::move(v), m.group};
    for (const auto& [rm, rc] : rule.rhs.terms()) {
      auto [m1, c1] = mono_mul(*datum, left, rm);
      auto [m2, c2] = mono_mul(*datum, m1, right);
      Scalar coeff = c * rc * c1 * c2;
      if (coeff.is_zero()) continue;
      auto jt = work.find(m2);
      if (jt == work.end()) {
        work.emplace(std::move(m2), std::move(coeff));
      } else {
        jt->second += coeff;
        if (jt->second.is_zero()) work.erase(jt);
      }
    }
  }
  return out;
}

}  // namespace

NcPoly reduce(const NcPoly& p, const Presentation& pres) {
  if (p.datum() != pres.datum()) throw error("datum mismatch");
  return reduce_with(pres.datum(), pres.rules(), p);
}

bool is_weight_homogeneous(const YDDatum& datum, const RewriteRule& rule) {
  NcPoly probe = rule.rhs;  // only to borrow weight_of
  Character w = probe.weight_of(
      Monomial{rule.lhs, GroupElement::identity(datum.group())});
  for (const auto& [m, c] : rule.rhs.terms())
    if (!(probe.weight_of(m) == w)) return false;
  return true;
}

std::vector<Overlap> find_overlaps(const Presentation& pres,
                                   int degree_bound) {
  std::vector<Overlap> out;
  const auto& rules = pres.rules();
  for (int a = 0; a < static_cast<int>(rules.size()); ++a) {
    for (int b = 0; b < static_cast<int>(rules.size()); ++b) {
      const Word& la = rules[a].lhs;
      const Word& lb = rules[b].lhs;
      int tmax = static_cast<int>(std::min(la.size(), lb.size())) - 1;
      for (int t = 1; t <= tmax; ++t) {
        if (static_cast<int>(la.size() + lb.size()) - t > degree_bound)
          continue;
        if (!std::equal(la.end() - t, la.end(), lb.begin())) continue;
        Word w(la.begin(), la.end());
        w.insert(w.end(), lb.begin() + t, lb.end());
        out.push_back({a, b, std::move(w), static_cast<int>(la.size()) - t});
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](const Overlap& x, const Overlap& y) {
    int c = word_cmp(*pres.datum(), x.word, y.word);
    if (c != 0) return c < 0;
    if (x.rule_a != y.rule_a) return x.rule_a < y.rule_a;
    return x.rule_b < y.rule_b;
  });
  return out;
}

std::pair<NcPoly, NcPoly> resolve_overlap(const Presentation& pres,
                                          const Overlap& o) {
  const auto& ra = pres.rules().at(o.rule_a);
  const auto& rb = pres.rules().at(o.rule_b);
  const DatumPtr& d = pres.datum();
  Word prefix(o.word.begin(), o.word.begin() + o.cut);
  Word suffix(o.word.begin() + ra.lhs.size(), o.word.end());
  NcPoly one_way = ra.rhs * NcPoly::word(d, suffix);
  NcPoly other_way = NcPoly::word(d, prefix) * rb.rhs;
  return {reduce(one_way, pres), reduce(other_way, pres)};
}

namespace {

// keeps the rule set interreduced while absorbing new relations
class RuleSetBuilder {
 public:
  RuleSetBuilder(DatumPtr datum, std::vector<RewriteRule> rules)
      : datum_(std::move(datum)), rules_(std::move(rules)) {
    sort_rules();
  }

  const std::vector<RewriteRule>& rules() const { return rules_; }

  DatumPtr datum() const { return datum_; }

  // returns true when the rule set changed
  bool absorb(const NcPoly& relation) {
    bool changed = false;
    std::deque<NcPoly> queue{relation};
    while (!queue.empty()) {
      NcPoly rel = reduce_with(datum_, rules_, queue.front());
      queue.pop_front();
      if (rel.is_zero()) continue;
      RewriteRule r = orient(rel);
      // retire any rule whose lhs contains the new lhs as a subword
      for (size_t i = rules_.size(); i-- > 0;) {
        if (contains_subword(rules_[i].lhs, r.lhs)) {
          queue.push_back(as_relation(rules_[i]));
          rules_.erase(rules_.begin() + i);
        }
      }
      rules_.push_back(std::move(r));
      sort_rules();
      renormalize_rhs();
      changed = true;
    }
    return changed;
  }

 private:
  static bool contains_subword(const Word& w, const Word& sub) {
    if (sub.size() > w.size()) return false;
    for (size_t p = 0; p + sub.size() <= w.size(); ++p)
      if (std::equal(sub.begin(), sub.end(), w.begin() + p)) return true;
    return false;
  }

  NcPoly as_relation(const RewriteRule& r) const {
    NcPoly rel = NcPoly::word(datum_, r.lhs);
    rel -= r.rhs;
    return rel;
  }

  void sort_rules() {
    std::sort(rules_.begin(), rules_.end(),
              [&](const RewriteRule& a, const RewriteRule& b) {
                return word_cmp(*datum_, a.lhs, b.lhs) < 0;
              });
  }

  void renormalize_rhs() {
    for (auto& r : rules_) r.rhs = reduce_with(datum_, rules_, r.rhs);
  }

  DatumPtr datum_;
  std::vector<RewriteRule> rules_;
};

}  // namespace

Presentation complete(const Presentation& pres, int degree_bound,
                      ExecPolicy policy, CompletionLog* log) {
  for (const auto& r : pres.rules())
    if (static_cast<int>(r.lhs.size()) > degree_bound)
      throw error("completion bound is below the largest rule degree");

  RuleSetBuilder builder(pres.datum(), pres.rules());
  const int max_passes = 1000;
  for (int pass = 0;; ++pass) {
    if (pass >= max_passes) throw error("completion did not reach a fixpoint");
    Presentation snapshot(builder.datum(),
                          builder.rules(), degree_bound);
    auto overlaps = find_overlaps(snapshot, degree_bound);
    bool changed = false;
    // batch by overlap-word degree, ascending (find_overlaps sorts by deglex)
    size_t i = 0;
    while (i < overlaps.size() && !changed) {
      size_t j = i;
      size_t deg = overlaps[i].word.size();
      while (j < overlaps.size() && overlaps[j].word.size() == deg) ++j;
      auto diffs = par_map<NcPoly>(j - i, policy, [&](size_t k) {
        auto [p1, p2] = resolve_overlap(snapshot, overlaps[i + k]);
        return p1 - p2;
      });
      for (auto& dpoly : diffs) {
        if (dpoly.is_zero()) continue;
        size_t before = builder.rules().size();
        std::vector<std::string> old;
        if (log)
          for (const auto& r : builder.rules())
            old.push_back(rule_str(*builder.datum(), r));
        if (builder.absorb(dpoly)) {
          changed = true;
          if (log) {
            for (const auto& r : builder.rules()) {
              std::string s = rule_str(*builder.datum(), r);
              if (std::find(old.begin(), old.end(), s) == old.end())
                log->added.push_back(s);
            }
            log->rules_added +=
                static_cast<int>(builder.rules().size() - before);
          }
        }
      }
      i = j;
    }
    if (!changed) break;
  }
  return Presentation(builder.datum(), builder.rules(), degree_bound);
}

std::vector<Word> normal_words(const Presentation& pres, int degree) {
  if (degree > pres.confluence_checked_to())
    throw error("normal_words: degree " + std::to_string(degree) +
                " exceeds the validated confluence bound " +
                std::to_string(pres.confluence_checked_to()));
  const auto& datum = *pres.datum();
  // letters in rank order, so the enumeration is deglex-ascending
  std::vector<int> by_rank(datum.letter_count());
  for (int i = 0; i < datum.letter_count(); ++i) by_rank[datum.rank(i)] = i;

  std::vector<Word> out;
  Word cur;
  auto ends_with_lhs = [&](const Word& w) {
    for (const auto& r : pres.rules()) {
      if (r.lhs.size() > w.size()) continue;
      if (std::equal(r.lhs.begin(), r.lhs.end(), w.end() - r.lhs.size()))
        return true;
    }
    return false;
  };
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int i : by_rank) {
      cur.push_back(i);
      if (!ends_with_lhs(cur)) self(self, remaining - 1);
      cur.pop_back();
    }
  };
  rec(rec, degree);
  return out;
}

ConfluenceReport check_confluence(const Presentation& pres, int degree_bound,
                                  ExecPolicy policy) {
  ConfluenceReport rep;
  auto overlaps = find_overlaps(pres, degree_bound);
  rep.overlaps_checked = static_cast<int>(overlaps.size());
  auto results = par_map<std::optional<std::string>>(
      overlaps.size(), policy, [&](size_t k) -> std::optional<std::string> {
        auto [p1, p2] = resolve_overlap(pres, overlaps[k]);
        if (p1 == p2) return std::nullopt;
        NcPoly w = NcPoly::word(pres.datum(), overlaps[k].word);
        return "overlap " + w.str() + ": " + p1.str() + " != " + p2.str();
      });
  for (auto& r : results) {
    if (r) {
      rep.pass = false;
      rep.failures.push_back(std::move(*r));
    }
  }
  return rep;
}

std::string rule_str(const YDDatum& datum, const RewriteRule& rule) {
  std::ostringstream os;
  bool first = true;
  for (int i : rule.lhs) {
    if (!first) os << "*";
    os << datum.letter(i).name;
    first = false;
  }
  os << " -> " << rule.rhs.str();
  return os.str();
}

}  // namespace qdeform

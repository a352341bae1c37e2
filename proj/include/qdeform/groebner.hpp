// Degree-bounded noncommutative rewriting: rule orientation, normal forms,
// overlap (critical-pair) resolution, completion, and normal-word
// enumeration.  This is the computational form of Bergman's diamond lemma:
// once all overlap words up to the bound reduce to one normal form both
// ways, the lhs-avoiding words of each degree are a basis of the quotient
// in that range.

#pragma once

#include <optional>
#include <vector>

#include "qdeform/freealg.hpp"
#include "qdeform/parallel.hpp"

namespace qdeform {

struct RewriteRule {
  Word lhs;     // group-free leading word
  NcPoly rhs;   // strictly deglex-smaller; no monomial with word == lhs
};

// Orients relation = 0 into lhs -> rhs.  The deglex-leading monomial must
// have a trivial group part and no other monomial may share its word.
RewriteRule orient(const NcPoly& relation);

class Presentation {
 public:
  Presentation(DatumPtr datum, std::vector<RewriteRule> rules,
               int confluence_checked_to = 0);

  const DatumPtr& datum() const { return datum_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  int confluence_checked_to() const { return confluence_checked_to_; }

  static Presentation free_algebra(DatumPtr datum, int degree_bound = 64);

 private:
  DatumPtr datum_;
  std::vector<RewriteRule> rules_;  // sorted by lhs, pairwise-distinct lhs
  int confluence_checked_to_;
};

// Normal form: repeatedly replaces the leftmost-outermost occurrence of any
// rule lhs until none occurs.  Letter-degree never increases.
NcPoly reduce(const NcPoly& p, const Presentation& pres);

// Conjugation-weight homogeneity of a rule (the Gamma-action invariant that
// admissible data guarantees).
bool is_weight_homogeneous(const YDDatum& datum, const RewriteRule& rule);

struct Overlap {
  int rule_a = 0, rule_b = 0;  // lhs_a = AB, lhs_b = BC with B nonempty
  Word word;                   // ABC
  int cut = 0;                 // |A|
};

std::vector<Overlap> find_overlaps(const Presentation& pres, int degree_bound);

// The two one-step reductions of an overlap word, each fully normalized.
std::pair<NcPoly, NcPoly> resolve_overlap(const Presentation& pres,
                                          const Overlap& o);

struct CompletionLog {
  int rules_added = 0;
  std::vector<std::string> added;  // rendered "LHS -> RHS" in merge order
};

// Knuth-Bendix style completion below the degree bound: overlaps are
// processed by degree ascending (FIFO within a degree, reductions in a
// deterministic batch), every nonzero difference oriented and interreduced
// into the set, repeated to a fixpoint.
Presentation complete(const Presentation& pres, int degree_bound,
                      ExecPolicy policy = ExecPolicy::serial,
                      CompletionLog* log = nullptr);

// All words of the given letter-degree avoiding every lhs, in deglex order.
// Refuses degrees beyond the validated confluence bound.
std::vector<Word> normal_words(const Presentation& pres, int degree);

struct ConfluenceReport {
  bool pass = true;
  int overlaps_checked = 0;
  std::vector<std::string> failures;
};

// Reduces every overlap word within the bound both ways and compares.
ConfluenceReport check_confluence(const Presentation& pres, int degree_bound,
                                  ExecPolicy policy = ExecPolicy::serial);

std::string rule_str(const YDDatum& datum, const RewriteRule& rule);

}  // namespace qdeform

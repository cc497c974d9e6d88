#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdlat/analysis.hpp"
#include "cdlat/group.hpp"

namespace cdlat {

// Corpus-level checks, one per documented claim. The short ids double as the
// CLI vocabulary.
enum class CheckId {
  P1,        // m(H) <= m(C(H)); equality forces C(C(H)) = H
  P2,        // pair inequality with setwise equality conditions
  P3,        // centralizer map is an involution on the maximal-measure set
  P4,        // its minimum is abelian, normal, contains the center
  P5,        // the maximal-measure set is a modular sublattice
  P6,        // nontrivial groups have at least two measure values
  L1_1,      // order p^4 forces an abelian subgroup of order p^3
  L1_2,      // unique order-p subgroup iff cyclic or quaternion fingerprint
  L1_3,      // outer abelian iff |G'| = p and Z cyclic
  L1_4,      // maximal class iff a self-centralizing order-p^2 subgroup
  T2_1,      // two-value groups have prime-order center
  C2_2,      // abelian and two-value iff cyclic of prime order
  C2_3,      // two-value groups are p-groups
  ItemsABC,  // structure of non-abelian two-value p-groups
  C2_4,      // two-value non-abelian never has maximal-measure set {Z, G}
  T2_5,      // extraspecial implies two-value with known maximal-measure set
  P2_6,      // large abelian subgroup rules out the two-value property
  C2_7,      // no non-abelian order-64 group is two-value
  T2_8,      // two-value of class 2 implies extraspecial
  T2_9,      // two-value of maximal class implies order p^3
};

std::optional<CheckId> parse_check_id(const std::string& text);
std::string check_id_name(CheckId id);
std::string check_id_summary(CheckId id);
const std::vector<CheckId>& all_check_ids();

struct Violation {
  std::string group;
  std::string witness;
};

struct VerificationReport {
  std::string theorem;
  std::string corpus;
  int checked = 0;  // groups the check's hypothesis applied to
  std::vector<Violation> violations;
  bool pass = true;
  std::int64_t elapsed_ms = 0;
};

// Full analysis of every group; jobs > 1 distributes groups over that many
// worker threads (results are ordered by input position either way).
std::vector<Analysis> analyze_all(std::vector<Group> groups, int jobs);

VerificationReport run_check(CheckId id, const std::vector<Analysis>& corpus,
                             const std::string& corpus_desc);

struct SearchHit {
  std::string label;
  int p = 0;  // 0 when the order is not a prime power
  int n = 0;
  std::uint64_t m_star = 0;
};

// Every two-value group in the corpus, optionally filtered to a prime p
// and/or exponent n, sorted by (p, n, label).
std::vector<SearchHit> search_class_c(const std::vector<Analysis>& corpus,
                                      std::optional<int> p,
                                      std::optional<int> n);

}  // namespace cdlat

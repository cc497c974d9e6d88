// Acceptance gate: eleven end-to-end criteria, one PASS/FAIL line each.
// Exits nonzero if any criterion fails its assertions or its time budget.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdlat/analysis.hpp"
#include "cdlat/catalog.hpp"
#include "cdlat/chermak_delgado.hpp"
#include "cdlat/classify.hpp"
#include "cdlat/constructors.hpp"
#include "cdlat/group.hpp"
#include "cdlat/lattice.hpp"
#include "cdlat/presentation.hpp"
#include "cdlat/verify.hpp"

using namespace cdlat;
using Clock = std::chrono::steady_clock;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

int g_failures = 0;

template <typename Body>
void criterion(int k, const std::string& what, double budget_s, Body&& body) {
  const auto t0 = Clock::now();
  std::string problem;
  try {
    body();
  } catch (const std::exception& e) {
    problem = e.what();
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  if (problem.empty() && secs > budget_s) {
    std::ostringstream os;
    os << "took " << std::fixed << std::setprecision(1) << secs
       << " s, budget " << budget_s << " s";
    problem = os.str();
  }
  std::cout << (problem.empty() ? "[PASS]" : "[FAIL]") << " criterion " << k
            << ": " << what << " (" << std::fixed << std::setprecision(1)
            << secs << " s)";
  if (!problem.empty()) {
    std::cout << " -- " << problem;
    ++g_failures;
  }
  std::cout << "\n" << std::flush;
}

void run_and_expect_pass(CheckId id, const std::vector<Analysis>& corpus,
                         const std::string& desc) {
  VerificationReport r = run_check(id, corpus, desc);
  expect(r.checked > 0, check_id_name(id) + " applied to no groups");
  if (!r.pass) {
    std::string first = r.violations.empty()
                            ? std::string("?")
                            : r.violations[0].group + ": " +
                                  r.violations[0].witness;
    throw Failure(check_id_name(id) + " found " +
                  std::to_string(r.violations.size()) +
                  " violation(s), first: " + first);
  }
}

// Exhaustive subset-closure oracle, independent of SubgroupLattice: every
// odd bit mask (identity present) closed under the table is a subgroup.
std::vector<std::uint32_t> oracle_subgroups(const Group& g) {
  const int n = g.order();
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {
    bool closed = true;
    for (int i = 0; i < n && closed; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = 0; j < n; ++j) {
        if (!(mask >> j & 1)) continue;
        if (!(mask >> g.mul(i, j) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.push_back(mask);
  }
  return out;
}

const Analysis& find_group(const std::vector<Analysis>& corpus,
                           const std::string& label) {
  for (const Analysis& a : corpus)
    if (a.group->label() == label) return a;
  throw Failure("corpus is missing " + label);
}

}  // namespace

int main() {
  std::vector<Analysis> corpus;  // builtin corpus up to order 128, shared

  criterion(1, "measure properties P1-P6 over the builtin corpus", 60.0, [&] {
    corpus = analyze_all(builtin_corpus(128), 1);
    expect(corpus.size() >= 200, "corpus is implausibly small");
    for (CheckId id : {CheckId::P1, CheckId::P2, CheckId::P3, CheckId::P4,
                       CheckId::P5, CheckId::P6})
      run_and_expect_pass(id, corpus, "builtin corpus up to order 128");
  });

  criterion(2, "extraspecial groups of orders 8, 27, 32, 125", 10.0, [&] {
    for (int p : {2, 3, 5})
      for (char type : {'+', '-'}) {
        const int m = (p == 2) ? 2 : 1;  // orders 8 & 32 for p = 2
        std::vector<Group> targets;
        targets.push_back(extraspecial(p, 1, type));
        if (p == 2) targets.push_back(extraspecial(p, m, type));
        for (Group& g : targets) {
          const std::string label = g.label();
          Analysis a = Analysis::of(std::move(g));
          const Group& ag = *a.group;
          const auto n = static_cast<std::uint64_t>(ag.order());
          expect(in_class_c(a), label + " should be two-value");
          std::vector<std::uint64_t> want = {n,
                                             n * static_cast<std::uint64_t>(p)};
          expect(a.cd.image == want, label + " image is wrong");
          const Bitset z = center(ag).members;
          for (int i = 0; i < a.lattice.size(); ++i) {
            const bool has_z = (a.lattice.at(i).members & z) == z;
            const bool attains =
                std::binary_search(a.cd.cd_members.begin(),
                                   a.cd.cd_members.end(), i);
            expect(attains == has_z,
                   label + ": maximal-measure set is not {H : Z <= H}");
            if (!has_z)
              expect(a.cd.measures[i] == n,
                     label + ": m(H) != |G| for some H missing Z");
          }
        }
      }
  });

  criterion(3, "Q8 members form a width-3 quasi-antichain, max measure 16",
            1.0, [&] {
    Analysis a = Analysis::of(generalized_quaternion(3));
    expect(a.cd.m_star == 16, "m*(Q8) != 16");
    auto width = quasi_antichain_width(a.lattice, a.cd.cd_members);
    expect(width.has_value(), "members of Q8 are not a quasi-antichain");
    expect(*width == 3, "quasi-antichain width is not 3");
  });

  criterion(4, "the order-32 class-3 group is two-value, not extraspecial",
            5.0, [&] {
    Analysis a = Analysis::of(small_group_32_8());
    expect(a.group->order() == 32, "order is not 32");
    expect(nilpotence_class(*a.group) == 3, "nilpotence class is not 3");
    expect(in_class_c(a), "not two-value");
    expect(a.cd.image == std::vector<std::uint64_t>{32, 64},
           "image is not {32, 64}");
    expect(!is_extraspecial(a), "claims to be extraspecial");
  });

  criterion(5, "two-value corpus groups are p-groups with prime center; "
               "abelian ones are exactly the prime cyclics",
            60.0, [&] {
    expect(!corpus.empty(), "corpus unavailable (criterion 1 failed)");
    for (const Analysis& a : corpus) {
      if (a.group->order() == 1) continue;
      if (in_class_c(a)) {
        expect(p_group_info(*a.group).has_value(),
               a.group->label() + " is two-value but not a p-group");
        const int z = center(*a.group).size();
        expect(factorize(z).size() == 1 && factorize(z)[0].e == 1,
               a.group->label() + " is two-value with non-prime center");
      }
      if (a.group->is_abelian()) {
        const int n = a.group->order();
        const bool prime_cyclic =
            a.group->is_cyclic() && factorize(n).size() == 1 &&
            factorize(n)[0].e == 1;
        expect(in_class_c(a) == prime_cyclic,
               a.group->label() + " breaks the abelian classification");
      }
    }
    for (CheckId id : {CheckId::T2_1, CheckId::C2_2, CheckId::C2_3})
      run_and_expect_pass(id, corpus, "builtin corpus up to order 128");
  });

  criterion(6, "all 14 order-16 groups are out; non-abelian ones carry a "
               "large abelian subgroup",
            10.0, [&] {
    expect(!corpus.empty(), "corpus unavailable (criterion 1 failed)");
    std::vector<const Analysis*> sixteen;
    for (const Analysis& a : corpus)
      if (a.group->order() == 16) sixteen.push_back(&a);
    expect(sixteen.size() == 14, "expected 14 groups of order 16, got " +
                                     std::to_string(sixteen.size()));
    for (const Analysis* a : sixteen) {
      expect(!in_class_c(*a), a->group->label() + " wrongly two-value");
      if (!a->group->is_abelian()) {
        auto w = prop26_witness(*a);
        expect(w.has_value(),
               a->group->label() + " lacks the abelian witness");
        expect(a->lattice.at(*w).size() >= 8,
               a->group->label() + " witness smaller than 8");
        expect(is_abelian_subgroup(a->lattice.at(*w)),
               a->group->label() + " witness is not abelian");
      }
    }
  });

  criterion(7, "no non-abelian order-64 group is two-value", 1800.0, [&] {
    if (const char* path = std::getenv("ORDER64_CATALOG")) {
      // Full catalog supplied: run the check across every entry.
      std::vector<Analysis> ext = analyze_all(load_catalog(path), 1);
      expect(ext.size() >= 267, "external catalog has fewer than 267 groups");
      run_and_expect_pass(CheckId::C2_7, ext, path);
      return;
    }
    // Constructible subset: everything of order 64 the corpus can build.
    expect(!corpus.empty(), "corpus unavailable (criterion 1 failed)");
    for (const std::string& label :
         {std::string("D64"), std::string("Q64"), std::string("SD64"),
          std::string("M(5,1;p=2)"), std::string("ES(32,+)*C4"),
          std::string("ES(8,+)*C16"), std::string("ES(8,+)*M(3,1;p=2)"),
          std::string("D8xD8"), std::string("Q8xQ8"),
          std::string("SG(32,8)xC2")})
      find_group(corpus, label);
    int nonabelian64 = 0;
    for (const Analysis& a : corpus)
      if (a.group->order() == 64 && !a.group->is_abelian()) {
        ++nonabelian64;
        expect(!in_class_c(a), a.group->label() + " wrongly two-value");
      }
    expect(nonabelian64 >= 20, "too few non-abelian order-64 groups: " +
                                   std::to_string(nonabelian64));
    run_and_expect_pass(CheckId::C2_7, corpus,
                        "builtin corpus up to order 128");
  });

  criterion(8, "unique-involution and maximal-class equivalences on corpus "
               "p-groups",
            60.0, [&] {
    expect(!corpus.empty(), "corpus unavailable (criterion 1 failed)");
    run_and_expect_pass(CheckId::L1_2, corpus,
                        "builtin corpus up to order 128");
    run_and_expect_pass(CheckId::L1_4, corpus,
                        "builtin corpus up to order 128");
  });

  criterion(9, "class-2 and maximal-class implications for two-value groups",
            60.0, [&] {
    expect(!corpus.empty(), "corpus unavailable (criterion 1 failed)");
    run_and_expect_pass(CheckId::T2_8, corpus,
                        "builtin corpus up to order 128");
    run_and_expect_pass(CheckId::T2_9, corpus,
                        "builtin corpus up to order 128");
  });

  criterion(10, "subgroup enumeration matches the subset-closure oracle "
                "through order 16",
            30.0, [&] {
    int checked = 0;
    for (const Group& g : builtin_corpus(16)) {
      std::vector<std::uint32_t> expect_masks = oracle_subgroups(g);
      SubgroupLattice lat = SubgroupLattice::enumerate(g);
      expect(lat.size() == static_cast<int>(expect_masks.size()),
             g.label() + ": subgroup count mismatch");
      std::vector<std::uint32_t> got;
      for (const Subgroup& h : lat.all()) {
        std::uint32_t mask = 0;
        for (int i : h.members.elements()) mask |= 1u << i;
        got.push_back(mask);
      }
      std::sort(got.begin(), got.end());
      std::sort(expect_masks.begin(), expect_masks.end());
      expect(got == expect_masks, g.label() + ": subgroup sets differ");
      ++checked;
    }
    expect(checked >= 30, "too few groups reached the oracle");
  });

  criterion(11, "bundled presentations satisfy their relators; <a | a^n> has "
                "order n up to 64",
            10.0, [&] {
    std::ifstream in(std::string(CDLAT_DATA_DIR) + "/order16.pres");
    expect(static_cast<bool>(in), "cannot open the bundled presentation file");
    std::stringstream buf;
    buf << in.rdbuf();
    std::vector<Presentation> ps = parse_presentation_file(buf.str());
    expect(ps.size() == 14, "expected 14 bundled presentations");
    for (const Presentation& p : ps) {
      PresentedGroup pg = enumerate(p);
      expect(pg.group.order() == 16, p.name + " is not order 16");
      for (const auto& rel : p.relators) {
        int e = 0;
        for (auto l : rel) {
          int x = pg.generator_elements[static_cast<std::size_t>(l.gen)];
          e = pg.group.mul(e, l.sign > 0 ? x : pg.group.inverse(x));
        }
        expect(e == 0, p.name + ": a relator does not evaluate to 1");
      }
      Bitset gen(pg.group.order());
      for (int x : pg.generator_elements) gen.set(x);
      expect(closure(pg.group, gen).count() == 16,
             p.name + ": generators do not generate");
    }
    for (int n = 1; n <= 64; ++n) {
      Presentation p =
          parse_presentation("gens a; rels a^" + std::to_string(n) + ";");
      expect(enumerate(p).group.order() == n,
             "<a | a^" + std::to_string(n) + "> has the wrong order");
    }
  });

  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 11 criteria passed\n";
  return 0;
}

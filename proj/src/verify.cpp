#include "cdlat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "cdlat/classify.hpp"
#include "cdlat/errors.hpp"

namespace cdlat {

namespace {

struct IdRow {
  CheckId id;
  const char* name;
  const char* summary;
};

const IdRow kIds[] = {
    {CheckId::P1, "P1",
     "m(H) <= m(C(H)) for every subgroup; equality forces C(C(H)) = H"},
    {CheckId::P2, "P2",
     "m(H)m(K) <= m(<H,K>)m(H&K), with equality iff <H,K> = HK and "
     "C(H&K) = C(H)C(K) setwise"},
    {CheckId::P3, "P3",
     "the centralizer map is an order-reversing involution on the "
     "maximal-measure subgroups"},
    {CheckId::P4, "P4",
     "the minimum maximal-measure subgroup is abelian, normal, and contains "
     "the center"},
    {CheckId::P5, "P5",
     "the maximal-measure subgroups form a modular sublattice"},
    {CheckId::P6,
     "P6", "every nontrivial group has at least two measure values"},
    {CheckId::L1_1, "L1.1",
     "every group of order p^4 has an abelian subgroup of order p^3"},
    {CheckId::L1_2, "L1.2",
     "a p-group has a unique subgroup of order p iff it is cyclic or "
     "matches the generalized-quaternion fingerprint"},
    {CheckId::L1_3, "L1.3",
     "a p-group is outer abelian iff its derived subgroup has order p and "
     "its center is cyclic"},
    {CheckId::L1_4, "L1.4",
     "a p-group of order >= p^3 has maximal class iff some subgroup of "
     "order p^2 is self-centralizing"},
    {CheckId::T2_1, "T2.1",
     "a two-value group has a center of prime order"},
    {CheckId::C2_2, "C2.2",
     "an abelian group is two-value iff it is cyclic of prime order"},
    {CheckId::C2_3, "C2.3", "every two-value group is a p-group"},
    {CheckId::ItemsABC, "items-abc",
     "non-abelian two-value p-groups of order p^n: measure image "
     "{p^n, p^(n+1)}; the center is the unique minimal normal subgroup and "
     "sits inside the derived and Frattini subgroups; HZ attains the "
     "maximal measure whenever Z is not inside H"},
    {CheckId::C2_4, "C2.4",
     "no non-abelian two-value group has maximal-measure set {Z, G}"},
    {CheckId::T2_5, "T2.5",
     "extraspecial groups are two-value; their maximal-measure set is "
     "{H : Z <= H} and m(H) = |G| whenever Z is not inside H"},
    {CheckId::P2_6, "P2.6",
     "a non-abelian group of order p^n with an abelian subgroup of order "
     ">= p^floor((n+3)/2) is not two-value"},
    {CheckId::C2_7, "C2.7",
     "no non-abelian group of order 64 is two-value"},
    {CheckId::T2_8, "T2.8",
     "a two-value p-group of nilpotence class 2 is extraspecial"},
    {CheckId::T2_9, "T2.9",
     "a two-value p-group of maximal class is non-abelian of order p^3"},
};

}  // namespace

std::optional<CheckId> parse_check_id(const std::string& text) {
  for (const IdRow& row : kIds)
    if (text == row.name) return row.id;
  return std::nullopt;
}

std::string check_id_name(CheckId id) {
  for (const IdRow& row : kIds)
    if (row.id == id) return row.name;
  throw ContractError("unnamed check id");
}

std::string check_id_summary(CheckId id) {
  for (const IdRow& row : kIds)
    if (row.id == id) return row.summary;
  throw ContractError("unnamed check id");
}

const std::vector<CheckId>& all_check_ids() {
  static const std::vector<CheckId> ids = [] {
    std::vector<CheckId> v;
    for (const IdRow& row : kIds) v.push_back(row.id);
    return v;
  }();
  return ids;
}

std::vector<Analysis> analyze_all(std::vector<Group> groups, int jobs) {
  std::vector<std::shared_ptr<const Group>> ptrs;
  ptrs.reserve(groups.size());
  for (Group& g : groups)
    ptrs.push_back(std::make_shared<const Group>(std::move(g)));

  std::vector<std::optional<Analysis>> slots(ptrs.size());
  if (jobs <= 1 || ptrs.size() <= 1) {
    for (std::size_t i = 0; i < ptrs.size(); ++i)
      slots[i].emplace(Analysis::of(ptrs[i]));
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= ptrs.size()) return;
        try {
          slots[i].emplace(Analysis::of(ptrs[i]));
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    const int workers =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), ptrs.size());
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  std::vector<Analysis> out;
  out.reserve(slots.size());
  for (std::optional<Analysis>& s : slots) out.push_back(std::move(*s));
  return out;
}

namespace {

std::string sub_name(const Analysis& a, int i) {
  return "#" + std::to_string(i) + " (order " +
         std::to_string(a.lattice.at(i).size()) + ")";
}

std::string measure_str(std::uint64_t m) { return std::to_string(m); }

using Sink = std::vector<Violation>;

void flag(Sink& sink, const Analysis& a, std::string witness) {
  sink.push_back({a.group->label(), std::move(witness)});
}

bool in_cd(const Analysis& a, int idx) {
  return std::binary_search(a.cd.cd_members.begin(), a.cd.cd_members.end(),
                            idx);
}

// ---- measure properties ----------------------------------------------

void check_p1(const Analysis& a, Sink& sink) {
  for (int i = 0; i < a.lattice.size(); ++i) {
    const int c = a.cd.centralizer_of[i];
    if (a.cd.measures[i] > a.cd.measures[c])
      flag(sink, a,
           "m(" + sub_name(a, i) + ") = " + measure_str(a.cd.measures[i]) +
               " exceeds m(C(H)) = " + measure_str(a.cd.measures[c]));
    else if (a.cd.measures[i] == a.cd.measures[c] &&
             a.cd.centralizer_of[c] != i)
      flag(sink, a,
           "equal measures but C(C(H)) != H for H = " + sub_name(a, i));
  }
}

void check_p2_pair(const Analysis& a, int i, int j, Sink& sink) {
  const Group& g = a.lattice.group();
  const int mt = a.lattice.meet(i, j);
  const int jn = a.lattice.join(i, j);
  const std::uint64_t lhs = a.cd.measures[i] * a.cd.measures[j];
  const std::uint64_t rhs = a.cd.measures[jn] * a.cd.measures[mt];
  if (lhs > rhs) {
    flag(sink, a,
         "m(H)m(K) = " + measure_str(lhs) + " exceeds m(<H,K>)m(H&K) = " +
             measure_str(rhs) + " for H = " + sub_name(a, i) +
             ", K = " + sub_name(a, j));
    return;
  }
  const bool equal = lhs == rhs;
  // Setwise facts used below: the product set HK sits inside <H,K> and has
  // exactly |H||K|/|H&K| elements (count hk representations), so
  // HK = <H,K> reduces to a size comparison. Likewise C(H)C(K) sits inside
  // C(H&K), and |C(H)C(K)| = |C(H)||C(K)|/|C(H)&C(K)| with
  // C(H)&C(K) = C(<H,K>), so that condition is a size comparison too.
  const auto size_of = [&](int k) {
    return static_cast<std::uint64_t>(a.lattice.at(k).size());
  };
  const int ci = a.cd.centralizer_of[i], cj = a.cd.centralizer_of[j];
  const std::uint64_t hk_size = size_of(i) * size_of(j) / size_of(mt);
  const bool join_is_product = hk_size == size_of(jn);
  const std::uint64_t cc_size =
      size_of(ci) * size_of(cj) / size_of(a.cd.centralizer_of[jn]);
  const bool cent_splits = cc_size == size_of(a.cd.centralizer_of[mt]);
  if (g.order() <= 32) {
    // Cross-check the size arithmetic against literal product sets on
    // every exhaustively tested pair.
    const Bitset hk =
        product_set(g, a.lattice.at(i).members, a.lattice.at(j).members);
    const Bitset cc = product_set(g, a.lattice.at(ci).members,
                                  a.lattice.at(cj).members);
    if (static_cast<std::uint64_t>(hk.count()) != hk_size ||
        (hk == a.lattice.at(jn).members) != join_is_product ||
        static_cast<std::uint64_t>(cc.count()) != cc_size ||
        (cc == a.lattice.at(a.cd.centralizer_of[mt]).members) != cent_splits)
      throw ContractError("product-set size arithmetic disagrees with the "
                          "literal product sets in " + g.label());
  }
  if (equal != (join_is_product && cent_splits))
    flag(sink, a,
         std::string(equal ? "equality without" : "inequality despite") +
             " the setwise conditions (HK" +
             (join_is_product ? " = " : " != ") + "<H,K>, C(H)C(K)" +
             (cent_splits ? " = " : " != ") + "C(H&K)) for H = " +
             sub_name(a, i) + ", K = " + sub_name(a, j));
}

void check_p2(const Analysis& a, Sink& sink) {
  const int s = a.lattice.size();
  if (s <= 4096) {
    for (int i = 0; i < s; ++i)
      for (int j = i; j < s; ++j) check_p2_pair(a, i, j, sink);
    return;
  }
  // Past ~8M pairs, fall back to a fixed-seed sample so runs stay
  // deterministic and bounded.
  std::mt19937_64 rng(0x5ca1ab1eULL ^
                      (static_cast<std::uint64_t>(a.lattice.group().order())
                       << 32) ^
                      static_cast<std::uint64_t>(s));
  std::uniform_int_distribution<int> pick(0, s - 1);
  for (int t = 0; t < 100000; ++t)
    check_p2_pair(a, pick(rng), pick(rng), sink);
}

void check_p3(const Analysis& a, Sink& sink) {
  for (int i : a.cd.cd_members) {
    const int c = a.cd.centralizer_of[i];
    if (!in_cd(a, c))
      flag(sink, a,
           "C(H) leaves the maximal-measure set for H = " + sub_name(a, i));
    if (a.cd.centralizer_of[c] != i)
      flag(sink, a, "C(C(H)) != H for H = " + sub_name(a, i));
  }
}

void check_p4(const Analysis& a, Sink& sink) {
  const Group& g = a.lattice.group();
  const Subgroup& m = a.lattice.at(a.cd.cd_min);
  if (!is_abelian_subgroup(m))
    flag(sink, a, "minimum member " + sub_name(a, a.cd.cd_min) +
                      " is not abelian");
  if (!is_normal(g, m))
    flag(sink, a,
         "minimum member " + sub_name(a, a.cd.cd_min) + " is not normal");
  if (!center(g).members.subset_of(m.members))
    flag(sink, a, "minimum member " + sub_name(a, a.cd.cd_min) +
                      " does not contain the center");
}

void check_p5(const Analysis& a, Sink& sink) {
  if (!is_closed_sublattice(a.lattice, a.cd.cd_members)) {
    flag(sink, a, "maximal-measure set is not meet/join-closed");
    return;
  }
  if (!is_modular_sublattice(a.lattice, a.cd.cd_members))
    flag(sink, a, "maximal-measure sublattice is not modular");
}

void check_p6(const Analysis& a, Sink& sink) {
  if (a.cd.image.size() < 2)
    flag(sink, a, "measure map has a single value " +
                      measure_str(a.cd.image.front()));
}

// ---- structural lemmas -------------------------------------------------

void check_l1_1(const Analysis& a, Sink& sink) {
  const PGroupInfo info = *p_group_info(*a.group);
  const int target = info.p * info.p * info.p;
  for (int i : a.lattice.of_order(target))
    if (is_abelian_subgroup(a.lattice.at(i))) return;
  flag(sink, a,
       "no abelian subgroup of order " + std::to_string(target) + " found");
}

void check_l1_2(const Analysis& a, Sink& sink) {
  const bool unique = unique_subgroup_order_p(a);
  const bool shape = a.group->is_cyclic() || q2n_fingerprint(a);
  if (unique != shape)
    flag(sink, a,
         unique ? "unique order-p subgroup but neither cyclic nor "
                  "quaternion-shaped"
                : "cyclic or quaternion-shaped but several order-p "
                  "subgroups");
}

void check_l1_3(const Analysis& a, Sink& sink) {
  const PGroupInfo info = *p_group_info(*a.group);
  const bool outer = is_outer_abelian(a);
  const bool invariant =
      commutator_subgroup(*a.group).size() == info.p &&
      is_cyclic_subgroup(center(*a.group));
  if (outer != invariant)
    flag(sink, a,
         outer ? "outer abelian but |G'| != p or center not cyclic"
               : "|G'| = p with cyclic center, yet a non-abelian proper "
                 "quotient exists");
}

void check_l1_4(const Analysis& a, Sink& sink) {
  const bool maximal = is_maximal_class(*a.group);
  const std::optional<int> witness = self_centralizing_p2(a);
  if (maximal != witness.has_value())
    flag(sink, a,
         maximal
             ? "maximal class but no self-centralizing order-p^2 subgroup"
             : "self-centralizing order-p^2 subgroup " +
                   sub_name(a, *witness) + " without maximal class");
}

// ---- two-value theorems -------------------------------------------------

void check_t2_1(const Analysis& a, Sink& sink) {
  const int z = center(*a.group).size();
  const std::vector<PrimePower> f = factorize(z);
  if (f.size() != 1 || f[0].e != 1)
    flag(sink, a, "two-value group with center of order " +
                      std::to_string(z));
}

void check_c2_2(const Analysis& a, Sink& sink) {
  const bool two_value = in_class_c(a);
  const std::vector<PrimePower> f = factorize(a.group->order());
  const bool prime_cyclic =
      a.group->is_cyclic() && f.size() == 1 && f[0].e == 1;
  if (two_value != prime_cyclic)
    flag(sink, a,
         two_value ? "abelian two-value group that is not cyclic of prime "
                     "order"
                   : "cyclic of prime order but not two-value");
}

void check_c2_3(const Analysis& a, Sink& sink) {
  if (!p_group_info(*a.group))
    flag(sink, a, "two-value group of non-prime-power order " +
                      std::to_string(a.group->order()));
}

void check_items_abc(const Analysis& a, Sink& sink) {
  const Group& g = *a.group;
  const PGroupInfo info = *p_group_info(g);
  const std::uint64_t order = static_cast<std::uint64_t>(g.order());

  if (a.cd.image != std::vector<std::uint64_t>{order, order * info.p})
    flag(sink, a, "measure image is not {p^n, p^(n+1)}");

  const Bitset z = center(g).members;
  const int z_idx = a.lattice.index_of(z);

  std::vector<int> normals;
  for (int i = 1; i < a.lattice.size(); ++i)
    if (is_normal(g, a.lattice.at(i))) normals.push_back(i);
  std::vector<int> minimal;
  for (int i : normals) {
    bool has_smaller = false;
    for (int j : normals)
      if (j != i && a.lattice.at(j).members.subset_of(a.lattice.at(i).members)) {
        has_smaller = true;
        break;
      }
    if (!has_smaller) minimal.push_back(i);
  }
  if (minimal.size() != 1 || minimal[0] != z_idx)
    flag(sink, a, "center is not the unique minimal normal subgroup");

  const Bitset derived = commutator_subgroup(g).members;
  const Bitset frattini = a.lattice.frattini_subgroup().members;
  if (!z.subset_of(derived) || !derived.subset_of(frattini))
    flag(sink, a, "Z <= G' <= Frattini fails");

  for (int i = 0; i < a.lattice.size(); ++i) {
    if (z.subset_of(a.lattice.at(i).members)) continue;
    const int hz = a.lattice.join(i, z_idx);
    if (a.cd.measures[hz] != a.cd.m_star) {
      flag(sink, a, "HZ misses the maximal measure for H = " + sub_name(a, i));
      break;
    }
  }
}

void check_c2_4(const Analysis& a, Sink& sink) {
  const int z_idx = a.lattice.index_of(center(*a.group).members);
  const std::vector<int> zg{z_idx, a.lattice.whole_index()};
  if (a.cd.cd_members == zg)
    flag(sink, a, "two-value non-abelian group with maximal-measure set "
                  "{Z, G}");
}

void check_t2_5(const Analysis& a, Sink& sink) {
  const Group& g = *a.group;
  if (a.cd.image.size() != 2)
    flag(sink, a, "extraspecial group with " +
                      std::to_string(a.cd.image.size()) + " measure values");
  const Bitset z = center(g).members;
  for (int i = 0; i < a.lattice.size(); ++i) {
    const bool above_z = z.subset_of(a.lattice.at(i).members);
    if (above_z != in_cd(a, i)) {
      flag(sink, a,
           "maximal-measure set differs from {H : Z <= H} at " +
               sub_name(a, i));
      return;
    }
    if (!above_z &&
        a.cd.measures[i] != static_cast<std::uint64_t>(g.order())) {
      flag(sink, a, "m(H) != |G| for H = " + sub_name(a, i) +
                        " avoiding the center");
      return;
    }
  }
}

void check_p2_6(const Analysis& a, Sink& sink) {
  if (in_class_c(a)) {
    const std::optional<int> witness = prop26_witness(a);
    if (witness)
      flag(sink, a,
           "two-value despite abelian subgroup " + sub_name(a, *witness));
  }
}

void check_c2_7(const Analysis& a, Sink& sink) {
  if (in_class_c(a))
    flag(sink, a, "non-abelian order-64 group with a two-value measure");
}

void check_t2_8(const Analysis& a, Sink& sink) {
  if (!is_extraspecial(a))
    flag(sink, a, "two-value group of class 2 that is not extraspecial");
}

void check_t2_9(const Analysis& a, Sink& sink) {
  const PGroupInfo info = *p_group_info(*a.group);
  if (info.n != 3 || a.group->is_abelian())
    flag(sink, a, "two-value maximal-class group of order p^" +
                      std::to_string(info.n));
}

// ---- hypothesis filters --------------------------------------------------

bool nontrivial(const Analysis& a) { return a.group->order() > 1; }

bool is_p(const Analysis& a) {
  return nontrivial(a) && p_group_info(*a.group).has_value();
}

bool hypothesis_holds(CheckId id, const Analysis& a) {
  switch (id) {
    case CheckId::P1:
    case CheckId::P2:
    case CheckId::P3:
    case CheckId::P4:
    case CheckId::P5:
    case CheckId::P6:
      return nontrivial(a);
    case CheckId::L1_1:
      return is_p(a) && p_group_info(*a.group)->n == 4;
    case CheckId::L1_2:
    case CheckId::L1_3:
      return is_p(a);
    case CheckId::L1_4:
      return is_p(a) && p_group_info(*a.group)->n >= 3;
    case CheckId::T2_1:
    case CheckId::C2_3:
      return nontrivial(a) && in_class_c(a);
    case CheckId::C2_2:
      return nontrivial(a) && a.group->is_abelian();
    case CheckId::ItemsABC:
      return is_p(a) && !a.group->is_abelian() && in_class_c(a);
    case CheckId::C2_4:
      return nontrivial(a) && !a.group->is_abelian() && in_class_c(a);
    case CheckId::T2_5:
      return nontrivial(a) && is_extraspecial(a);
    case CheckId::P2_6:
      return is_p(a) && !a.group->is_abelian();
    case CheckId::C2_7:
      return a.group->order() == 64 && !a.group->is_abelian();
    case CheckId::T2_8:
      return is_p(a) && in_class_c(a) && nilpotence_class(*a.group) == 2;
    case CheckId::T2_9:
      return is_p(a) && in_class_c(a) && is_maximal_class(*a.group);
  }
  throw ContractError("unhandled check id");
}

void run_one(CheckId id, const Analysis& a, Sink& sink) {
  switch (id) {
    case CheckId::P1: return check_p1(a, sink);
    case CheckId::P2: return check_p2(a, sink);
    case CheckId::P3: return check_p3(a, sink);
    case CheckId::P4: return check_p4(a, sink);
    case CheckId::P5: return check_p5(a, sink);
    case CheckId::P6: return check_p6(a, sink);
    case CheckId::L1_1: return check_l1_1(a, sink);
    case CheckId::L1_2: return check_l1_2(a, sink);
    case CheckId::L1_3: return check_l1_3(a, sink);
    case CheckId::L1_4: return check_l1_4(a, sink);
    case CheckId::T2_1: return check_t2_1(a, sink);
    case CheckId::C2_2: return check_c2_2(a, sink);
    case CheckId::C2_3: return check_c2_3(a, sink);
    case CheckId::ItemsABC: return check_items_abc(a, sink);
    case CheckId::C2_4: return check_c2_4(a, sink);
    case CheckId::T2_5: return check_t2_5(a, sink);
    case CheckId::P2_6: return check_p2_6(a, sink);
    case CheckId::C2_7: return check_c2_7(a, sink);
    case CheckId::T2_8: return check_t2_8(a, sink);
    case CheckId::T2_9: return check_t2_9(a, sink);
  }
  throw ContractError("unhandled check id");
}

}  // namespace

VerificationReport run_check(CheckId id, const std::vector<Analysis>& corpus,
                             const std::string& corpus_desc) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.theorem = check_id_name(id);
  report.corpus = corpus_desc;
  for (const Analysis& a : corpus) {
    if (!hypothesis_holds(id, a)) continue;
    ++report.checked;
    run_one(id, a, report.violations);
  }
  report.pass = report.violations.empty();
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

std::vector<SearchHit> search_class_c(const std::vector<Analysis>& corpus,
                                      std::optional<int> p,
                                      std::optional<int> n) {
  std::vector<SearchHit> hits;
  for (const Analysis& a : corpus) {
    if (a.group->order() == 1 || !in_class_c(a)) continue;
    SearchHit hit;
    hit.label = a.group->label();
    hit.m_star = a.cd.m_star;
    if (std::optional<PGroupInfo> info = p_group_info(*a.group)) {
      hit.p = info->p;
      hit.n = info->n;
    }
    if (p && hit.p != *p) continue;
    if (n && hit.n != *n) continue;
    hits.push_back(std::move(hit));
  }
  std::sort(hits.begin(), hits.end(), [](const SearchHit& x, const SearchHit& y) {
    if (x.p != y.p) return x.p < y.p;
    if (x.n != y.n) return x.n < y.n;
    return x.label < y.label;
  });
  return hits;
}

}  // namespace cdlat

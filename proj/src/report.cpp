#include "cdlat/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace cdlat {

namespace {

using Json = nlohmann::ordered_json;

bool attains_max(const Analysis& a, int i) {
  return std::binary_search(a.cd.cd_members.begin(), a.cd.cd_members.end(),
                            i);
}

std::string order_histogram(const Analysis& a) {
  std::map<int, int> counts;
  for (const Subgroup& h : a.lattice.all()) ++counts[h.size()];
  std::ostringstream out;
  bool first = true;
  for (const auto& [order, count] : counts) {
    out << (first ? "" : ", ") << "order " << order << ": " << count;
    first = false;
  }
  return out.str();
}

std::string factor_string(const std::vector<PrimePower>& f) {
  std::ostringstream out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out << " * ";
    out << f[i].p;
    if (f[i].e > 1) out << "^" << f[i].e;
  }
  return out.str();
}

std::string image_string(const std::vector<std::uint64_t>& image) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < image.size(); ++i)
    out << (i ? ", " : "") << image[i];
  out << "}";
  return out.str();
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string cd_text(const Analysis& a) {
  std::ostringstream out;
  out << "group: " << a.group->label() << "\n";
  out << "order: " << a.group->order() << "\n";
  out << "subgroups: " << a.lattice.size() << "\n";
  out << "measure image: " << image_string(a.cd.image) << "\n";
  out << "max measure: " << a.cd.m_star << "\n";
  out << "maximal-measure subgroups: " << a.cd.cd_members.size() << "\n";
  const Subgroup& m = a.lattice.at(a.cd.cd_min);
  out << "minimum member: #" << a.cd.cd_min << " (order " << m.size() << ")\n";
  return out.str();
}

std::string cd_json(const Analysis& a) {
  Json j;
  j["group"] = a.group->label();
  j["order"] = a.group->order();
  j["subgroup_count"] = a.lattice.size();
  j["image"] = a.cd.image;
  j["m_star"] = a.cd.m_star;
  j["cd_members"] = Json::array();
  for (int i : a.cd.cd_members)
    j["cd_members"].push_back(
        Json{{"index", i}, {"order", a.lattice.at(i).size()}});
  j["cd_min"] = Json{{"index", a.cd.cd_min},
                     {"order", a.lattice.at(a.cd.cd_min).size()}};
  j["subgroups"] = Json::array();
  for (int i = 0; i < a.lattice.size(); ++i)
    j["subgroups"].push_back(Json{{"index", i},
                                  {"order", a.lattice.at(i).size()},
                                  {"measure", a.cd.measures[i]},
                                  {"centralizer", a.cd.centralizer_of[i]}});
  return j.dump(2) + "\n";
}

std::string lattice_dot(const Analysis& a) {
  std::ostringstream out;
  out << "digraph subgroups {\n";
  out << "  rankdir=BT;\n";
  out << "  label=\"" << a.group->label() << ": " << a.lattice.size()
      << " subgroups, max measure " << a.cd.m_star << "\";\n";
  out << "  node [shape=box];\n";
  for (int i = 0; i < a.lattice.size(); ++i) {
    out << "  n" << i << " [label=\"order " << a.lattice.at(i).size()
        << "\\nm=" << a.cd.measures[i] << "\"";
    if (attains_max(a, i)) out << ", style=filled, fillcolor=lightblue";
    out << "];\n";
  }
  for (int i = 0; i < a.lattice.size(); ++i)
    for (int j : a.lattice.upper_covers(i))
      out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

std::string subgroups_text(const Analysis& a) {
  std::ostringstream out;
  out << "group: " << a.group->label() << "\n";
  out << "order: " << a.group->order() << "\n";
  out << "subgroups: " << a.lattice.size() << "\n";
  out << "by order: " << order_histogram(a) << "\n";
  out << "maximal subgroups: " << a.lattice.maximal_subgroups().size() << "\n";
  out << "frattini subgroup: order "
      << a.lattice.frattini_subgroup().size() << "\n";
  return out.str();
}

std::string classification_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "group: " << r.label << "\n";
  out << "order: " << r.order << " = " << factor_string(r.factorization)
      << "\n";
  out << "abelian: " << yes_no(r.is_abelian) << "\n";
  out << "cyclic: " << yes_no(r.is_cyclic) << "\n";
  if (r.p_group)
    out << "p-group: p = " << r.p_group->p << ", n = " << r.p_group->n << "\n";
  else
    out << "p-group: false\n";
  if (r.nilpotence)
    out << "nilpotence class: " << *r.nilpotence << "\n";
  else
    out << "nilpotence class: not nilpotent\n";
  out << "maximal class: " << yes_no(r.is_maximal_class) << "\n";
  out << "extraspecial: " << yes_no(r.is_extraspecial) << "\n";
  out << "outer abelian: " << yes_no(r.is_outer_abelian) << "\n";
  out << "unique minimal subgroup: " << yes_no(r.has_unique_minimal_subgroup)
      << "\n";
  out << "two-value measure: " << yes_no(r.in_class_c) << "\n";
  out << "measure image: " << image_string(r.measure_image) << "\n";
  if (r.self_centralizing_p2)
    out << "self-centralizing p^2 subgroup: #" << *r.self_centralizing_p2
        << "\n";
  if (r.large_abelian_witness)
    out << "large abelian subgroup: #" << *r.large_abelian_witness << "\n";
  return out.str();
}

std::string classification_json(const ClassificationReport& r) {
  Json j;
  j["group"] = r.label;
  j["order"] = r.order;
  j["factorization"] = Json::array();
  for (const PrimePower& pp : r.factorization)
    j["factorization"].push_back(Json{{"p", pp.p}, {"e", pp.e}});
  j["abelian"] = r.is_abelian;
  j["cyclic"] = r.is_cyclic;
  if (r.p_group)
    j["p_group"] = Json{{"p", r.p_group->p}, {"n", r.p_group->n}};
  else
    j["p_group"] = nullptr;
  if (r.nilpotence)
    j["nilpotence_class"] = *r.nilpotence;
  else
    j["nilpotence_class"] = nullptr;
  j["maximal_class"] = r.is_maximal_class;
  j["extraspecial"] = r.is_extraspecial;
  j["outer_abelian"] = r.is_outer_abelian;
  j["unique_minimal_subgroup"] = r.has_unique_minimal_subgroup;
  j["two_value"] = r.in_class_c;
  j["measure_image"] = r.measure_image;
  if (r.self_centralizing_p2)
    j["self_centralizing_p2"] = *r.self_centralizing_p2;
  else
    j["self_centralizing_p2"] = nullptr;
  if (r.large_abelian_witness)
    j["large_abelian_subgroup"] = *r.large_abelian_witness;
  else
    j["large_abelian_subgroup"] = nullptr;
  return j.dump(2) + "\n";
}

std::string verification_text(const VerificationReport& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS" : "FAIL") << " " << r.theorem << ": "
      << check_id_summary(parse_check_id(r.theorem).value()) << "\n";
  out << "corpus: " << r.corpus << "\n";
  out << "groups checked: " << r.checked << "\n";
  out << "violations: " << r.violations.size() << "\n";
  for (const Violation& v : r.violations)
    out << "  " << v.group << ": " << v.witness << "\n";
  out << "elapsed: " << r.elapsed_ms << " ms\n";
  return out.str();
}

std::string verification_json(const VerificationReport& r) {
  Json j;
  j["theorem"] = r.theorem;
  j["checked"] = r.checked;
  j["violations"] = Json::array();
  for (const Violation& v : r.violations)
    j["violations"].push_back(Json{{"group", v.group}, {"witness", v.witness}});
  j["pass"] = r.pass;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2) + "\n";
}

std::string search_text(const std::vector<SearchHit>& hits,
                        const std::string& corpus_desc) {
  std::ostringstream out;
  out << "two-value groups in " << corpus_desc << ":\n";
  if (hits.empty()) {
    out << "  (none)\n";
  } else {
    int last_p = -1, last_n = -1;
    for (const SearchHit& h : hits) {
      if (h.p != last_p || h.n != last_n) {
        if (h.p > 0)
          out << "(p, n) = (" << h.p << ", " << h.n << "):\n";
        else
          out << "non-prime-power order:\n";
        last_p = h.p;
        last_n = h.n;
      }
      out << "  " << h.label << " (max measure " << h.m_star << ")\n";
    }
  }
  out << "note: every pair (p, n) with n odd is attained: cyclic groups of "
         "prime order for n = 1 and extraspecial groups of order p^n for "
         "odd n >= 3.\n";
  return out.str();
}

}  // namespace cdlat

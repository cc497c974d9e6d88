#include "cdlat/catalog.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "cdlat/config.hpp"
#include "cdlat/errors.hpp"
#include "cdlat/presentation.hpp"

namespace cdlat {

namespace {

using Json = nlohmann::json;

[[noreturn]] void entry_error(const std::string& origin, int line,
                              const std::string& message) {
  throw UsageError(origin + ":" + std::to_string(line) + ": " + message);
}

Group from_table(const Json& data, const Json& declared_order,
                 const std::string& name, const std::string& origin,
                 int line) {
  if (!data.is_array())
    entry_error(origin, line, "table data must be an array of integers");
  std::vector<std::uint16_t> table;
  table.reserve(data.size());
  for (const Json& v : data) {
    if (!v.is_number_integer() || v.get<long long>() < 0 ||
        v.get<long long>() > 0xffff)
      entry_error(origin, line, "table entries must be small non-negative "
                                "integers");
    table.push_back(static_cast<std::uint16_t>(v.get<long long>()));
  }
  int n;
  if (!declared_order.is_null()) {
    n = declared_order.get<int>();
  } else {
    n = static_cast<int>(std::lround(std::sqrt(double(table.size()))));
    if (static_cast<std::size_t>(n) * n != table.size())
      entry_error(origin, line,
                  "table length " + std::to_string(table.size()) +
                      " is not a perfect square and no order is declared");
  }
  if (n < 1 || static_cast<std::size_t>(n) * n != table.size())
    entry_error(origin, line,
                "declared order " + std::to_string(n) +
                    " does not match table length " +
                    std::to_string(table.size()));
  return Group(n, std::move(table), name);
}

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
  return out;
}

Group from_perms(const Json& data, const std::string& name,
                 const std::string& origin, int line) {
  if (!data.is_array() || data.empty())
    entry_error(origin, line,
                "perm data must be a nonempty array of image arrays");
  std::vector<Perm> gens;
  std::size_t degree = 0;
  for (const Json& jp : data) {
    if (!jp.is_array())
      entry_error(origin, line, "each generator must be an image array");
    Perm p;
    for (const Json& v : jp) {
      if (!v.is_number_integer())
        entry_error(origin, line, "permutation images must be integers");
      p.push_back(v.get<int>());
    }
    if (degree == 0) degree = p.size();
    if (p.size() != degree || degree == 0)
      entry_error(origin, line, "generators must share a positive degree");
    std::vector<bool> seen(degree, false);
    for (int img : p) {
      if (img < 0 || static_cast<std::size_t>(img) >= degree || seen[img])
        entry_error(origin, line, "generator is not a permutation");
      seen[img] = true;
    }
    gens.push_back(std::move(p));
  }

  Perm identity(degree);
  for (std::size_t x = 0; x < degree; ++x) identity[x] = static_cast<int>(x);

  std::vector<Perm> elements{identity};
  std::map<Perm, int> index{{identity, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Perm& gen : gens) {
      Perm next = compose(elements[head], gen);
      if (index.emplace(next, static_cast<int>(elements.size())).second) {
        if (static_cast<int>(elements.size()) >= limits::order_cap())
          throw ResourceError("permutation closure exceeds order cap " +
                              std::to_string(limits::order_cap()));
        elements.push_back(std::move(next));
      }
    }
  }

  const int n = static_cast<int>(elements.size());
  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = index.find(compose(elements[i], elements[j]));
      if (it == index.end())
        entry_error(origin, line, "permutation set is not closed");
      table[static_cast<std::size_t>(i) * n + j] =
          static_cast<std::uint16_t>(it->second);
    }
  return Group(n, std::move(table), name);
}

Group from_presentation_text(const Json& data, const std::string& name,
                             const std::string& origin, int line) {
  if (!data.is_string())
    entry_error(origin, line, "presentation data must be DSL text");
  Presentation p = parse_presentation(data.get<std::string>());
  p.name = name;
  return enumerate(p).group;
}

}  // namespace

std::vector<Group> parse_catalog(std::istream& in, const std::string& origin) {
  std::vector<Group> out;
  std::string line_text;
  int line = 0;
  while (std::getline(in, line_text)) {
    ++line;
    if (line_text.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json entry;
    try {
      entry = Json::parse(line_text);
    } catch (const Json::exception& e) {
      entry_error(origin, line, std::string("bad JSON: ") + e.what());
    }
    if (!entry.is_object() || !entry.contains("name") ||
        !entry["name"].is_string() || !entry.contains("kind") ||
        !entry["kind"].is_string() || !entry.contains("data"))
      entry_error(origin, line,
                  "entry needs string fields 'name' and 'kind' plus 'data'");
    const std::string name = entry["name"].get<std::string>();
    const std::string kind = entry["kind"].get<std::string>();
    const Json declared =
        entry.contains("order") ? entry["order"] : Json(nullptr);
    if (!declared.is_null() && !declared.is_number_integer())
      entry_error(origin, line, "'order' must be an integer");

    Group g = [&]() -> Group {
      try {
        if (kind == "table") return from_table(entry["data"], declared, name, origin, line);
        if (kind == "perm") return from_perms(entry["data"], name, origin, line);
        if (kind == "presentation")
          return from_presentation_text(entry["data"], name, origin, line);
      } catch (const UsageError&) {
        throw;
      } catch (const ResourceError&) {
        throw;
      } catch (const std::exception& e) {
        entry_error(origin, line,
                    "entry '" + name + "' rejected: " + e.what());
      }
      entry_error(origin, line, "unknown kind '" + kind +
                                    "' (expected perm, table, or "
                                    "presentation)");
    }();

    if (!declared.is_null() && declared.get<int>() != g.order())
      entry_error(origin, line,
                  "entry '" + name + "' declares order " +
                      std::to_string(declared.get<int>()) +
                      " but constructs order " + std::to_string(g.order()));
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Group> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open catalog file '" + path + "'");
  return parse_catalog(in, path);
}

Group load_group_file(const std::string& path) {
  std::vector<Group> groups = load_catalog(path);
  if (groups.size() != 1)
    throw UsageError("expected exactly one group in '" + path + "', found " +
                     std::to_string(groups.size()));
  return std::move(groups.front());
}

std::string group_entry_json(const Group& g) {
  nlohmann::ordered_json j;
  j["name"] = g.label();
  j["kind"] = "table";
  j["order"] = g.order();
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(g.order()) * g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int k = 0; k < g.order(); ++k) flat.push_back(g.mul(i, k));
  j["data"] = flat;
  return j.dump();
}

void write_group_file(const Group& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write group file '" + path + "'");
  out << group_entry_json(g) << "\n";
  if (!out) throw UsageError("failed writing group file '" + path + "'");
}

}  // namespace cdlat

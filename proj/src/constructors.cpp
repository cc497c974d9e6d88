#include "cdlat/constructors.hpp"

#include <algorithm>
#include <stdexcept>

#include "cdlat/config.hpp"
#include "cdlat/errors.hpp"
#include "cdlat/order16_data.hpp"
#include "cdlat/presentation.hpp"

namespace cdlat {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

long long ipow(int base, int exp) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v > (1LL << 30)) throw ResourceError("parameter power overflows");
  }
  return v;
}

void check_cap(long long order, const std::string& what) {
  if (order > limits::order_cap())
    throw ResourceError(what + " order " + std::to_string(order) +
                        " exceeds order cap " +
                        std::to_string(limits::order_cap()));
}

Group from_presentation(const std::string& dsl, const std::string& label) {
  Presentation p = parse_presentation(dsl);
  p.name = label;
  return enumerate(p).group;
}

}  // namespace

Group cyclic(int n) {
  require(n >= 1, "cyclic group order must be at least 1");
  check_cap(n, "cyclic group");
  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] =
          static_cast<std::uint16_t>((i + j) % n);
  return Group(n, std::move(table), "C" + std::to_string(n));
}

Group abelian_of_type(std::span<const int> orders) {
  require(!orders.empty(), "abelian type needs at least one factor");
  for (int d : orders) require(d >= 2, "abelian factors must be at least 2");
  Group g = cyclic(orders[0]);
  for (std::size_t i = 1; i < orders.size(); ++i)
    g = direct_product(g, cyclic(orders[i]));
  std::string label = "C" + std::to_string(orders[0]);
  for (std::size_t i = 1; i < orders.size(); ++i)
    label += "xC" + std::to_string(orders[i]);
  return g.relabeled(label);
}

Group dihedral(int two_n) {
  require(two_n >= 2 && two_n % 2 == 0,
          "dihedral order must be a positive even number");
  check_cap(two_n, "dihedral group");
  const int n = two_n / 2;
  // 0..n-1: rotations r^i; n..2n-1: reflections r^i s, with s r s = r^-1.
  auto rot = [n](int i) { return ((i % n) + n) % n; };
  std::vector<std::uint16_t> table(static_cast<std::size_t>(two_n) * two_n);
  auto at = [&](int i, int j) -> std::uint16_t& {
    return table[static_cast<std::size_t>(i) * two_n + j];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      at(i, j) = static_cast<std::uint16_t>(rot(i + j));
      at(i, n + j) = static_cast<std::uint16_t>(n + rot(i + j));
      at(n + i, j) = static_cast<std::uint16_t>(n + rot(i - j));
      at(n + i, n + j) = static_cast<std::uint16_t>(rot(i - j));
    }
  return Group(two_n, std::move(table), "D" + std::to_string(two_n));
}

Group generalized_quaternion(int n) {
  require(n >= 3, "generalized quaternion group needs n >= 3 (order 2^n)");
  long long order = ipow(2, n);
  check_cap(order, "generalized quaternion group");
  std::string dsl = "gens a, b; rels a^" + std::to_string(ipow(2, n - 1)) +
                    ", a^" + std::to_string(ipow(2, n - 2)) +
                    " = b^2, b^-1*a*b = a^-1;";
  return from_presentation(dsl, "Q" + std::to_string(order));
}

Group semidihedral(int n) {
  require(n >= 4, "semidihedral group needs n >= 4 (order 2^n)");
  long long order = ipow(2, n);
  check_cap(order, "semidihedral group");
  std::string dsl = "gens a, b; rels a^" + std::to_string(ipow(2, n - 1)) +
                    ", b^2, b^-1*a*b = a^" +
                    std::to_string(ipow(2, n - 2) - 1) + ";";
  return from_presentation(dsl, "SD" + std::to_string(order));
}

Group modular_maximal_cyclic(int p, int n) {
  require(is_prime(p), "modular maximal-cyclic group needs a prime p");
  require(n >= 2, "modular maximal-cyclic group needs n >= 2");
  long long order = ipow(p, n + 1);
  check_cap(order, "modular maximal-cyclic group");
  std::string dsl = "gens a, b; rels a^" + std::to_string(ipow(p, n)) +
                    ", b^" + std::to_string(p) + ", b^-1*a*b = a^" +
                    std::to_string(ipow(p, n - 1) + 1) + ";";
  return from_presentation(
      dsl, "M(" + std::to_string(n) + ",1;p=" + std::to_string(p) + ")");
}

Group heisenberg(int p) {
  require(is_prime(p), "Heisenberg group needs a prime p");
  long long order = ipow(p, 3);
  check_cap(order, "Heisenberg group");
  const int n = static_cast<int>(order);
  // Element i encodes (a, b, c) as a*p^2 + b*p + c; (0,0,0) is the identity.
  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const int a = i / (p * p), b = (i / p) % p, c = i % p;
    for (int j = 0; j < n; ++j) {
      const int a2 = j / (p * p), b2 = (j / p) % p, c2 = j % p;
      const int ra = (a + a2) % p, rb = (b + b2) % p,
                rc = (c + c2 + a * b2) % p;
      table[static_cast<std::size_t>(i) * n + j] =
          static_cast<std::uint16_t>(ra * p * p + rb * p + rc);
    }
  }
  return Group(n, std::move(table), "He(" + std::to_string(p) + ")");
}

Group extraspecial(int p, int m, char type) {
  require(is_prime(p), "extraspecial group needs a prime p");
  require(m >= 1, "extraspecial group needs m >= 1");
  require(type == '+' || type == '-', "extraspecial type must be '+' or '-'");
  check_cap(ipow(p, 2 * m + 1), "extraspecial group");

  auto base = [&]() { return p == 2 ? dihedral(8) : heisenberg(p); };
  // The exceptional factor that distinguishes '-' from '+'.
  auto exceptional = [&]() {
    return p == 2 ? generalized_quaternion(3) : modular_maximal_cyclic(p, 2);
  };

  Group g = m == 1 && type == '-' ? exceptional() : base();
  for (int i = 1; i < m; ++i)
    g = central_product(g, (i == m - 1 && type == '-') ? exceptional()
                                                       : base());
  return g.relabeled("ES(" + std::to_string(ipow(p, 2 * m + 1)) + "," + type +
                     ")");
}

Group extraspecial_central_product(int p, int m, char kind, int param) {
  require(kind == 'C' || kind == 'M',
          "central factor kind must be 'C' (cyclic) or 'M' (modular)");
  Group e = extraspecial(p, m, '+');
  if (kind == 'C') {
    require(param >= 2, "cyclic central factor needs exponent >= 2");
    long long aorder = ipow(p, param);
    check_cap(static_cast<long long>(e.order()) * aorder / p,
              "central product");
    return central_product(e, cyclic(static_cast<int>(aorder)));
  }
  require(param >= 3, "modular central factor needs n >= 3");
  Group a = modular_maximal_cyclic(p, param);
  check_cap(static_cast<long long>(e.order()) * a.order() / p,
            "central product");
  return central_product(e, a);
}

Group small_group_32_8() {
  return from_presentation(
      "gens a, b, c; rels a^4, b^4 = a^2, c^2 = a^-1, b*a*b^-1 = a^-1, "
      "a*c = c*a, c*b*c^-1 = a^-1*b^3;",
      "SG(32,8)");
}

std::vector<Group> order16_groups() {
  std::vector<Group> out;
  for (const Presentation& p :
       parse_presentation_file(detail::kOrder16Presentations)) {
    Group g = enumerate(p).group;
    if (g.order() != 16)
      throw ContractError("bundled presentation '" + g.label() +
                          "' has order " + std::to_string(g.order()));
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

// Partitions of k into at most max_parts parts, in descending lexicographic
// order, skipping the one-part partition (cyclic groups enter separately).
void partitions(int k, int largest, int max_parts, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (k == 0) {
    if (cur.size() >= 2) out.push_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_parts) return;
  for (int part = std::min(k, largest); part >= 1; --part) {
    cur.push_back(part);
    partitions(k - part, part, max_parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Group> builtin_corpus(int max_order) {
  require(max_order >= 1, "corpus max order must be positive");
  std::vector<Group> out;

  auto add = [&](Group g) {
    // Order-16 groups come solely from the bundled file, added below.
    if (g.order() > max_order || g.order() == 16) return;
    for (const Group& h : out)
      if (h == g) return;  // identical table, keep the first label
    out.push_back(std::move(g));
  };

  for (int n = 2; n <= max_order; ++n) add(cyclic(n));

  for (int p : {2, 3, 5, 7, 11}) {
    for (int k = 2; ipow(p, k) <= max_order; ++k) {
      // Rank is capped to keep subgroup lattices enumerable in reasonable
      // time; high-rank elementary abelian groups explode.
      const int max_parts = ipow(p, k) <= 64 ? 6 : 3;
      std::vector<std::vector<int>> parts;
      std::vector<int> cur;
      partitions(k, k, max_parts, cur, parts);
      for (const auto& part : parts) {
        std::vector<int> orders;
        for (int e : part) orders.push_back(static_cast<int>(ipow(p, e)));
        add(abelian_of_type(orders));
      }
    }
  }

  for (int two_n : {6, 10, 12, 20, 24})
    if (two_n <= max_order) add(dihedral(two_n));

  for (int n = 3; ipow(2, n) <= max_order; ++n) {
    add(dihedral(static_cast<int>(ipow(2, n))));
    add(generalized_quaternion(n));
    if (n >= 4) add(semidihedral(n));
    if (n >= 4) add(modular_maximal_cyclic(2, n - 1));
  }
  if (ipow(3, 4) <= max_order) add(modular_maximal_cyclic(3, 3));

  for (int p : {2, 3, 5})
    for (int m = 1; ipow(p, 2 * m + 1) <= max_order; ++m) {
      add(extraspecial(p, m, '+'));
      add(extraspecial(p, m, '-'));
    }

  // Central products E * A (E extraspecial of order p^(2m+1)).
  for (int t = 2; t <= 5; ++t)
    for (int m = 1; m <= 2; ++m)
      if (ipow(2, 2 * m + t) <= max_order)
        add(extraspecial_central_product(2, m, 'C', t));
  if (ipow(2, 6) <= max_order) add(extraspecial_central_product(2, 1, 'M', 3));
  if (ipow(2, 7) <= max_order) add(extraspecial_central_product(2, 1, 'M', 4));
  if (ipow(3, 4) <= max_order) add(extraspecial_central_product(3, 1, 'C', 2));

  if (max_order >= 32) add(small_group_32_8());

  // A spread of direct products; order-64 entries double as the
  // constructible non-abelian order-64 family.
  struct Prod {
    int order;
    Group (*build)();
  };
  static const Prod kProducts[] = {
      {32, [] { return direct_product(dihedral(8), cyclic(4)); }},
      {32, [] { return direct_product(dihedral(8), abelian_of_type(std::vector<int>{2, 2})); }},
      {32, [] { return direct_product(generalized_quaternion(3), cyclic(4)); }},
      {32, [] { return direct_product(generalized_quaternion(3), abelian_of_type(std::vector<int>{2, 2})); }},
      {32, [] { return direct_product(dihedral(16), cyclic(2)); }},
      {32, [] { return direct_product(generalized_quaternion(4), cyclic(2)); }},
      {32, [] { return direct_product(semidihedral(4), cyclic(2)); }},
      {32, [] { return direct_product(modular_maximal_cyclic(2, 3), cyclic(2)); }},
      {64, [] { return direct_product(dihedral(8), cyclic(8)); }},
      {64, [] { return direct_product(dihedral(8), abelian_of_type(std::vector<int>{2, 2, 2})); }},
      {64, [] { return direct_product(generalized_quaternion(3), cyclic(8)); }},
      {64, [] { return direct_product(generalized_quaternion(3), abelian_of_type(std::vector<int>{2, 2, 2})); }},
      {64, [] { return direct_product(dihedral(8), dihedral(8)); }},
      {64, [] { return direct_product(dihedral(8), generalized_quaternion(3)); }},
      {64, [] { return direct_product(generalized_quaternion(3), generalized_quaternion(3)); }},
      {64, [] { return direct_product(dihedral(16), cyclic(4)); }},
      {64, [] { return direct_product(generalized_quaternion(4), cyclic(4)); }},
      {64, [] { return direct_product(semidihedral(4), cyclic(4)); }},
      {64, [] { return direct_product(dihedral(32), cyclic(2)); }},
      {64, [] { return direct_product(generalized_quaternion(5), cyclic(2)); }},
      {64, [] { return direct_product(semidihedral(5), cyclic(2)); }},
      {64, [] { return direct_product(modular_maximal_cyclic(2, 4), cyclic(2)); }},
      {64, [] { return direct_product(small_group_32_8(), cyclic(2)); }},
      {81, [] { return direct_product(heisenberg(3), cyclic(3)); }},
      {81, [] { return direct_product(modular_maximal_cyclic(3, 2), cyclic(3)); }},
      {128, [] { return direct_product(dihedral(64), cyclic(2)); }},
      {128, [] { return direct_product(generalized_quaternion(6), cyclic(2)); }},
      {128, [] { return direct_product(semidihedral(6), cyclic(2)); }},
      {128, [] { return direct_product(small_group_32_8(), cyclic(4)); }},
      {128, [] { return direct_product(dihedral(8), dihedral(16)); }},
      {128, [] { return direct_product(generalized_quaternion(3), generalized_quaternion(4)); }},
  };
  for (const Prod& pr : kProducts)
    if (pr.order <= max_order) add(pr.build());

  if (max_order >= 16)
    for (Group& g : order16_groups()) out.push_back(std::move(g));

  return out;
}

Group FamilySpec::build() const {
  auto want = [&](std::size_t k, const char* usage) {
    if (args.size() != k)
      throw UsageError("family '" + family + "' expects " + usage);
  };
  auto num = [&](std::size_t i) -> int {
    try {
      std::size_t used = 0;
      int v = std::stoi(args.at(i), &used);
      if (used != args.at(i).size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw UsageError("parameter '" + args.at(i) + "' is not an integer");
    }
  };

  if (family == "cyclic") {
    want(1, "<n>");
    return cyclic(num(0));
  }
  if (family == "abelian") {
    if (args.empty()) throw UsageError("family 'abelian' expects <n1> [n2 ...]");
    std::vector<int> orders;
    for (std::size_t i = 0; i < args.size(); ++i) orders.push_back(num(i));
    return abelian_of_type(orders);
  }
  if (family == "dihedral") {
    want(1, "<order>");
    return dihedral(num(0));
  }
  if (family == "quaternion") {
    want(1, "<n>  (order 2^n)");
    return generalized_quaternion(num(0));
  }
  if (family == "semidihedral") {
    want(1, "<n>  (order 2^n)");
    return semidihedral(num(0));
  }
  if (family == "modular") {
    want(2, "<p> <n>");
    return modular_maximal_cyclic(num(0), num(1));
  }
  if (family == "heisenberg") {
    want(1, "<p>");
    return heisenberg(num(0));
  }
  if (family == "extraspecial") {
    want(3, "<p> <m> <+|->");
    const std::string& t = args[2];
    if (t != "+" && t != "-")
      throw UsageError("extraspecial type must be '+' or '-'");
    return extraspecial(num(0), num(1), t[0]);
  }
  if (family == "central") {
    want(4, "<p> <m> <C|M> <t>");
    const std::string& k = args[2];
    if (k != "C" && k != "M")
      throw UsageError("central factor kind must be 'C' or 'M'");
    return extraspecial_central_product(num(0), num(1), k[0], num(3));
  }
  if (family == "sg32_8") {
    want(0, "no parameters");
    return small_group_32_8();
  }
  throw UsageError("unknown family '" + family + "'; try one of: " + help());
}

std::string FamilySpec::help() {
  return "cyclic <n> | abelian <n1> [n2 ...] | dihedral <order> | "
         "quaternion <n> | semidihedral <n> | modular <p> <n> | "
         "heisenberg <p> | extraspecial <p> <m> <+|-> | "
         "central <p> <m> <C|M> <t> | sg32_8";
}

}  // namespace cdlat

#include "cdlat/config.hpp"

#include <atomic>

#include "cdlat/errors.hpp"

namespace cdlat::limits {
namespace {

std::atomic<int> g_order_cap{4096};
std::atomic<int> g_subgroup_cap{100000};
std::atomic<int> g_max_cosets{65536};

void check_positive(int v, const char* what) {
  if (v < 1) throw UsageError(std::string(what) + " must be positive");
}

}  // namespace

int order_cap() { return g_order_cap.load(); }
void set_order_cap(int cap) {
  check_positive(cap, "order cap");
  g_order_cap.store(cap);
}

int subgroup_cap() { return g_subgroup_cap.load(); }
void set_subgroup_cap(int cap) {
  check_positive(cap, "subgroup cap");
  g_subgroup_cap.store(cap);
}

int default_max_cosets() { return g_max_cosets.load(); }
void set_default_max_cosets(int m) {
  check_positive(m, "coset limit");
  g_max_cosets.store(m);
}

}  // namespace cdlat::limits

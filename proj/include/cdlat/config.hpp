#pragma once

// Process-wide resource limits. All are plain atomics: set them once at
// startup (the CLI does this from flags) before handing groups to worker
// threads.
namespace cdlat::limits {

// Largest group order a constructor will materialize as a table (n^2 cells).
int order_cap();
void set_order_cap(int cap);

// Hard ceiling for subgroup enumeration.
int subgroup_cap();
void set_subgroup_cap(int cap);

// Default coset limit for presentation enumeration.
int default_max_cosets();
void set_default_max_cosets(int m);

}  // namespace cdlat::limits

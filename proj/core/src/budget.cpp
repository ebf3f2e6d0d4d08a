#include "wedgelab/budget.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace wedgelab {

namespace {

template <typename T>
T scale_value(T v, double f) {
  const double r = std::round(static_cast<double>(v) * f);
  return r < 1.0 ? T{1} : static_cast<T>(r);
}

}  // namespace

Budgets Budgets::defaults() {
  Budgets b;
  if (const char* env = std::getenv("WEDGELAB_BUDGET_SCALE")) {
    char* end = nullptr;
    const double f = std::strtod(env, &end);
    if (end != env && f > 0.0) return b.scaled(f);
  }
  return b;
}

Budgets Budgets::scaled(double factor) const {
  Budgets b = *this;
  b.dense_cutoff = scale_value(dense_cutoff, factor);
  b.max_cosets = scale_value(max_cosets, factor);
  b.search_nodes = scale_value(search_nodes, factor);
  b.search_millis = scale_value(search_millis, factor);
  b.generic_wedge_cap = scale_value(generic_wedge_cap, factor);
  b.hopf_wedge_cap = scale_value(hopf_wedge_cap, factor);
  b.iso_search_cap = scale_value(iso_search_cap, factor);
  b.fingerprint_cap = scale_value(fingerprint_cap, factor);
  b.structured_cap = scale_value(structured_cap, factor);
  return b;
}

}  // namespace wedgelab

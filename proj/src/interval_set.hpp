#pragma once

#include <algorithm>
#include <utility>
#include <vector>

namespace cheeger::detail {

// Sorted, disjoint closed intervals on the real line.
using Intervals = std::vector<std::pair<double, double>>;

inline Intervals canonical(Intervals v) {
  std::sort(v.begin(), v.end());
  Intervals out;
  for (const auto& iv : v) {
    if (iv.second < iv.first) continue;
    if (!out.empty() && iv.first <= out.back().second) {
      out.back().second = std::max(out.back().second, iv.second);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

inline Intervals intersect(const Intervals& a, const Intervals& b) {
  Intervals out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double lo = std::max(a[i].first, b[j].first);
    const double hi = std::min(a[i].second, b[j].second);
    if (lo <= hi) out.emplace_back(lo, hi);
    if (a[i].second < b[j].second) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

inline Intervals unite(const Intervals& a, const Intervals& b) {
  Intervals all = a;
  all.insert(all.end(), b.begin(), b.end());
  return canonical(std::move(all));
}

inline Intervals complement(const Intervals& a, double lo, double hi) {
  Intervals out;
  double cur = lo;
  for (const auto& iv : a) {
    if (iv.first > cur) out.emplace_back(cur, std::min(iv.first, hi));
    cur = std::max(cur, iv.second);
    if (cur >= hi) break;
  }
  if (cur < hi) out.emplace_back(cur, hi);
  return out;
}

}  // namespace cheeger::detail

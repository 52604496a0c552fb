#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "powcol/forest.hpp"

namespace powcol {

inline constexpr int kMaxEnumeratedVertices = 10;

// Tree encoded by a Pruefer code over {0..n-1} of length n-2.
inline Forest decode_pruefer(int n, std::span<const int> code) {
  if (n <= 1) return Forest::from_edges(static_cast<std::size_t>(std::max(n, 0)), {});
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  // Linear-time decoding: ptr walks the smallest leaf candidate.
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int c : code) {
    edges.push_back({leaf, c});
    if (--degree[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back({leaf, n - 1});
  return Forest::from_edges(static_cast<std::size_t>(n), edges);
}

namespace detail {

template <class Visitor>
void extend_pruefer(int n, int max_degree, std::vector<int>& code, std::vector<int>& uses, Visitor& visit) {
  if (static_cast<int>(code.size()) == n - 2) {
    visit(decode_pruefer(n, code));
    return;
  }
  for (int s = 0; s < n; ++s) {
    // A vertex of degree d appears d-1 times in the code.
    if (uses[s] + 2 > max_degree) continue;
    ++uses[s];
    code.push_back(s);
    extend_pruefer(n, max_degree, code, uses, visit);
    code.pop_back();
    --uses[s];
  }
}

}  // namespace detail

// Calls visit(const Forest&) once for every labelled tree on n vertices whose maximum degree
// is at most max_degree, in lexicographic order of Pruefer codes. When prefix is non-empty
// only codes starting with it are visited, which lets callers shard the enumeration.
template <class Visitor>
void enumerate_trees(int n, int max_degree, Visitor&& visit, std::span<const int> prefix = {}) {
  if (n < 1) throw InputError("enumerate_trees: n must be at least 1");
  if (n > kMaxEnumeratedVertices) {
    throw InputError("enumerate_trees: n = " + std::to_string(n) + " exceeds the cap of " +
                     std::to_string(kMaxEnumeratedVertices));
  }
  if (n <= 2) {
    if (!prefix.empty()) return;
    if (n == 2 && max_degree < 1) return;
    visit(decode_pruefer(n, {}));
    return;
  }
  if (static_cast<int>(prefix.size()) > n - 2) return;
  std::vector<int> code(prefix.begin(), prefix.end());
  std::vector<int> uses(n, 0);
  for (int s : code) {
    if (s < 0 || s >= n) throw InputError("enumerate_trees: prefix symbol out of range");
    if (++uses[s] + 1 > max_degree) return;
  }
  code.reserve(n - 2);
  detail::extend_pruefer(n, max_degree, code, uses, visit);
}

inline std::uint64_t count_trees(int n, int max_degree) {
  std::uint64_t count = 0;
  enumerate_trees(n, max_degree, [&](const Forest&) { ++count; });
  return count;
}

}  // namespace powcol

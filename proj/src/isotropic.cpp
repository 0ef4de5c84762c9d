#include "polarscope/isotropic.hpp"

#include <algorithm>

namespace polarscope {

IsotropicGraph::IsotropicGraph(const FormSpec& form, std::vector<Element> flat_points, int cols)
    : cols_(cols), coords_(std::move(flat_points)) {
  const std::size_t n = coords_.size() / cols_;
  pivot_.resize(n);
  std::vector<Element> covectors;
  covectors.reserve(coords_.size());
  for (std::uint32_t i = 0; i < n; ++i) {
    auto p = point(i);
    pivot_[i] = static_cast<int>(std::find_if(p.begin(), p.end(), [](Element x) { return x != 0; }) - p.begin());
    auto c = form.orthogonality_covector(p);
    covectors.insert(covectors.end(), c.begin(), c.end());
  }
  const Field& field = form.field();
  adjacency_.assign(n, {});
  for (std::uint32_t i = 0; i < n; ++i) {
    std::span<const Element> ci(covectors.data() + static_cast<std::size_t>(i) * cols_, cols_);
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (dot(field, ci, point(j)) == 0) {
        adjacency_[i].push_back(j);
        adjacency_[j].push_back(i);
      }
    }
  }
}

bool IsotropicGraph::extends(std::span<const std::uint32_t> rows, std::uint32_t candidate) const {
  // Appending `candidate` to the rows keeps the basis in RREF.
  auto c = point(candidate);
  const int pc = pivot_[candidate];
  for (auto r : rows) {
    if (pivot_[r] >= pc || c[pivot_[r]] != 0 || point(r)[pc] != 0) return false;
  }
  return true;
}

void IsotropicGraph::for_each_subspace(int max_rank,
                                       const std::function<Visit(std::span<const std::uint32_t>)>& visit,
                                       std::span<const char> allowed) const {
  if (max_rank <= 0) return;
  std::vector<std::uint32_t> rows;
  bool stopped = false;

  // candidates: points that can be appended to `rows` now, sorted by index.
  std::function<void(const std::vector<std::uint32_t>&)> descend = [&](const std::vector<std::uint32_t>& candidates) {
    for (std::uint32_t q : candidates) {
      rows.push_back(q);
      const Visit v = visit(rows);
      if (v == Visit::stop) {
        stopped = true;
        rows.pop_back();
        return;
      }
      if (v == Visit::descend && static_cast<int>(rows.size()) < max_rank) {
        std::vector<std::uint32_t> next;
        const auto& adj = adjacency_[q];
        auto a = adj.begin();
        for (std::uint32_t c : candidates) {
          if (c == q) continue;
          while (a != adj.end() && *a < c) ++a;
          if (a == adj.end()) break;
          if (*a != c) continue;
          const int pc = pivot_[c];
          if (pc > pivot_[q] && point(c)[pivot_[q]] == 0 && point(q)[pc] == 0) next.push_back(c);
        }
        if (!next.empty()) descend(next);
      }
      rows.pop_back();
      if (stopped) return;
    }
  };

  std::vector<std::uint32_t> root_rows(1);
  for (std::uint32_t p = 0; p < size() && !stopped; ++p) {
    if (!allowed.empty() && !allowed[p]) continue;
    rows.assign(1, p);
    const Visit v = visit(rows);
    if (v == Visit::stop) return;
    if (v == Visit::skip || max_rank == 1) continue;
    std::vector<std::uint32_t> candidates;
    root_rows[0] = p;
    for (std::uint32_t c : adjacency_[p]) {
      if (!allowed.empty() && !allowed[c]) continue;
      if (extends(root_rows, c)) candidates.push_back(c);
    }
    if (!candidates.empty()) descend(candidates);
  }
}

int IsotropicGraph::max_rank(int cap, std::span<const char> allowed) const {
  int best = 0;
  for_each_subspace(
      cap,
      [&](std::span<const std::uint32_t> rows) {
        best = std::max(best, static_cast<int>(rows.size()));
        return best >= cap ? Visit::stop : Visit::descend;
      },
      allowed);
  return best;
}

}  // namespace polarscope

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "polarscope/forms.hpp"

namespace polarscope {

/// Collinearity graph on a list of singular points of a form.
///
/// Two points are adjacent when they pair to zero, i.e. when the line they span
/// is totally singular. Totally singular subspaces are then cliques, and
/// `for_each_subspace` walks them in a form that reaches each subspace exactly
/// once: a subspace with RREF basis rows r_0..r_k (each row is itself a
/// normalized singular point) is reached only from the subspace spanned by
/// r_0..r_{k-1}, by appending r_k.
class IsotropicGraph {
 public:
  enum class Visit { descend, skip, stop };

  /// `points` must be normalized singular vectors of `form`, pairwise distinct.
  IsotropicGraph(const FormSpec& form, std::vector<Element> flat_points, int cols);

  std::size_t size() const { return pivot_.size(); }
  int cols() const { return cols_; }
  std::span<const Element> point(std::uint32_t i) const {
    return {coords_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)};
  }
  std::span<const std::uint32_t> neighbours(std::uint32_t i) const { return adjacency_[i]; }

  /// Visits every totally singular subspace of rank 1..max_rank (among points
  /// with allowed[i] != 0, or all points when `allowed` is empty). The visitor
  /// receives the point indices of the RREF basis rows. Returning `skip` prunes
  /// extensions of that subspace; `stop` ends the walk.
  void for_each_subspace(int max_rank, const std::function<Visit(std::span<const std::uint32_t>)>& visit,
                         std::span<const char> allowed = {}) const;

  /// Largest rank of a totally singular subspace, stopping early once `cap` is reached.
  int max_rank(int cap, std::span<const char> allowed = {}) const;

 private:
  bool extends(std::span<const std::uint32_t> rows, std::uint32_t candidate) const;

  int cols_;
  std::vector<Element> coords_;
  std::vector<int> pivot_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

}  // namespace polarscope

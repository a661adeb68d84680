#include "lctkit/ledger/universe.hpp"

#include <algorithm>
#include <optional>

#include "lctkit/core/error.hpp"

namespace lctkit {

namespace {

/// Cells of [0,side-1]^m in lexicographic order, flattened with the last
/// coordinate fastest.
struct Grid {
  std::size_t dims;
  std::uint32_t side;
  std::size_t cells = 1;

  Grid(std::size_t m, std::uint32_t s) : dims(m), side(s) {
    for (std::size_t i = 0; i < m; ++i) cells *= s;
  }

  /// Flattened index of the predecessor along coordinate k, if any.
  std::optional<std::size_t> predecessor(std::size_t cell, std::size_t k) const {
    std::size_t stride = 1;
    for (std::size_t j = dims; j-- > k + 1;) stride *= side;
    if ((cell / stride) % side == 0) return std::nullopt;
    return cell - stride;
  }
};

void extend(const Grid& grid, std::size_t cell, std::vector<std::uint32_t>& heights,
            const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  if (cell == grid.cells) {
    visit(heights);
    return;
  }
  std::uint32_t cap = grid.side;
  for (std::size_t k = 0; k < grid.dims; ++k)
    if (auto p = grid.predecessor(cell, k)) cap = std::min(cap, heights[*p]);
  for (std::uint32_t h = 0; h <= cap; ++h) {
    heights[cell] = h;
    extend(grid, cell + 1, heights, visit);
  }
  heights[cell] = 0;
}

void check_size(std::size_t n, std::uint32_t side) {
  if (n == 0) throw DomainError("universe needs n >= 1");
  if (side == 0) throw DomainError("universe needs a positive box bound");
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    size *= side;
    if (size > 1024) throw LimitExceeded("universe box too large to enumerate");
  }
}

/// Minimal elements of [0,limit]^n outside the down-set.
MonomialIdeal complement_ideal(std::size_t n, std::uint32_t side, std::uint32_t limit,
                               const std::vector<std::uint32_t>& heights) {
  auto inside = [&](const ExponentVector& e) {
    std::size_t cell = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (e[i] >= side) return false;
      cell = cell * side + e[i];
    }
    return e[n - 1] < heights[cell];
  };
  std::vector<ExponentVector> gens;
  ExponentVector e(n);
  while (true) {
    if (!inside(e)) {
      bool minimal = true;
      for (std::size_t i = 0; i < n && minimal; ++i) {
        if (e[i] == 0) continue;
        ExponentVector below = e;
        --below[i];
        minimal = inside(below);
      }
      if (minimal) gens.push_back(e);
    }
    std::size_t i = n;
    while (i-- > 0) {
      if (++e[i] <= limit) break;
      e[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return MonomialIdeal::minimalize(gens);
}

}  // namespace

void for_each_down_set(std::size_t n, std::uint32_t side,
                       const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  check_size(n, side);
  const Grid grid(n - 1, side);
  std::vector<std::uint32_t> heights(grid.cells, 0);
  extend(grid, 0, heights, visit);
}

std::vector<MonomialIdeal> zero_dimensional_universe(std::size_t n, std::uint32_t box) {
  std::vector<MonomialIdeal> out;
  for_each_down_set(n, box + 1, [&](const std::vector<std::uint32_t>& heights) {
    if (heights.front() == 0) return;  // empty staircase
    out.push_back(complement_ideal(n, box + 1, box + 1, heights));
  });
  return out;
}

std::vector<MonomialIdeal> antichain_universe(std::size_t n, std::uint32_t box) {
  std::vector<MonomialIdeal> out;
  for_each_down_set(n, box + 1, [&](const std::vector<std::uint32_t>& heights) {
    if (heights.back() == box + 1) return;  // the whole box: no generator inside
    out.push_back(complement_ideal(n, box + 1, box, heights));
  });
  return out;
}

}  // namespace lctkit

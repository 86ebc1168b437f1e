#include "spirit/parametric/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace spirit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double guarded(const std::function<double(std::span<const double>)>& f,
               std::span<const double> x) {
  const double v = f(x);
  return std::isfinite(v) ? v : kInf;
}

double simplex_diameter(const std::vector<std::vector<double>>& verts) {
  double d = 0.0;
  for (std::size_t i = 1; i < verts.size(); ++i)
    for (std::size_t c = 0; c < verts[0].size(); ++c)
      d = std::max(d, std::fabs(verts[i][c] - verts[0][c]));
  return d;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                             std::span<const double> start, const NelderMeadOptions& opts) {
  const std::size_t dim = start.size();
  std::vector<std::vector<double>> verts(dim + 1, std::vector<double>(start.begin(), start.end()));
  for (std::size_t i = 0; i < dim; ++i)
    verts[i + 1][i] = start[i] != 0.0 ? start[i] * 1.05 : 2.5e-4;

  std::vector<double> cost(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) cost[i] = guarded(objective, verts[i]);

  std::vector<std::size_t> order(dim + 1);
  auto sort_vertices = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return cost[a] < cost[b]; });
    std::vector<std::vector<double>> v2(dim + 1);
    std::vector<double> c2(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) {
      v2[i] = std::move(verts[order[i]]);
      c2[i] = cost[order[i]];
    }
    verts = std::move(v2);
    cost = std::move(c2);
  };

  std::vector<double> centroid(dim), candidate(dim);
  NelderMeadResult res;
  int iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    sort_vertices();
    if (simplex_diameter(verts) < opts.simplex_tol) {
      res.converged = true;
      break;
    }

    for (std::size_t c = 0; c < dim; ++c) {
      double acc = 0.0;
      for (std::size_t i = 0; i < dim; ++i) acc += verts[i][c];
      centroid[c] = acc / static_cast<double>(dim);
    }
    auto& worst = verts[dim];

    for (std::size_t c = 0; c < dim; ++c)
      candidate[c] = centroid[c] + opts.reflection * (centroid[c] - worst[c]);
    const double f_reflect = guarded(objective, candidate);

    if (f_reflect < cost[0]) {
      std::vector<double> expanded(dim);
      for (std::size_t c = 0; c < dim; ++c)
        expanded[c] = centroid[c] + opts.expansion * (candidate[c] - centroid[c]);
      const double f_expand = guarded(objective, expanded);
      if (f_expand < f_reflect) {
        worst = std::move(expanded);
        cost[dim] = f_expand;
      } else {
        worst = candidate;
        cost[dim] = f_reflect;
      }
    } else if (f_reflect < cost[dim - 1]) {
      worst = candidate;
      cost[dim] = f_reflect;
    } else {
      std::vector<double> contracted(dim);
      const bool outside = f_reflect < cost[dim];
      const auto& toward = outside ? candidate : worst;
      for (std::size_t c = 0; c < dim; ++c)
        contracted[c] = centroid[c] + opts.contraction * (toward[c] - centroid[c]);
      const double f_contract = guarded(objective, contracted);
      if (f_contract < (outside ? f_reflect : cost[dim])) {
        worst = std::move(contracted);
        cost[dim] = f_contract;
      } else {
        for (std::size_t i = 1; i <= dim; ++i) {
          for (std::size_t c = 0; c < dim; ++c)
            verts[i][c] = verts[0][c] + opts.shrink * (verts[i][c] - verts[0][c]);
          cost[i] = guarded(objective, verts[i]);
        }
      }
    }
  }

  sort_vertices();
  res.x = verts[0];
  res.cost = cost[0];
  res.iterations = iter;
  return res;
}

}  // namespace spirit

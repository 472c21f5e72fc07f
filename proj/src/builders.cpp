#include "fixlab/builders.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "fixlab/errors.hpp"

namespace fixlab {

std::pair<OrderedMetricSpace, MapFamily> build_example23(int N) {
  if (N < 1) throw InvalidInstance("truncation size must be at least 1");
  OrderedMetricSpace space;
  std::vector<Rational> values;
  for (int n = 1; n <= N; ++n) {
    Rational v = Rational(n) * (n + 1) / 2;
    values.push_back(v);
    space.points.push_back(to_string(v));
  }
  space.dist.assign(N, std::vector<Rational>(N));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      space.dist[a][b] = abs(values[a] - values[b]);
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) space.strict_order.insert({a, b});

  MapFamily family;
  family.maps.resize(2);
  for (int x = 0; x < N; ++x) {
    family.maps[0].push_back({0});
    if (x == 0)
      family.maps[1].push_back({0});
    else if (x == 1)
      family.maps[1].push_back({0});  // {x_1, x_{n-1}} collapses at n = 2
    else
      family.maps[1].push_back({0, x - 1});
  }
  return {std::move(space), std::move(family)};
}

OrderedMetricSpace generate_instance(std::uint64_t seed, int n,
                                     double order_density) {
  if (n < 1) throw InvalidInstance("point count must be at least 1");
  std::mt19937_64 rng(seed);
  OrderedMetricSpace space;
  for (int i = 0; i < n; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "p%02d", i);
    space.points.emplace_back(buf);
  }

  // random connected graph: a random spanning tree plus extra edges,
  // positive rational weights, then all-pairs shortest-path completion
  std::uniform_int_distribution<int> num(1, 60);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const Rational none = -1;
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n, none));
  for (int i = 0; i < n; ++i) w[i][i] = 0;
  auto add_edge = [&](int a, int b) {
    Rational weight(num(rng), den(rng));
    if (w[a][b] == none || weight < w[a][b]) w[a][b] = w[b][a] = weight;
  };
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    add_edge(i, parent(rng));
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng) < 0.3) add_edge(a, b);

  auto dist = w;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (dist[i][k] == none || dist[k][j] == none) continue;
        Rational via = dist[i][k] + dist[k][j];
        if (dist[i][j] == none || via < dist[i][j]) dist[i][j] = via;
      }
  space.dist = std::move(dist);

  // strict order: thinned pairs of a random linear order, transitively closed
  std::vector<int> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (rank[a] < rank[b] && coin(rng) < order_density) rel[a][b] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (rel[a][b]) space.strict_order.insert({a, b});

  return space;
}

MapFamily generate_family(std::uint64_t seed, const OrderedMetricSpace& space,
                          int m) {
  if (m < 1) throw InvalidInstance("family size must be at least 1");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  const int n = space.size();
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  MapFamily family;
  family.maps.assign(m, {});
  for (int i = 0; i < m; ++i)
    for (int x = 0; x < n; ++x) {
      std::vector<PointIndex> values{pick(rng)};
      while (static_cast<int>(values.size()) < n && coin(rng) < 0.25)
        values.push_back(pick(rng));
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
      family.maps[i].push_back(std::move(values));
    }
  return family;
}

}  // namespace fixlab

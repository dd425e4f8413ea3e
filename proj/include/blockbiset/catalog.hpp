#pragma once

#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "permgroup.hpp"

/**
 * @file catalog.hpp
 * @brief Built-in test groups and the GroupSpec JSON input format.
 *
 * Input format:
 *   { "name": "A5", "degree": 5,
 *     "generators": [[1,2,0,3,4], [0,1,3,4,2]],
 *     "primes": [2, 3, 5] }
 * Generators are image lists on 0..degree-1. "primes" is optional and
 * defaults to every prime divisor of |G|.
 */

namespace blockbiset {

struct GroupSpec {
  std::string name;
  int degree = 0;
  std::vector<Perm> generators;
  std::vector<int> primes;  // empty: every prime divisor of |G|

  Group build(std::size_t max_order = kDefaultMaxOrder) const
  {
    return group_from_generators(degree, generators, max_order);
  }

  /// The requested primes, or all prime divisors of |G| when none were given.
  std::vector<int> resolved_primes(const Group& G) const
  {
    return primes.empty() ? prime_divisors(G.order()) : primes;
  }
};

namespace detail {

/// SL(2,3) on the 8 nonzero vectors (a, b) of F_3^2, indexed 3a + b - 1.
inline Perm sl23_matrix(int a, int b, int c, int d)
{
  std::vector<int> im(8);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      if (x == 0 && y == 0)
        continue;
      int nx = ((a * x + b * y) % 3 + 3) % 3;
      int ny = ((c * x + d * y) % 3 + 3) % 3;
      im[3 * x + y - 1] = 3 * nx + ny - 1;
    }
  return Perm(std::move(im));
}

}  // namespace detail

/// The fixed list of small groups used by the tests and the CLI.
inline const std::vector<GroupSpec>& catalog()
{
  static const std::vector<GroupSpec> groups = [] {
    auto cyc = [](int n, std::vector<std::vector<int>> c) { return Perm::from_cycles(n, c); };
    std::vector<GroupSpec> g;
    g.push_back({"C2", 2, {cyc(2, {{0, 1}})}, {}});
    g.push_back({"C3", 3, {cyc(3, {{0, 1, 2}})}, {}});
    g.push_back({"C9", 9, {cyc(9, {{0, 1, 2, 3, 4, 5, 6, 7, 8}})}, {}});
    g.push_back({"S3", 3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})}, {}});
    g.push_back({"D8", 4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 2}})}, {}});
    // regular representation on 1,-1,i,-i,j,-j,k,-k
    g.push_back({"Q8", 8,
                 {Perm({2, 3, 1, 0, 6, 7, 5, 4}), Perm({4, 5, 7, 6, 1, 0, 2, 3})},
                 {}});
    g.push_back({"A4", 4, {cyc(4, {{0, 1, 2}}), cyc(4, {{0, 1}, {2, 3}})}, {}});
    g.push_back({"S4", 4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}, {}});
    g.push_back({"A5", 5, {cyc(5, {{0, 1, 2}}), cyc(5, {{2, 3, 4}})}, {}});
    g.push_back({"S5", 5, {cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})}, {}});
    g.push_back({"SL(2,3)", 8, {detail::sl23_matrix(1, 1, 0, 1), detail::sl23_matrix(0, -1, 1, 0)}, {}});
    g.push_back({"D12", 6, {cyc(6, {{0, 1, 2, 3, 4, 5}}), cyc(6, {{1, 5}, {2, 4}})}, {}});
    g.push_back({"C3xS3", 6, {cyc(6, {{0, 1, 2}}), cyc(6, {{3, 4, 5}}), cyc(6, {{3, 4}})}, {}});
    return g;
  }();
  return groups;
}

inline const GroupSpec* find_in_catalog(const std::string& name)
{
  for (const auto& g : catalog())
    if (g.name == name)
      return &g;
  return nullptr;
}

inline GroupSpec group_spec_from_json(const nlohmann::json& j)
{
  try {
    GroupSpec spec;
    spec.name = j.value("name", std::string("unnamed"));
    spec.degree = j.at("degree").get<int>();
    if (spec.degree <= 0)
      throw ParseError("degree must be positive");
    for (const auto& g : j.at("generators")) {
      auto images = g.get<std::vector<int>>();
      if (static_cast<int>(images.size()) != spec.degree)
        throw ParseError("generator length differs from degree");
      spec.generators.emplace_back(std::move(images));
    }
    if (j.contains("primes"))
      for (int p : j.at("primes").get<std::vector<int>>()) {
        if (!is_prime(p))
          throw ParseError("not a prime: " + std::to_string(p));
        spec.primes.push_back(p);
      }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed group spec: ") + e.what());
  } catch (const InvalidPermutation& e) {
    throw ParseError(std::string("malformed generator: ") + e.what());
  }
}

inline GroupSpec parse_group_spec(const std::string& text)
{
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return group_spec_from_json(j);
}

/// "catalog:NAME" or a path to a GroupSpec JSON file.
inline GroupSpec load_group_spec(const std::string& source)
{
  const std::string prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) {
    const GroupSpec* g = find_in_catalog(source.substr(prefix.size()));
    if (!g)
      throw ParseError("unknown catalog group: " + source.substr(prefix.size()));
    return *g;
  }
  std::ifstream in(source);
  if (!in)
    throw ParseError("cannot read " + source);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_group_spec(text);
}

/// Explicit value if positive, else $BLOCKBISET_MAX_ORDER, else the default.
inline std::size_t resolve_max_order(long explicit_value)
{
  if (explicit_value > 0)
    return static_cast<std::size_t>(explicit_value);
  if (const char* env = std::getenv("BLOCKBISET_MAX_ORDER")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return kDefaultMaxOrder;
}

}  // namespace blockbiset

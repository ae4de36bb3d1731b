// Acceptance gate: every structural property of the wave/fluid correspondence
// the library claims, checked end to end at pinned tolerances.  One verdict
// line per criterion; details for the member checks are indented beneath it.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "madlab/verify.hpp"

using namespace madlab;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Criterion {
  int index;
  std::string title;
  std::vector<CheckResult> results;
  double seconds = 0.0;
  double time_budget = 0.0;  // 0 = no cap
};

bool criterion_pass(const Criterion& c) {
  for (const auto& r : c.results)
    if (!r.pass) return false;
  if (c.time_budget > 0.0 && c.seconds > c.time_budget) return false;
  return !c.results.empty();
}

template <typename Fn>
Criterion timed(int index, const std::string& title, double budget, Fn&& fn) {
  Criterion c;
  c.index = index;
  c.title = title;
  c.time_budget = budget;
  auto t0 = std::chrono::steady_clock::now();
  c.results = fn();
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

std::vector<CheckResult> one(CheckResult r) { return {std::move(r)}; }

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back(timed(1, "momentum map generates the algebra action", 10.0,
                           [] { return one(momentum_map_suite(kSeed)); }));
  criteria.push_back(timed(2, "momentum map is equivariant (and the flipped bracket fails)",
                           0.0, [] { return equivariance_suite(kSeed); }));
  criteria.push_back(timed(3, "wave-to-fluid map is a Poisson map", 0.0,
                           [] { return one(poisson_map_suite(kSeed)); }));
  criteria.push_back(timed(4, "wave flow pushes forward to the fluid flow", 0.0,
                           [] { return intertwining_suite(kSeed); }));
  criteria.push_back(timed(5, "independent evolutions agree through the map", 60.0,
                           [] { return one(flow_equivalence_suite()); }));
  criteria.push_back(timed(6, "Hamiltonians correspond under the map", 0.0,
                           [] { return one(hamiltonian_correspondence_suite(kSeed)); }));
  criteria.push_back(timed(7, "invariants are conserved along both flows", 0.0,
                           [] { return conservation_suite(); }));
  criteria.push_back(timed(8, "bracket algebra: antisymmetry, Jacobi, Lie-Poisson", 0.0,
                           [] { return bracket_algebra_suite(kSeed); }));
  criteria.push_back(timed(9, "discretization: spectral exactness and integrator orders",
                           0.0, [] { return numerics_suite(); }));
  criteria.push_back(timed(10, "group action: unitary, homomorphic, differentiable", 0.0,
                           [] { return group_action_suite(kSeed); }));

  int failures = 0;
  for (const auto& c : criteria) {
    bool ok = criterion_pass(c);
    if (!ok) ++failures;
    std::printf("criterion %2d  %-58s %s  (%.2f s%s)\n", c.index, c.title.c_str(),
                ok ? "PASS" : "FAIL", c.seconds,
                c.time_budget > 0.0
                    ? (", budget " + std::to_string((int)c.time_budget) + " s").c_str()
                    : "");
    for (const auto& r : c.results)
      std::printf("    %s\n", format_check_line(r).c_str());
    if (c.time_budget > 0.0 && c.seconds > c.time_budget)
      std::printf("    time budget exceeded: %.2f s > %.0f s\n", c.seconds,
                  c.time_budget);
  }

  std::printf("\n%d of %zu criteria failed\n", failures, criteria.size());
  return failures;
}

#include "mixorient/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mixorient/errors.hpp"

namespace mixorient {
namespace {

long long total(const std::vector<int>& xs) { return std::accumulate(xs.begin(), xs.end(), 0LL); }

PhasePlan plan_from(int r, std::vector<int> weights, const BalancedPartition& split) {
  // Hand each phase to part A while A still holds a copy of its weight.
  std::vector<int> remaining = split.part_a;
  PhasePlan plan;
  plan.r = r;
  for (int i = 1; i <= r; ++i) {
    const int w = weights[static_cast<std::size_t>(i - 1)];
    auto it = std::find(remaining.begin(), remaining.end(), w);
    if (it != remaining.end()) {
      remaining.erase(it);
      plan.out_phases.push_back(i);
    } else {
      plan.in_phases.push_back(i);
    }
  }
  plan.weights = std::move(weights);
  return plan;
}

}  // namespace

long long BalancedPartition::sum_a() const { return total(part_a); }
long long BalancedPartition::sum_b() const { return total(part_b); }
long long BalancedPartition::discrepancy() const {
  const long long d = sum_a() - sum_b();
  return d < 0 ? -d : d;
}

BalancedPartition partition_odds(int n) {
  if (n < 1) throw InvalidValue("partition_odds needs n >= 1, got " + std::to_string(n));
  BalancedPartition p;
  if (n == 2) {
    p.part_a = {1};
    p.part_b = {3};
    return p;
  }
  static constexpr int kLeftover[4] = {0, 1, 6, 3};
  const int base = kLeftover[n % 4];
  switch (base) {
    case 1:
      p.part_a = {1};
      break;
    case 6:
      p.part_a = {1, 3, 5, 9};
      p.part_b = {7, 11};
      break;
    case 3:
      p.part_a = {1, 3};
      p.part_b = {5};
      break;
    default:
      break;
  }
  // Odd number i is 2i-1; blocks cover indices base+1 .. n.
  for (int first = base + 1; first + 3 <= n; first += 4) {
    const int a1 = 2 * first - 1;
    p.part_a.push_back(a1);
    p.part_b.push_back(a1 + 2);
    p.part_b.push_back(a1 + 4);
    p.part_a.push_back(a1 + 6);
  }
  return p;
}

BalancedPartition partition_odds_plus(int n, int copies, int value) {
  if (n < 1) throw InvalidValue("partition_odds_plus needs n >= 1, got " + std::to_string(n));
  if (copies < 0) throw InvalidValue("negative copy count");
  if (value != 2 * n - 1 && value != 2 * n) {
    throw InvalidValue("value must be 2n-1 or 2n, got " + std::to_string(value));
  }
  if (copies % 2 == 0) {
    BalancedPartition p = partition_odds(n);
    p.part_a.insert(p.part_a.end(), static_cast<std::size_t>(copies / 2), value);
    p.part_b.insert(p.part_b.end(), static_cast<std::size_t>(copies / 2), value);
    return p;
  }
  // Odd copy count: 2n-1 joins the copies so both groups split evenly.
  // X gets the heavier half of {1, ..., 2n-3}, Q the lighter half of the
  // copies, then A = X + Q and B = Y + P.
  std::vector<int> x, y;
  if (n >= 2) {
    BalancedPartition rest = partition_odds(n - 1);
    x = std::move(rest.part_a);
    y = std::move(rest.part_b);
    if (total(x) < total(y)) std::swap(x, y);
  }
  // Copies plus one 2n-1: P takes (copies+1)/2 copies of value, Q takes the
  // remaining copies and the 2n-1.
  const auto half = static_cast<std::size_t>((copies + 1) / 2);
  std::vector<int> pp(half, value);
  std::vector<int> qq(half - 1, value);
  qq.push_back(2 * n - 1);
  BalancedPartition p;
  p.part_a = std::move(x);
  p.part_a.insert(p.part_a.end(), qq.begin(), qq.end());
  p.part_b = std::move(y);
  p.part_b.insert(p.part_b.end(), pp.begin(), pp.end());
  return p;
}

bool PhasePlan::is_out(int phase) const {
  return std::find(out_phases.begin(), out_phases.end(), phase) != out_phases.end();
}

long long PhasePlan::out_weight() const {
  long long s = 0;
  for (int i : out_phases) s += weights[static_cast<std::size_t>(i - 1)];
  return s;
}

long long PhasePlan::in_weight() const {
  long long s = 0;
  for (int i : in_phases) s += weights[static_cast<std::size_t>(i - 1)];
  return s;
}

PhasePlan phase_plan(int r) {
  std::vector<int> weights;
  for (int i = 1; i <= r; ++i) weights.push_back(2 * i - 1);
  return plan_from(r, std::move(weights), partition_odds(r));
}

PhasePlan phase_plan_eta(int r, int eta) {
  if (r < 1) throw InvalidValue("phase_plan_eta needs r >= 1");
  if (eta < 3 || eta > 2 * r + 1) {
    throw EtaOutOfRange("eta " + std::to_string(eta) + " outside [3, " + std::to_string(2 * r + 1) +
                        "]");
  }
  const int m = (eta - 1) / 2;
  std::vector<int> weights;
  for (int i = 1; i <= r; ++i) weights.push_back(std::min(eta, 2 * i + 1) - 2);
  // Weights are 1, 3, ..., 2m-1 followed by r-m copies of eta-2.
  return plan_from(r, std::move(weights), partition_odds_plus(m, r - m, eta - 2));
}

}  // namespace mixorient

#pragma once

#include <vector>

namespace mixorient {

/// Two-way split of a multiset of positive integers.
struct BalancedPartition {
  std::vector<int> part_a;
  std::vector<int> part_b;

  long long sum_a() const;
  long long sum_b() const;
  long long discrepancy() const;
};

/// Splits {1, 3, ..., 2n-1} with discrepancy at most 1 (at most 2 when n = 2).
///
/// Four consecutive odds a1 < a2 < a3 < a4 satisfy a1 + a4 = a2 + a3, so blocks
/// of four are peeled off from the top, {a1, a4} going to part A. The 0, 1, 6
/// or 3 smallest odds that remain (for n mod 4 = 0, 1, 2, 3) use the fixed
/// splits (), ({1}), ({1,3,5,9},{7,11}) and ({1,3},{5}).
BalancedPartition partition_odds(int n);

/// Splits {1, 3, ..., 2n-1} plus `copies` copies of `value` (which must be
/// 2n-1 or 2n) with discrepancy at most 2. Throws InvalidValue otherwise.
BalancedPartition partition_odds_plus(int n, int copies, int value);

/// Which phases run the out-first engine (A) and which the in-first one (B).
/// Phases are numbered 1..r; `weights[i-1]` is the weight of phase i.
struct PhasePlan {
  int r = 0;
  std::vector<int> out_phases;
  std::vector<int> in_phases;
  std::vector<int> weights;

  bool is_out(int phase) const;
  long long out_weight() const;
  long long in_weight() const;
};

/// Phase weights 2i-1, split by partition_odds(r).
PhasePlan phase_plan(int r);

/// Phase weights min(eta, 2i+1) - 2, split by partition_odds_plus. Throws
/// EtaOutOfRange unless 3 <= eta <= 2r+1.
PhasePlan phase_plan_eta(int r, int eta);

}  // namespace mixorient

#pragma once

#include "qproj/laurent.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qproj {

/// Left circular fence poset of an odd shape (a1, ..., am).
///
/// Labels: 0 is the extra bottom vertex; 1, 2, ... follow the zig-zag path
/// (a1 - 1 steps up, a2 down, a3 up, ..., am - 1 up, starting from vertex 1);
/// the last label is the vertex tied to the end of the path by the double
/// arrow.  0 lies below vertex 1 and below the vertex that follows the valley
/// at the end of the a_{m-1} descent.  The white pair is that valley and its
/// predecessor on the path.
struct CircularFencePoset {
  std::vector<long> shape;
  int vertex_count = 0;
  /// Cover relations (x, y) meaning x < y.
  std::vector<std::pair<int, int>> covers;
  /// The white pair, constrained when 0 is not in the ideal.
  int white_low = 0, white_high = 0;
  /// End of the path and the vertex joined to it by the double arrow.
  int top = 0, tied = 0;
  /// When the double arrow is only enforced for ideals containing 0: this
  /// happens when am = 1, where the end of the path is the white valley.
  bool tie_needs_zero = false;
};

/// Throws BadShape unless m is odd, m >= 3 and every ai >= 1.
CircularFencePoset build_fence(const std::vector<long>& shape);

using Ideal = std::vector<int>;

/// Admissibility of a sorted label set (down-closed and the white / tie
/// conditions).
bool is_admissible(const CircularFencePoset& p, const Ideal& I);

/// All admissible ideals, ordered by size then lexicographically; found by a
/// depth-first search over down-sets in a linear extension order.
std::vector<Ideal> admissible_ideals(const CircularFencePoset& p);
/// The same list by filtering all 2^n subsets (test oracle; n <= 24).
std::vector<Ideal> admissible_ideals_bruteforce(const CircularFencePoset& p);

/// Sum of q^|I| over the admissible ideals.
LaurentPoly generating_function(const CircularFencePoset& p);

/// "{0,2,3}".
std::string ideal_to_string(const Ideal& I);

/// Split of the admissible ideals by whether they contain 0, compared with
/// the entries of R^a1 J ... R^am J = q^min(0,a1) t^((m-1)/2) [[qU, U'], [qV, V']]:
/// ideals containing 0 count q U and the others V'.
struct FenceSplitReport {
  LaurentPoly with_zero, without_zero;
  LaurentPoly qU, V_prev;
  bool ok = false;
};
FenceSplitReport fence_split(const CircularFencePoset& p);

/// Generating function against t^(-(m-1)/2) Tr(R^a1 J ... R^am J).
struct FenceTraceReport {
  std::vector<long> shape;
  LaurentPoly generating_function;
  LaurentPoly trace;
  LaurentPoly normalized_trace;
  bool ok = false;
};
FenceTraceReport compare_with_trace(const std::vector<long>& shape);

/// All odd shapes (m >= 3) with sum of digits <= max_sum.
std::vector<std::vector<long>> odd_shapes(long max_sum);

}  // namespace qproj

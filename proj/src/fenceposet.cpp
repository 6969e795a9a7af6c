#include "qproj/fenceposet.hpp"

#include "qproj/error.hpp"
#include "qproj/projective.hpp"
#include "qproj/qgroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace qproj {

CircularFencePoset build_fence(const std::vector<long>& shape) {
  const std::size_t m = shape.size();
  if (m < 3 || m % 2 == 0)
    throw BadShape("fence shape needs an odd number m >= 3 of digits, got m = " + std::to_string(m));
  for (long a : shape)
    if (a < 1) throw BadShape("fence digit " + std::to_string(a) + " < 1");
  CircularFencePoset p;
  p.shape = shape;
  std::vector<long> segs(shape.begin(), shape.end());
  segs.front() -= 1;
  segs.back() -= 1;
  std::vector<int> path{1};
  int next = 2;
  std::size_t valley = 0;
  for (std::size_t i = 0; i < m; ++i) {
    bool up = i % 2 == 0;
    for (long s = 0; s < segs[i]; ++s) {
      int v = next++;
      p.covers.emplace_back(up ? path.back() : v, up ? v : path.back());
      path.push_back(v);
    }
    if (i + 2 == m) valley = path.size() - 1;
  }
  p.top = path.back();
  p.tied = next++;
  p.vertex_count = next;
  p.covers.emplace_back(p.top, p.tied);
  p.covers.emplace_back(0, path.front());
  int after_valley = valley + 1 < path.size() ? path[valley + 1] : p.tied;
  p.covers.emplace_back(0, after_valley);
  p.white_low = path[valley];
  p.white_high = path[valley - 1];
  p.tie_needs_zero = shape.back() == 1;
  return p;
}

namespace {

bool side_conditions(const CircularFencePoset& p, const std::vector<char>& in) {
  if (!in[0] && in[p.white_low] != in[p.white_high]) return false;
  bool tie_active = !p.tie_needs_zero || in[0];
  if (tie_active && in[p.top] != in[p.tied]) return false;
  return true;
}

bool down_closed(const CircularFencePoset& p, const std::vector<char>& in) {
  return std::all_of(p.covers.begin(), p.covers.end(),
                     [&](const auto& c) { return !in[c.second] || in[c.first]; });
}

void canonical_order(std::vector<Ideal>& ideals) {
  std::sort(ideals.begin(), ideals.end(), [](const Ideal& x, const Ideal& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
}

}  // namespace

bool is_admissible(const CircularFencePoset& p, const Ideal& I) {
  std::vector<char> in(static_cast<std::size_t>(p.vertex_count), 0);
  for (int v : I) {
    if (v < 0 || v >= p.vertex_count) return false;
    in[v] = 1;
  }
  return down_closed(p, in) && side_conditions(p, in);
}

std::vector<Ideal> admissible_ideals(const CircularFencePoset& p) {
  const int n = p.vertex_count;
  std::vector<std::vector<int>> below(n);
  std::vector<int> indeg(n, 0);
  for (auto [x, y] : p.covers) {
    below[y].push_back(x);
    ++indeg[y];
  }
  // Kahn's algorithm, smallest label first, for a deterministic extension.
  std::vector<std::vector<int>> above(n);
  for (auto [x, y] : p.covers) above[x].push_back(y);
  std::set<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.insert(v);
  std::vector<int> order;
  while (!ready.empty()) {
    int v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (int y : above[v])
      if (--indeg[y] == 0) ready.insert(y);
  }
  std::vector<Ideal> out;
  std::vector<char> in(n, 0);
  std::function<void(std::size_t)> dfs = [&](std::size_t k) {
    if (k == order.size()) {
      if (side_conditions(p, in)) {
        Ideal I;
        for (int v = 0; v < n; ++v)
          if (in[v]) I.push_back(v);
        out.push_back(std::move(I));
      }
      return;
    }
    int v = order[k];
    dfs(k + 1);
    if (std::all_of(below[v].begin(), below[v].end(), [&](int x) { return in[x] != 0; })) {
      in[v] = 1;
      dfs(k + 1);
      in[v] = 0;
    }
  };
  dfs(0);
  canonical_order(out);
  return out;
}

std::vector<Ideal> admissible_ideals_bruteforce(const CircularFencePoset& p) {
  const int n = p.vertex_count;
  if (n > 24) throw OutOfRange("brute-force enumeration limited to 24 vertices");
  std::vector<Ideal> out;
  std::vector<char> in(n);
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    for (int v = 0; v < n; ++v) in[v] = (mask >> v) & 1;
    if (!down_closed(p, in) || !side_conditions(p, in)) continue;
    Ideal I;
    for (int v = 0; v < n; ++v)
      if (in[v]) I.push_back(v);
    out.push_back(std::move(I));
  }
  canonical_order(out);
  return out;
}

namespace {

LaurentPoly size_polynomial(const std::vector<Ideal>& ideals, int n) {
  std::vector<Integer> c(static_cast<std::size_t>(n + 1), 0);
  for (const auto& I : ideals) c[I.size()] += 1;
  return LaurentPoly::from_coeffs(0, std::move(c));
}

GroupWord fence_word(const std::vector<long>& shape) {
  std::vector<Letter> ls;
  for (long a : shape) {
    ls.push_back({Gen::R, a});
    ls.push_back({Gen::J, 1});
  }
  return GroupWord(std::move(ls));
}

// Entries of R^a1 J ... R^am J divided by q^min(0,a1) t^((m-1)/2).
QMatrix normalized_fence_matrix(const std::vector<long>& shape) {
  QMatrix M = eval_word(fence_word(shape));
  LambdaUnit u{1, std::min(0L, shape.front()), static_cast<long>((shape.size() - 1) / 2)};
  LambdaUnit rest = M.scale * u.inverse();
  return {apply_unit(rest, M.a), apply_unit(rest, M.b), apply_unit(rest, M.c), apply_unit(rest, M.d)};
}

}  // namespace

LaurentPoly generating_function(const CircularFencePoset& p) {
  return size_polynomial(admissible_ideals(p), p.vertex_count);
}

std::string ideal_to_string(const Ideal& I) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < I.size(); ++i) os << (i ? "," : "") << I[i];
  os << '}';
  return os.str();
}

FenceSplitReport fence_split(const CircularFencePoset& p) {
  FenceSplitReport r;
  std::vector<Ideal> with, without;
  for (auto& I : admissible_ideals(p)) (!I.empty() && I.front() == 0 ? with : without).push_back(I);
  r.with_zero = size_polynomial(with, p.vertex_count);
  r.without_zero = size_polynomial(without, p.vertex_count);
  QMatrix M = normalized_fence_matrix(p.shape);
  r.qU = M.a;
  r.V_prev = M.d;
  r.ok = r.with_zero == r.qU && r.without_zero == r.V_prev;
  return r;
}

FenceTraceReport compare_with_trace(const std::vector<long>& shape) {
  FenceTraceReport r;
  r.shape = shape;
  r.generating_function = generating_function(build_fence(shape));
  QMatrix M = eval_word(fence_word(shape));
  r.trace = apply_unit(M.scale, M.a + M.d);
  LambdaUnit t_power{1, 0, static_cast<long>((shape.size() - 1) / 2)};
  r.normalized_trace = apply_unit(t_power.inverse(), r.trace);
  r.ok = r.normalized_trace == r.generating_function;
  return r;
}

std::vector<std::vector<long>> odd_shapes(long max_sum) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  std::function<void(long)> rec = [&](long remaining) {
    if (cur.size() >= 3 && cur.size() % 2 == 1) out.push_back(cur);
    for (long a = 1; a <= remaining; ++a) {
      cur.push_back(a);
      rec(remaining - a);
      cur.pop_back();
    }
  };
  rec(max_sum);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

}  // namespace qproj

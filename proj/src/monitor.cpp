#include <limits>

#include "twin/semantics.hpp"

namespace twin {

WindowStatus window_status(const Run& run, const PriorityFunction& pf, int k, std::size_t start,
                           std::int64_t lambda) {
  if (start >= run.states.size()) throw std::out_of_range("window start outside the run");
  const Rational& t0 = run.time(start);
  int min_p = std::numeric_limits<int>::max();
  for (std::size_t n = start; n < run.states.size(); ++n) {
    const Rational elapsed = run.time(n) - t0;
    if (elapsed >= lambda) return WindowStatus{WindowKind::Broken, n, min_p, elapsed};
    min_p = std::min(min_p, pf.at(run.states[n].location, k));
    if (min_p % 2 == 0) return WindowStatus{WindowKind::Closed, n, min_p, elapsed};
  }
  const std::size_t last = run.states.size() - 1;
  return WindowStatus{WindowKind::Open, last, min_p, run.time(last) - t0};
}

std::vector<DirectVerdict> check_prefix_direct(const Run& run, const PriorityFunction& pf,
                                               std::int64_t lambda) {
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  const std::size_t n = run.states.size();
  std::vector<DirectVerdict> out(pf.dimensions);
  if (n == 0) return out;

  // first index whose elapsed time from i reaches lambda
  std::vector<std::size_t> reach(n, none);
  {
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (j < i) j = i;
      while (j < n && run.time(j) - run.time(i) < lambda) ++j;
      reach[i] = j < n ? j : none;
    }
  }

  std::vector<int> p(n);
  std::vector<std::size_t> smaller(n, none), stack;
  for (int k = 0; k < pf.dimensions; ++k) {
    for (std::size_t i = 0; i < n; ++i) p[i] = pf.at(run.states[i].location, k);
    stack.clear();
    for (std::size_t i = n; i-- > 0;) {
      while (!stack.empty() && p[stack.back()] >= p[i]) stack.pop_back();
      smaller[i] = stack.empty() ? none : stack.back();
      stack.push_back(i);
    }
    DirectVerdict v;
    std::size_t pending = none;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t at = i;
      while (at != none && p[at] % 2 != 0) at = smaller[at];
      const bool broken = reach[i] != none && (at == none || at >= reach[i]);
      if (broken) {
        v = DirectVerdict{DirectKind::ViolatedAt, i};
        break;
      }
      if (at == none && pending == none) pending = i;
    }
    if (v.kind != DirectKind::ViolatedAt && pending != none) v = DirectVerdict{DirectKind::PendingFrom, pending};
    out[k] = v;
  }
  return out;
}

}  // namespace twin

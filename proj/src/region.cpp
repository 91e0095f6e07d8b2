#include "twin/region.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <limits>

namespace twin {

namespace {

constexpr ClockSet bit(int x) { return ClockSet{1} << x; }

void combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

template <typename F>
void for_each_clock(ClockSet s, F&& f) {
  while (s) {
    int x = std::countr_zero(s);
    f(x);
    s &= s - 1;
  }
}

void drop_empty_blocks(ClockRegion& r) {
  auto it = std::remove(r.blocks.begin() + 1, r.blocks.end(), ClockSet{0});
  r.blocks.erase(it, r.blocks.end());
}

}  // namespace

std::size_t hash_value(const ClockRegion& r) {
  std::size_t seed = r.interval.size();
  for (int k : r.interval) combine(seed, static_cast<std::size_t>(k + 1));
  for (ClockSet b : r.blocks) combine(seed, b);
  return seed;
}

std::size_t hash_value(const StateRegion& r) {
  std::size_t seed = hash_value(r.clocks);
  combine(seed, static_cast<std::size_t>(r.location));
  return seed;
}

ClockRegion region_of(const Valuation& v, const ClockBounds& bounds) {
  const int n = static_cast<int>(v.size());
  if (static_cast<int>(bounds.size()) != n) throw std::invalid_argument("valuation is not total");
  ClockRegion r;
  r.interval.assign(n, kAbove);
  std::vector<std::pair<Rational, int>> fractional;
  for (int x = 0; x < n; ++x) {
    if (v[x] < 0) throw std::invalid_argument("negative clock value");
    const bool above = v[x] > bounds[x];
    if (!above) r.interval[x] = static_cast<int>(floor_int(v[x]).get_si());
    if (above && x != kGamma) continue;
    Rational f = frac(v[x]);
    if (f == 0) {
      r.blocks[0] |= bit(x);
    } else {
      fractional.emplace_back(std::move(f), x);
    }
  }
  std::sort(fractional.begin(), fractional.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < fractional.size(); ++i) {
    if (i == 0 || fractional[i].first != fractional[i - 1].first) r.blocks.push_back(0);
    r.blocks.back() |= bit(fractional[i].second);
  }
  return r;
}

StateRegion region_of(const TimedAutomaton& automaton, int location, const Valuation& v) {
  if (static_cast<int>(v.size()) != automaton.clock_count())
    throw std::invalid_argument("valuation is not total");
  return StateRegion{location, region_of(v, clock_bounds(automaton))};
}

bool is_tracked(const ClockRegion& r, int clock) {
  return clock == kGamma || r.interval[clock] != kAbove;
}

bool is_integral(const ClockRegion& r, int clock) { return (r.blocks[0] & bit(clock)) != 0; }

bool gamma_integral(const ClockRegion& r) { return is_integral(r, kGamma); }

bool satisfies(const ClockRegion& r, const ClockConstraint& g, const ClockBounds& bounds) {
  for (const Atom& a : g.atoms) {
    if (a.bound > bounds.at(a.clock))
      throw GranularityError("constant exceeds region granularity");
  }
  for (const Atom& a : g.atoms) {
    const int k = r.interval[a.clock];
    const std::int64_t c = a.bound;
    bool ok;
    if (k == kAbove) {
      ok = a.rel == Rel::Ge || a.rel == Rel::Gt;
    } else if (is_integral(r, a.clock)) {
      switch (a.rel) {
        case Rel::Lt: ok = k < c; break;
        case Rel::Le: ok = k <= c; break;
        case Rel::Ge: ok = k >= c; break;
        default: ok = k > c; break;
      }
    } else {
      ok = (a.rel == Rel::Lt || a.rel == Rel::Le) ? k + 1 <= c : k >= c;
    }
    if (!ok) return false;
  }
  return true;
}

ClockRegion apply_reset(const ClockRegion& region, ClockSet resets) {
  if (resets & bit(kGamma)) throw std::invalid_argument("the global clock cannot be reset");
  if (resets == 0) return region;
  ClockRegion r = region;
  for (auto& b : r.blocks) b &= ~resets;
  r.blocks[0] |= resets;
  for_each_clock(resets, [&](int x) { r.interval[x] = 0; });
  drop_empty_blocks(r);
  return r;
}

ClockRegion delay_successor(const ClockRegion& region, const ClockBounds& bounds) {
  ClockRegion r = region;
  const ClockSet zero = r.blocks[0];
  if (zero != 0) {
    ClockSet moved = 0;
    for_each_clock(zero, [&](int x) {
      if (r.interval[x] != kAbove && r.interval[x] == bounds[x]) r.interval[x] = kAbove;
      if (x == kGamma || r.interval[x] != kAbove) moved |= bit(x);
    });
    r.blocks[0] = 0;
    if (moved) r.blocks.insert(r.blocks.begin() + 1, moved);
  } else {
    const ClockSet top = r.blocks.back();
    r.blocks.pop_back();
    for_each_clock(top, [&](int x) {
      if (r.interval[x] != kAbove) ++r.interval[x];
    });
    r.blocks[0] = top;
  }
  return r;
}

DelayChain delay_chain(const ClockRegion& region, const ClockConstraint& invariant,
                       const ClockBounds& bounds) {
  if (!satisfies(region, invariant, bounds))
    throw std::invalid_argument("delay chain start violates the invariant");
  DelayChain chain;
  chain.regions.push_back(region);
  for (;;) {
    ClockRegion next = delay_successor(chain.regions.back(), bounds);
    if (!satisfies(next, invariant, bounds)) break;
    auto it = std::find(chain.regions.begin(), chain.regions.end(), next);
    if (it != chain.regions.end()) {
      chain.cycle_start = static_cast<std::size_t>(it - chain.regions.begin());
      break;
    }
    chain.regions.push_back(std::move(next));
  }
  return chain;
}

Valuation representative(const ClockRegion& r, const ClockBounds& bounds) {
  const int n = static_cast<int>(r.interval.size());
  const int blocks = static_cast<int>(r.blocks.size()) - 1;
  Valuation v(n);
  std::vector<Rational> f(n, Rational(0));
  for (int i = 1; i <= blocks; ++i)
    for_each_clock(r.blocks[i], [&](int x) { f[x] = Rational(i, blocks + 1); });
  for (int x = 0; x < n; ++x) {
    if (r.interval[x] == kAbove) {
      v[x] = Rational(bounds[x] + 1) + f[x];
    } else {
      v[x] = Rational(r.interval[x]) + f[x];
    }
  }
  return v;
}

std::string encode(const StateRegion& s, const TimedAutomaton& ta) {
  std::string out = ta.locations.at(s.location).name;
  out += '|';
  const auto& r = s.clocks;
  for (int x = 0; x < ta.clock_count(); ++x) {
    if (x) out += " / ";
    out += ta.clocks[x];
    out += ':';
    if (r.interval[x] == kAbove) {
      out += "above";
    } else {
      out += std::to_string(r.interval[x]);
      if (!is_integral(r, x)) out += '+';
    }
  }
  out += "|frac:";
  for (std::size_t i = 0; i < r.blocks.size(); ++i) {
    out += '(' + std::to_string(i) + ":{";
    bool first = true;
    for (int x = 0; x < ta.clock_count(); ++x) {
      if (!(r.blocks[i] & bit(x))) continue;
      if (!first) out += ',';
      out += ta.clocks[x];
      first = false;
    }
    out += "})";
  }
  return out;
}

StateRegion decode_region(std::string_view text, const TimedAutomaton& ta) {
  auto fail = [&](const std::string& why) -> StateRegion {
    throw std::invalid_argument("malformed region '" + std::string(text) + "': " + why);
  };
  const auto bar1 = text.find('|');
  const auto bar2 = text.find("|frac:");
  if (bar1 == std::string_view::npos || bar2 == std::string_view::npos || bar2 < bar1)
    return fail("missing sections");
  StateRegion s;
  auto loc = ta.find_location(text.substr(0, bar1));
  if (!loc) return fail("unknown location");
  s.location = *loc;
  s.clocks.interval.assign(ta.clock_count(), kAbove);

  std::string_view ivs = text.substr(bar1 + 1, bar2 - bar1 - 1);
  int seen = 0;
  while (!ivs.empty()) {
    auto sep = ivs.find(" / ");
    std::string_view item = ivs.substr(0, sep);
    ivs = sep == std::string_view::npos ? std::string_view{} : ivs.substr(sep + 3);
    auto colon = item.find(':');
    if (colon == std::string_view::npos) return fail("bad interval");
    auto clock = ta.find_clock(item.substr(0, colon));
    if (!clock) return fail("unknown clock");
    std::string value(item.substr(colon + 1));
    if (value != "above") {
      if (!value.empty() && value.back() == '+') value.pop_back();
      try {
        s.clocks.interval[*clock] = std::stoi(value);
      } catch (const std::exception&) {
        return fail("bad interval index");
      }
    }
    ++seen;
  }
  if (seen != ta.clock_count()) return fail("interval count mismatch");

  std::string_view fr = text.substr(bar2 + 6);
  s.clocks.blocks.clear();
  while (!fr.empty()) {
    if (fr.front() != '(') return fail("bad block");
    auto close = fr.find(')');
    auto open = fr.find('{');
    auto rb = fr.find('}');
    if (close == std::string_view::npos || open == std::string_view::npos || rb > close)
      return fail("bad block");
    std::string_view members = fr.substr(open + 1, rb - open - 1);
    ClockSet set = 0;
    while (!members.empty()) {
      auto comma = members.find(',');
      auto name = members.substr(0, comma);
      auto clock = ta.find_clock(name);
      if (!clock) return fail("unknown clock in block");
      set |= bit(*clock);
      members = comma == std::string_view::npos ? std::string_view{} : members.substr(comma + 1);
    }
    s.clocks.blocks.push_back(set);
    fr = fr.substr(close + 1);
  }
  if (s.clocks.blocks.empty()) return fail("no blocks");
  return s;
}

std::uint64_t count_clock_regions(const TimedAutomaton& ta) {
  const ClockBounds c = clock_bounds(ta);
  // poly[n] = number of interval assignments with n clocks at a positive tracked fraction
  std::vector<unsigned __int128> poly{1};
  for (int x = 0; x < ta.clock_count(); ++x) {
    const unsigned __int128 whole = static_cast<unsigned __int128>(c[x]) + 2;
    const unsigned __int128 part = x == kGamma ? static_cast<unsigned __int128>(c[x]) + 1
                                               : static_cast<unsigned __int128>(c[x]);
    std::vector<unsigned __int128> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i] * whole;
      next[i + 1] += poly[i] * part;
    }
    poly = std::move(next);
  }
  // ordered set partitions
  std::vector<unsigned __int128> fubini(poly.size(), 0);
  std::vector<std::vector<unsigned __int128>> binom(poly.size(), std::vector<unsigned __int128>(poly.size(), 0));
  for (std::size_t n = 0; n < poly.size(); ++n) {
    binom[n][0] = 1;
    for (std::size_t k = 1; k <= n; ++k) binom[n][k] = binom[n - 1][k - 1] + (k < n ? binom[n - 1][k] : 0);
  }
  fubini[0] = 1;
  for (std::size_t n = 1; n < poly.size(); ++n)
    for (std::size_t k = 1; k <= n; ++k) fubini[n] += binom[n][k] * fubini[n - k];
  unsigned __int128 total = 0;
  for (std::size_t n = 0; n < poly.size(); ++n) total += poly[n] * fubini[n];
  if (total > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("region count");
  return static_cast<std::uint64_t>(total);
}

std::uint64_t clock_region_bound(const TimedAutomaton& ta) {
  const ClockBounds c = clock_bounds(ta);
  unsigned __int128 b = 1;
  const int n = ta.clock_count();
  for (int i = 2; i <= n; ++i) b *= static_cast<unsigned __int128>(i);
  for (int i = 0; i < n; ++i) b *= 2;
  for (int x = 0; x < n; ++x) b *= static_cast<unsigned __int128>(2 * c[x] + 1);
  if (b > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(b);
}

}  // namespace twin

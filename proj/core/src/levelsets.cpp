#include "mombin/levelsets.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace mombin {

// ---------------------------------------------------------------------------
// Region

int HalfPlane::sign_at(const SurdPoint& p) const {
  return (Surd(a) * p.t0 + Surd(b) * p.h + Surd(c)).sign();
}

bool HalfPlane::admits(const SurdPoint& p) const {
  const int s = sign_at(p);
  return strict ? s > 0 : s >= 0;
}

bool Region::contains(const SurdPoint& p) const {
  return std::all_of(constraints.begin(), constraints.end(),
                     [&](const HalfPlane& hp) { return hp.admits(p); });
}

bool Region::contains_strictly(const ParamPoint& p) const {
  const SurdPoint q = to_surd(p);
  return std::all_of(constraints.begin(), constraints.end(),
                     [&](const HalfPlane& hp) { return hp.sign_at(q) > 0; });
}

Rational default_delta(const Dataset& d) {
  return Rational(2 * static_cast<long>(d.size())) * d.range();
}

Region build_region(const Dataset& d, int max_bins, const Rational& delta, bool exact_k) {
  if (max_bins < 1) throw std::invalid_argument("maximum number of bins must be >= 1");
  if (delta.sign() <= 0) throw std::invalid_argument("delta must be > 0");

  Region r;
  r.max_bins = max_bins;
  r.delta = delta;
  r.exact_k = exact_k;
  r.bound = d.range() + delta;

  const Rational K(max_bins);
  const Rational one(1);
  const Rational zero(0);
  r.constraints = {
      {-one, zero, d.min(), false},  // t0 <= x_min
      {one, one, -d.min(), true},    // x_min < t0 + h
      {one, K, -d.max(), true},      // x_max < t0 + K h
      {zero, -one, r.bound, false},  // h <= range + delta
      {zero, one, zero, true},       // h > 0
  };
  if (exact_k) {
    // t0 + (K-1) h <= x_max
    r.constraints.push_back({-one, -(K - one), d.max(), false});
  }

  const Rational pad = r.bound + one;
  std::vector<ParamPoint> poly = {
      {d.min() - pad, zero}, {d.min() + one, zero}, {d.min() + one, pad}, {d.min() - pad, pad}};
  for (const auto& hp : r.constraints) {
    poly = clip(poly, hp.a, hp.b, hp.c);
  }
  if (poly.size() < 3 || polygon_area(poly).sign() <= 0) {
    throw std::invalid_argument("parameter region is empty for the given K and delta");
  }
  r.vertices = std::move(poly);
  return r;
}

Region build_region(const Dataset& d, const RegionOptions& options) {
  return build_region(d, options.max_bins, options.delta.value_or(default_delta(d)), options.exact_k);
}

std::vector<EdgeLine> edge_lines(const Dataset& d, int max_bins) {
  std::vector<EdgeLine> lines;
  lines.reserve(static_cast<std::size_t>(max_bins) * d.distinct_values().size());
  for (int k = 1; k <= max_bins; ++k) {
    for (const auto& x : d.distinct_values()) lines.push_back({k, x});
  }
  return lines;
}

// ---------------------------------------------------------------------------
// Binning

namespace {

Shape trimmed(std::vector<int> counts) {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return Shape(std::move(counts));
}

// 1-based bin index of x for bins [t0 + (k-1)h, t0 + kh).
long bin_index(const Rational& x, const ParamPoint& p) {
  return floor((x - p.t0) / p.h).get_si() + 1;
}

long bin_index(const Rational& x, const SurdPoint& p) {
  const double guess = std::floor((x.to_double() - p.t0.to_double()) / p.h.to_double());
  long k = static_cast<long>(guess) + 1;
  auto left_edge = [&](long j) { return p.t0 + p.h * Surd(Rational(j - 1)); };
  while ((Surd(x) - left_edge(k)).sign() < 0) --k;
  while ((Surd(x) - left_edge(k + 1)).sign() >= 0) ++k;
  return k;
}

template <class Point>
Shape bin_counts_impl(const Point& p, const Dataset& d, int max_bins) {
  if (p.h.sign() <= 0) throw std::domain_error("bin width must be positive");
  if (bin_index(d.min(), p) != 1) throw std::domain_error("point outside D0: first bin must hold x_min");
  if (bin_index(d.max(), p) > max_bins) {
    throw std::domain_error("point outside D0: x_max falls beyond bin K");
  }
  std::vector<int> counts(static_cast<std::size_t>(max_bins), 0);
  const auto& xs = d.distinct_values();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    counts[static_cast<std::size_t>(bin_index(xs[i], p) - 1)] += d.multiplicities()[i];
  }
  return trimmed(std::move(counts));
}

}  // namespace

Shape bin_counts(const ParamPoint& p, const Dataset& d, int max_bins) { return bin_counts_impl(p, d, max_bins); }
Shape bin_counts(const SurdPoint& p, const Dataset& d, int max_bins) { return bin_counts_impl(p, d, max_bins); }

// ---------------------------------------------------------------------------
// Interior points

ParamPoint interior_point(std::span<const ParamPoint> vertices) {
  if (vertices.empty()) throw GeometryError("interior_point: no vertices");
  ParamPoint sum{Rational(0), Rational(0)};
  for (const auto& v : vertices) {
    sum.t0 += v.t0;
    sum.h += v.h;
  }
  const Rational n(static_cast<long>(vertices.size()));
  return {sum.t0 / n, sum.h / n};
}

ParamPoint certified_interior_point(std::span<const ParamPoint> vertices,
                                    std::span<const EdgeLine> lines, const Region& region) {
  if (vertices.size() < 3 || polygon_area(vertices).sign() <= 0) {
    throw GeometryError("degenerate (zero-area) cell");
  }
  auto certified = [&](const ParamPoint& p) {
    if (locate(vertices, p) != Location::Inside) return false;
    if (!region.contains_strictly(p)) return false;
    return std::none_of(lines.begin(), lines.end(), [&](const EdgeLine& l) { return l.side(p) == 0; });
  };

  ParamPoint candidate = interior_point(vertices);
  if (certified(candidate)) return candidate;
  candidate = interior_point(vertices.first(3));
  if (certified(candidate)) return candidate;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const ParamPoint tri[] = {vertices[i], vertices[j], vertices[k]};
        candidate = interior_point(tri);
        if (certified(candidate)) return candidate;
      }
    }
  }
  throw GeometryError("no certified interior point found");
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct Boundary {
  int k;
  Rational value;
  Rational t0_at(const Rational& h) const { return value - Rational(k) * h; }
};

// Heights where two lines of the arrangement (edge lines plus the slanted
// region boundaries) cross, restricted to the region's height span.
std::vector<Rational> strip_breaks(const Region& region, std::span<const Boundary> all) {
  Rational h_lo = region.vertices.front().h;
  Rational h_hi = h_lo;
  for (const auto& v : region.vertices) {
    h_lo = std::min(h_lo, v.h);
    h_hi = std::max(h_hi, v.h);
  }
  std::vector<Rational> breaks = {h_lo, h_hi};
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].k == all[j].k) continue;
      Rational h = (all[i].value - all[j].value) / Rational(all[i].k - all[j].k);
      if (h > h_lo && h < h_hi) breaks.push_back(std::move(h));
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  return breaks;
}

}  // namespace

std::vector<LevelSet> enumerate_level_sets(const Region& region, std::span<const EdgeLine> lines,
                                           const Dataset& d) {
  const int K = region.max_bins;

  // Slanted region boundaries: t0 > x_min - h and t0 > x_max - K h on the
  // left, t0 <= x_min (and t0 <= x_max - (K-1) h for exact K) on the right.
  std::vector<Boundary> left = {{1, d.min()}, {K, d.max()}};
  std::vector<Boundary> right = {{0, d.min()}};
  if (region.exact_k) right.push_back({K - 1, d.max()});

  std::vector<Boundary> all;
  all.reserve(lines.size() + 2);
  for (const auto& l : lines) all.push_back({l.k, l.value});
  all.insert(all.end(), left.begin(), left.end());
  all.insert(all.end(), right.begin(), right.end());
  std::sort(all.begin(), all.end(), [](const Boundary& a, const Boundary& b) {
    return a.k != b.k ? a.k < b.k : a.value < b.value;
  });
  all.erase(std::unique(all.begin(), all.end(),
                        [](const Boundary& a, const Boundary& b) { return a.k == b.k && a.value == b.value; }),
            all.end());

  // Multiplicity of each edge line's data value, for incremental rebinning.
  std::map<Rational, int> multiplicity;
  for (std::size_t i = 0; i < d.distinct_values().size(); ++i) {
    multiplicity[d.distinct_values()[i]] = d.multiplicities()[i];
  }

  const std::vector<Rational> breaks = strip_breaks(region, all);
  std::map<Shape, std::vector<ParamPoint>> corners;

  struct Cut {
    Rational at_mid;
    const Boundary* line;
  };
  std::vector<Cut> cuts;

  for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
    const Rational& lo = breaks[s];
    const Rational& hi = breaks[s + 1];
    const Rational mid = (lo + hi) / Rational(2);

    auto pick = [&](const std::vector<Boundary>& group, bool want_max) -> const Boundary& {
      const Boundary* best = &group.front();
      for (const auto& b : group) {
        const auto c = b.t0_at(mid) <=> best->t0_at(mid);
        if (want_max ? c > 0 : c < 0) best = &b;
      }
      return *best;
    };
    const Boundary& lb = pick(left, true);
    const Boundary& rb = pick(right, false);
    const Rational left_mid = lb.t0_at(mid);
    const Rational right_mid = rb.t0_at(mid);
    if (left_mid >= right_mid) continue;

    cuts.clear();
    cuts.push_back({left_mid, &lb});
    for (const auto& l : all) {
      if (l.k == 0) continue;
      Rational t = l.t0_at(mid);
      if (t > left_mid && t < right_mid) cuts.push_back({std::move(t), &l});
    }
    std::sort(cuts.begin() + 1, cuts.end(), [](const Cut& a, const Cut& b) { return a.at_mid < b.at_mid; });
    cuts.push_back({right_mid, &rb});

    // Bin counts of the leftmost trapezoid, then one value moves from bin
    // k+1 to bin k each time t0 crosses the line t0 + k h = x.
    const ParamPoint first{(cuts[0].at_mid + cuts[1].at_mid) / Rational(2), mid};
    std::vector<int> counts = bin_counts(first, d, K).counts;
    counts.resize(static_cast<std::size_t>(K) + 1, 0);

    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      if (i > 0) {
        const Boundary& crossed = *cuts[i].line;
        const int m = multiplicity.at(crossed.value);
        counts[static_cast<std::size_t>(crossed.k)] -= m;
        counts[static_cast<std::size_t>(crossed.k) - 1] += m;
      }
      const Boundary& a = *cuts[i].line;
      const Boundary& b = *cuts[i + 1].line;
      auto& bucket = corners[trimmed(std::vector<int>(counts.begin(), counts.begin() + K))];
      bucket.push_back({a.t0_at(lo), lo});
      bucket.push_back({b.t0_at(lo), lo});
      bucket.push_back({a.t0_at(hi), hi});
      bucket.push_back({b.t0_at(hi), hi});
    }
  }

  std::vector<LevelSet> cells;
  cells.reserve(corners.size());
  for (auto& [shape, pts] : corners) {
    if (region.exact_k && shape.bins() < K) continue;
    LevelSet cell;
    cell.shape = shape;
    cell.vertices = convex_hull(std::move(pts));
    cell.interior = certified_interior_point(cell.vertices, lines, region);
    const Shape check = bin_counts(cell.interior, d, K);
    if (check != shape) {
      throw GeometryError("cell tagged " + shape.str() + " rebins to " + check.str() + " at its interior point");
    }
    cells.push_back(std::move(cell));
  }
  // std::map iteration is already canonical order.
  return cells;
}

std::vector<InventoryRow> canonical_inventory(std::span<const LevelSet> cells) {
  std::vector<InventoryRow> rows;
  rows.reserve(cells.size());
  for (const auto& c : cells) rows.push_back({c.shape, c.vertices});
  std::sort(rows.begin(), rows.end(), [](const InventoryRow& a, const InventoryRow& b) { return a.shape < b.shape; });
  return rows;
}

std::optional<std::size_t> Inventory::locate_cell(const ParamPoint& p) const {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (locate(cells[i].vertices, p) == Location::Inside) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Inventory::find(const Shape& s) const {
  auto it = std::lower_bound(cells.begin(), cells.end(), s,
                             [](const LevelSet& c, const Shape& key) { return c.shape < key; });
  if (it == cells.end() || it->shape != s) return std::nullopt;
  return static_cast<std::size_t>(it - cells.begin());
}

Inventory build_inventory(const Dataset& d, const RegionOptions& options) {
  Inventory inv;
  inv.region = build_region(d, options);
  inv.lines = edge_lines(d, options.max_bins);
  inv.cells = enumerate_level_sets(inv.region, inv.lines, d);
  return inv;
}

SamplingReport sample_inventory(const Inventory& inventory, const Dataset& d, std::size_t samples,
                                std::uint64_t seed) {
  const auto& vs = inventory.region.vertices;
  Rational t_lo = vs.front().t0, t_hi = vs.front().t0, h_hi = vs.front().h;
  for (const auto& v : vs) {
    t_lo = std::min(t_lo, v.t0);
    t_hi = std::max(t_hi, v.t0);
    h_hi = std::max(h_hi, v.h);
  }
  const Rational grid(mpz_class(1), mpz_class(1) << 32);
  std::mt19937_64 rng(seed);
  auto draw = [&](const Rational& lo, const Rational& hi) {
    const Rational u(mpz_class(static_cast<unsigned long>(rng() >> 32)), mpz_class(1));
    return lo + (hi - lo) * u * grid;
  };

  SamplingReport rep;
  std::set<Shape> hit;
  const std::size_t max_draws = samples * 1000 + 1000;
  while (rep.samples < samples) {
    if (++rep.draws > max_draws) throw GeometryError("sampling: region too thin to sample");
    const ParamPoint p{draw(t_lo, t_hi), draw(Rational(0), h_hi)};
    if (!inventory.region.contains_strictly(p)) continue;
    if (std::any_of(inventory.lines.begin(), inventory.lines.end(),
                    [&](const EdgeLine& l) { return l.side(p) == 0; })) {
      continue;
    }
    ++rep.samples;
    const Shape s = bin_counts(p, d, inventory.region.max_bins);
    const auto idx = inventory.find(s);
    if (!idx || locate(inventory.cells[*idx].vertices, p) != Location::Inside) {
      ++rep.mismatches;
      if (rep.first_failures.size() < 10) {
        rep.first_failures.push_back("(" + p.t0.str() + ", " + p.h.str() + ") bins to " + s.str() +
                                     (idx ? " outside its cell" : " not in inventory"));
      }
      continue;
    }
    hit.insert(s);
  }
  rep.hit.assign(hit.begin(), hit.end());
  return rep;
}

}  // namespace mombin

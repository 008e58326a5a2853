#include "mombin/mom.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mombin {

char to_char(MomClass c) { return static_cast<char>('A' + static_cast<int>(c)); }

std::string MomClassification::boundary_notes() const {
  std::vector<std::string> notes;
  if (m_zero_at_vertex) notes.emplace_back("m=0 at vertex");
  if (v_zero_at_vertex) notes.emplace_back("v=0 at vertex");
  if (joint_on_boundary) notes.emplace_back("joint point on boundary");
  std::string out;
  for (std::size_t i = 0; i < notes.size(); ++i) {
    if (i > 0) out += "; ";
    out += notes[i];
  }
  return out;
}

namespace {

const Rational kHalf(mpz_class(1), mpz_class(2));

struct SignSummary {
  bool positive = false;
  bool negative = false;
  bool zero = false;
};

SignSummary summarize(const std::vector<Rational>& values) {
  SignSummary s;
  for (const auto& v : values) {
    const int sg = v.sign();
    s.positive |= sg > 0;
    s.negative |= sg < 0;
    s.zero |= sg == 0;
  }
  return s;
}

bool changes(const SignSummary& s, ZeroAtVertex rule) {
  switch (rule) {
    case ZeroAtVertex::Strict:
      return s.positive && s.negative;
    case ZeroAtVertex::NonPositive:
      return s.positive && (s.negative || s.zero);
    case ZeroAtVertex::Touching:
      return (s.positive || s.zero) && (s.negative || s.zero);
  }
  return false;
}

std::vector<Rational> m_values(const LevelSet& cell, const Dataset& d) {
  const Rational c = mean_bin_index(cell.shape) - kHalf;
  std::vector<Rational> out;
  out.reserve(cell.vertices.size());
  for (const auto& p : cell.vertices) out.push_back(p.t0 + p.h * c - d.mean());
  return out;
}

// Sign-equivalent to v: h^2 - h*^2.
std::vector<Rational> v_values(const LevelSet& cell, const Rational& h_squared) {
  std::vector<Rational> out;
  out.reserve(cell.vertices.size());
  for (const auto& p : cell.vertices) out.push_back(p.h * p.h - h_squared);
  return out;
}

bool surd_lex_less(const SurdPoint& a, const SurdPoint& b) {
  const int s = (a.t0 - b.t0).sign();
  if (s != 0) return s < 0;
  return (a.h - b.h).sign() < 0;
}

std::optional<Segment> extremes(std::vector<SurdPoint> pts) {
  if (pts.empty()) return std::nullopt;
  const auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(), surd_lex_less);
  return Segment{*lo, *hi};
}

// Zero set of an affine function on the closed cell, given its vertex values.
std::optional<Segment> affine_zero_set(const std::vector<ParamPoint>& poly, const std::vector<Rational>& vals) {
  std::vector<SurdPoint> pts;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (vals[i].is_zero()) pts.push_back(to_surd(poly[i]));
    if (vals[i].sign() * vals[j].sign() < 0) {
      const Rational lambda = vals[i] / (vals[i] - vals[j]);
      pts.push_back(to_surd({poly[i].t0 + lambda * (poly[j].t0 - poly[i].t0),
                             poly[i].h + lambda * (poly[j].h - poly[i].h)}));
    }
  }
  return extremes(std::move(pts));
}

// Zero set of h = h_star on the closed cell.
std::optional<Segment> horizontal_zero_set(const std::vector<ParamPoint>& poly, const Rational& h_squared) {
  const Surd h_star = Surd::sqrt(h_squared);
  std::vector<SurdPoint> pts;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const int si = (Surd(poly[i].h) - h_star).sign();
    const int sj = (Surd(poly[j].h) - h_star).sign();
    if (si == 0) pts.push_back(to_surd(poly[i]));
    if (si * sj < 0) {
      const Rational dt = (poly[j].t0 - poly[i].t0) / (poly[j].h - poly[i].h);
      pts.push_back({Surd(poly[i].t0) + (h_star - Surd(poly[i].h)) * Surd(dt), h_star});
    }
  }
  return extremes(std::move(pts));
}

}  // namespace

std::optional<SurdPoint> joint_point(const Shape& s, const Dataset& d) {
  if (bin_index_ssr(s).is_zero()) return std::nullopt;
  const Surd h = variance_height(s, d).height();
  const Surd t0 = Surd(d.mean()) - h * Surd(mean_bin_index(s) - kHalf);
  return SurdPoint{t0, h};
}

MomClassification classify(const LevelSet& cell, const Dataset& d, const MomOptions& options) {
  MomClassification out;
  out.shape = cell.shape;

  const SignSummary m = summarize(m_values(cell, d));
  out.m_zero_at_vertex = m.zero;
  out.m_change = changes(m, options.zero_rule);

  const Rational ssr = bin_index_ssr(cell.shape);
  if (!ssr.is_zero()) {
    const Rational h_squared = variance_height(cell.shape, d).h_squared;
    const SignSummary v = summarize(v_values(cell, h_squared));
    out.v_zero_at_vertex = v.zero;
    out.v_change = changes(v, options.zero_rule);

    const SurdPoint p = *joint_point(cell.shape, d);
    const Location loc = locate(cell.vertices, p);
    out.joint_on_boundary = loc == Location::Boundary;
    if (loc == Location::Inside) {
      bool reproduces = false;
      try {
        reproduces = bin_counts(p, d, std::max(cell.shape.bins(), 1)) == cell.shape;
      } catch (const std::domain_error&) {
        reproduces = false;
      }
      if (reproduces) {
        out.cls = MomClass::E;
        out.e_point = p;
        return out;
      }
    }
  }

  if (out.m_change && out.v_change) {
    out.cls = MomClass::D;
  } else if (out.m_change) {
    out.cls = MomClass::B;
  } else if (out.v_change) {
    out.cls = MomClass::C;
  } else {
    out.cls = MomClass::A;
  }
  return out;
}

std::vector<MomClassification> classify_all(std::span<const LevelSet> cells, const Dataset& d,
                                            const MomOptions& options) {
  std::vector<MomClassification> out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.push_back(classify(c, d, options));
  return out;
}

SolutionSegments solution_segments(const LevelSet& cell, const Dataset& d, const MomClassification& cls) {
  if (cls.cls == MomClass::A || cls.cls == MomClass::E) {
    throw std::invalid_argument(std::string("solution segments are undefined for class ") + to_char(cls.cls));
  }
  SolutionSegments out;
  if (cls.m_change) out.m = affine_zero_set(cell.vertices, m_values(cell, d));
  if (cls.v_change) out.v = horizontal_zero_set(cell.vertices, variance_height(cell.shape, d).h_squared);
  return out;
}

void attach_segments(std::span<const LevelSet> cells, const Dataset& d, std::span<MomClassification> classes) {
  if (cells.size() != classes.size()) throw std::invalid_argument("attach_segments: size mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto& c = classes[i];
    if (c.cls == MomClass::A || c.cls == MomClass::E) continue;
    auto seg = solution_segments(cells[i], d, c);
    c.m_segment = seg.m;
    c.v_segment = seg.v;
  }
}

std::string VennReport::line() const {
  std::ostringstream os;
  os << shapes << " = " << e << " + " << d << " + " << c << " + " << b << " + " << a;
  return os.str();
}

VennReport venn_report(std::span<const MomClassification> classes) {
  VennReport r;
  r.shapes = classes.size();
  for (const auto& c : classes) {
    switch (c.cls) {
      case MomClass::A: ++r.a; break;
      case MomClass::B: ++r.b; break;
      case MomClass::C: ++r.c; break;
      case MomClass::D: ++r.d; break;
      case MomClass::E: ++r.e; break;
    }
  }
  return r;
}

BandSizes band_sizes(std::size_t shapes, const Rational& band_t, const Rational& band_f) {
  auto ceil_of = [&](const Rational& f) {
    if (f.sign() < 0 || f > Rational(1)) throw std::invalid_argument("band fraction must lie in [0, 1]");
    const Rational x = f * Rational(static_cast<long>(shapes));
    mpz_class c = floor(x);
    if (!x.is_integer()) c += 1;
    return static_cast<std::size_t>(c.get_ui());
  };
  return {ceil_of(band_t), ceil_of(band_f)};
}

std::vector<SkewRankEntry> skewness_ranking(std::span<const MomClassification> classes, const Dataset& d,
                                            const Rational& band_t, const Rational& band_f) {
  std::vector<SkewRankEntry> entries;
  entries.reserve(classes.size());
  for (const auto& c : classes) {
    SkewRankEntry e;
    e.shape = c.shape;
    e.cls = c.cls;
    if (!bin_index_ssr(c.shape).is_zero()) {
      e.gamma = shape_gamma(c.shape);
      e.sk = SkewDeviation{*e.gamma, d.gamma()};
      e.ranked = true;
    }
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.shape < b.shape; });

  const RootTerm gx = d.gamma();
  std::vector<std::size_t> below;
  std::vector<std::size_t> above;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i].ranked) continue;
    (entries[i].sk->sign() < 0 ? below : above).push_back(i);
  }

  const BandSizes bands = band_sizes(entries.size(), band_t, band_f);
  auto assign = [&](std::vector<std::size_t>& side, int direction) {
    std::stable_sort(side.begin(), side.end(), [&](std::size_t a, std::size_t b) {
      return compare_distance(*entries[a].gamma, *entries[b].gamma, gx) < 0;
    });
    for (std::size_t r = 0; r < side.size(); ++r) {
      std::size_t first = r;
      while (first > 0 && compare_distance(*entries[side[first - 1]].gamma, *entries[side[r]].gamma, gx) == 0) {
        --first;
      }
      auto& e = entries[side[r]];
      e.position = direction * static_cast<int>(first + 1);
      e.in_t = first < bands.t;
      e.in_f = first < bands.f;
      e.in_jg_and_t = e.in_t && e.cls == MomClass::E;
    }
  };
  assign(below, -1);
  assign(above, +1);
  return entries;
}

SkewOptimal skewness_optimal(std::span<const SkewRankEntry> ranking) {
  auto best = [&](bool joint_only) {
    std::vector<Shape> out;
    const SkewRankEntry* lead = nullptr;
    for (const auto& e : ranking) {
      if (!e.ranked || (joint_only && e.cls != MomClass::E)) continue;
      if (lead == nullptr) {
        lead = &e;
        out = {e.shape};
        continue;
      }
      const auto c = compare_distance(*e.gamma, *lead->gamma, e.sk->data);
      if (c < 0) {
        lead = &e;
        out = {e.shape};
      } else if (c == 0) {
        out.push_back(e.shape);
      }
    }
    return out;
  };
  return {best(false), best(true)};
}

}  // namespace mombin

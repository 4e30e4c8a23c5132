#include "ramsey/proof_replay.h"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ramsey {

namespace {

constexpr int kCycOrder = 43;
constexpr std::size_t kMaxListedFailures = 20;

int mod(int x, int n) { return ((x % n) + n) % n; }

std::string join(const std::vector<Vertex>& vs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) os << ',';
    os << vs[i];
  }
  os << '}';
  return os.str();
}

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}

void record(CheckReport& r, std::size_t& count, std::string what) {
  if (count++ < kMaxListedFailures) {
    r.fail(std::move(what));
  } else {
    r.status = CheckReport::Status::Fail;
  }
}

bool is_cyc43_base(const ColoringSpec& spec) {
  return spec.order == kCycOrder &&
         spec.blue_lengths == preset(Preset::Cyc43).blue_lengths;
}

bool is_flipped(const ColoringSpec& spec, Vertex u, Vertex v) {
  const Edge e(u, v);
  return std::find(spec.flips.begin(), spec.flips.end(), e) != spec.flips.end();
}

int min_circular_gap(int n, const std::vector<Vertex>& sorted) {
  int best = n;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    best = std::min(best, sorted[i + 1] - sorted[i]);
  }
  best = std::min(best, sorted.front() + n - sorted.back());
  return best;
}

}  // namespace

std::string_view status_name(CheckReport::Status s) {
  switch (s) {
    case CheckReport::Status::Pass: return "PASS";
    case CheckReport::Status::Fail: return "FAIL";
    case CheckReport::Status::Skipped: return "SKIP";
  }
  return "";
}

CanonicalRedK5 canonical_red_k5(int i) {
  if (i < 0 || i >= kCycOrder) {
    throw std::out_of_range("canonical tuple index " + std::to_string(i) +
                            " outside [0, 42]");
  }
  CanonicalRedK5 t;
  t.i = i;
  for (int offset : {0, 1, 2, 22, 23}) t.vertices.push_back(mod(i + offset, kCycOrder));
  std::sort(t.vertices.begin(), t.vertices.end());
  return t;
}

CheckReport verify_canonical_family() {
  CheckReport r("canonical red K5 family in Cyc43");
  const Coloring cyc = build(preset(Preset::Cyc43));
  const std::set<int> allowed = {1, 2, 20, 21};
  std::set<std::vector<Vertex>> family;
  for (int i = 0; i < kCycOrder; ++i) {
    const auto t = canonical_red_k5(i);
    if (!is_mono_clique(cyc, EdgeColor::Red, t.vertices)) {
      r.fail("tuple " + std::to_string(i) + " " + join(t.vertices) +
             " is not a red K5");
    }
    for (std::size_t x = 0; x < t.vertices.size(); ++x) {
      for (std::size_t y = x + 1; y < t.vertices.size(); ++y) {
        int d = dist(kCycOrder, t.vertices[x], t.vertices[y]);
        if (!allowed.count(d)) {
          r.fail("tuple " + std::to_string(i) + " uses length " +
                 std::to_string(d));
        }
      }
    }
    family.insert(t.vertices);
  }
  if (family.size() != static_cast<std::size_t>(kCycOrder)) {
    r.fail("only " + std::to_string(family.size()) + " distinct tuples");
  }
  std::set<std::vector<Vertex>> engine;
  for (const Clique& q : enumerate_mono(cyc, EdgeColor::Red, 5)) {
    engine.insert(q.vertices);
  }
  if (engine != family) {
    r.fail("engine finds " + std::to_string(engine.size()) +
           " red K5s, not the canonical family");
  }
  r.summary = std::to_string(family.size()) + " distinct canonical tuples, " +
              std::to_string(engine.size()) + " red K5s by enumeration";
  return r;
}

std::optional<DisruptionWitness> find_disruption(int i,
                                                 const ColoringSpec& spec) {
  const auto t = canonical_red_k5(i);
  DisruptionWitness w;
  w.i = i;
  for (Vertex v : t.vertices) {
    if (spec.deletions.count(v)) {
      w.kind = DisruptionWitness::Kind::DeletedVertex;
      w.vertex = v;
      return w;
    }
  }
  std::vector<Vertex> tuple_order;
  for (int offset : {0, 1, 2, 22, 23}) tuple_order.push_back(mod(i + offset, kCycOrder));
  for (std::size_t x = 0; x < tuple_order.size(); ++x) {
    for (std::size_t y = x + 1; y < tuple_order.size(); ++y) {
      const Vertex u = tuple_order[x];
      const Vertex v = tuple_order[y];
      if (is_flipped(spec, u, v) && spec.order == kCycOrder &&
          !spec.blue_lengths.count(dist(spec.order, u, v))) {
        w.kind = DisruptionWitness::Kind::FlippedEdge;
        w.edge = Edge(u, v);
        return w;
      }
    }
  }
  return std::nullopt;
}

DisruptionWitness disruption_witness(int i) {
  auto w = find_disruption(i, preset(Preset::Exoo42));
  if (!w) {
    throw std::logic_error("canonical tuple " + std::to_string(i) +
                           " survives in Exoo42");
  }
  return *w;
}

CheckReport verify_disruptions(const ColoringSpec& spec) {
  CheckReport r("every canonical red K5 is disrupted");
  int deleted = 0;
  int flipped = 0;
  for (int i = 0; i < kCycOrder; ++i) {
    auto w = find_disruption(i, spec);
    if (!w) {
      r.fail("tuple " + std::to_string(i) + " " +
             join(canonical_red_k5(i).vertices) + " has no witness");
      continue;
    }
    if (w->kind == DisruptionWitness::Kind::DeletedVertex) {
      ++deleted;
    } else {
      ++flipped;
    }
  }
  const Coloring c = build(spec);
  const auto red = count_mono(c, EdgeColor::Red, 5);
  if (red != 0) r.fail(std::to_string(red) + " red K5s remain");
  r.summary = std::to_string(deleted) + " by deletion, " +
              std::to_string(flipped) + " by flipped edge, " +
              std::to_string(red) + " red K5s remain";
  return r;
}

Vertex symmetric_vertex(int n, Vertex a, Vertex b, Vertex u) {
  return mod(a + b - u, n);
}

CheckReport verify_symmetry_proposition(const Coloring& c, int samples,
                                        std::uint64_t seed) {
  CheckReport r("reflection symmetry about an edge");
  const int n = c.order();
  std::size_t violations = 0;
  std::int64_t checked = 0;
  auto defined = [&](Vertex u, Vertex v) {
    return u != v && c.is_active(u) && c.is_active(v);
  };
  auto check = [&](Vertex a, Vertex b, Vertex x) {
    const Vertex y = symmetric_vertex(n, a, b, x);
    if (defined(x, a) && defined(y, b)) {
      ++checked;
      if (c.color(x, a) != c.color(y, b)) {
        record(r, violations,
               "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                   " x=" + std::to_string(x) + " y=" + std::to_string(y) +
                   ": color(x,a) != color(y,b)");
      }
    }
    if (defined(x, b) && defined(y, a)) {
      ++checked;
      if (c.color(x, b) != c.color(y, a)) {
        record(r, violations,
               "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                   " x=" + std::to_string(x) + " y=" + std::to_string(y) +
                   ": color(x,b) != color(y,a)");
      }
    }
  };
  if (samples <= 0) {
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        if (a == b) continue;
        for (Vertex x = 0; x < n; ++x) check(a, b, x);
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int s = 0; s < samples; ++s) {
      Vertex a = pick(rng);
      Vertex b = pick(rng);
      while (b == a) b = pick(rng);
      check(a, b, pick(rng));
    }
  }
  r.summary = std::to_string(checked) + " edge pairs compared, " +
              std::to_string(violations) + " violations";
  return r;
}

std::vector<Vertex> eight_vertex_formula(int n, Vertex a) {
  return {mod(a + 4, n), mod(a + 5, n), mod(a + 6, n), mod(a + 9, n),
          mod(a - 8, n), mod(a - 5, n), mod(a - 4, n), mod(a - 3, n)};
}

CheckReport verify_eight_common_neighbors(const Coloring& input, Vertex a,
                                          bool allow_deleted) {
  CheckReport r("eight common blue neighbors of " + std::to_string(a) +
                        " and " + std::to_string(a + 1));
  const Coloring c = allow_deleted ? restore_deleted(input) : input;
  const int n = c.order();
  const Vertex a1 = mod(a + 1, n);
  if (!c.is_active(a) || !c.is_active(a1)) {
    r.fail("vertex " + std::to_string(a) + " or its successor is inactive");
    return r;
  }
  const auto formula = eight_vertex_formula(n, a);
  const VertexMask expected = vertices_to_mask(formula);
  const VertexMask actual =
      common_color_neighbors(c, EdgeColor::Blue, bit(a) | bit(a1));
  if (actual != expected) {
    r.fail("missing " + join(mask_to_vertices(expected & ~actual)) +
           ", extra " + join(mask_to_vertices(actual & ~expected)));
  }
  for (int i = 0; i < 4; ++i) {
    const Vertex mirror = symmetric_vertex(n, a, a1, formula[i]);
    if (mirror != formula[7 - i]) {
      r.fail(std::to_string(formula[i]) + " mirrors to " +
             std::to_string(mirror) + ", not " + std::to_string(formula[7 - i]));
    }
  }
  for (std::size_t x = 0; x < formula.size(); ++x) {
    for (std::size_t y = x + 1; y < formula.size(); ++y) {
      if (is_flipped(c.spec(), formula[x], formula[y])) {
        r.fail("flipped edge " + edge_str(Edge(formula[x], formula[y])) +
               " among the eight");
      }
    }
  }
  r.summary = join(mask_to_vertices(actual));
  return r;
}

CheckReport verify_flip_edges_blue_safe(const Coloring& c) {
  CheckReport r("flipped edges lie in no monochromatic K5");
  int examined = 0;
  for (const Edge& e : c.spec().flips) {
    if (!c.is_active(e.a) || !c.is_active(e.b)) continue;
    ++examined;
    const EdgeColor color = c.color(e.a, e.b);
    for (const Clique& q : cliques_through_edge(c, color, e.a, e.b, 5)) {
      r.fail(std::string(color_name(color)) + " K5 " + join(q.vertices) +
             " through " + edge_str(e));
    }
  }
  r.summary = std::to_string(examined) + " flipped edges examined";
  return r;
}

CheckReport verify_flip_edges_blue_safe() {
  return verify_flip_edges_blue_safe(build(preset(Preset::Exoo42)));
}

std::vector<Clique> flip_counterfactual_cliques() {
  const Coloring c = flip_edge(build(preset(Preset::VariantA)), 0, 1);
  return cliques_through_edge(c, EdgeColor::Blue, 0, 1, 5);
}

CheckReport verify_flip_counterfactual() {
  CheckReport r("flipping (0,1) with vertex 0 kept creates blue K5s");
  const auto found = flip_counterfactual_cliques();
  std::set<std::vector<Vertex>> got;
  for (const Clique& q : found) got.insert(q.vertices);
  for (const std::vector<Vertex>& want :
       {std::vector<Vertex>{0, 1, 4, 5, 9}, std::vector<Vertex>{0, 1, 4, 5, 39}}) {
    if (!got.count(want)) r.fail("missing blue K5 " + join(want));
  }
  r.summary = std::to_string(found.size()) + " blue K5s through (0,1):";
  for (const Clique& q : found) r.summary += " " + join(q.vertices);
  return r;
}

std::set<std::vector<Vertex>> dihedral_orbit(int n,
                                             const std::vector<Vertex>& vs) {
  std::set<std::vector<Vertex>> orbit;
  for (int t = 0; t < n; ++t) {
    for (bool reflect : {false, true}) {
      std::vector<Vertex> image;
      image.reserve(vs.size());
      for (Vertex v : vs) image.push_back(mod(reflect ? t - v : v + t, n));
      std::sort(image.begin(), image.end());
      orbit.insert(std::move(image));
    }
  }
  return orbit;
}

std::vector<Vertex> canonical_form(int n, const std::vector<Vertex>& vs) {
  return *dihedral_orbit(n, vs).begin();
}

std::vector<Clique> standard_enumerate(const Coloring& c, EdgeColor color,
                                       int k) {
  if (!c.is_pure_circulant()) {
    throw std::invalid_argument(
        "standard enumeration needs an unmodified circulant coloring");
  }
  const int n = c.order();
  std::vector<Clique> out;
  if (n < k || n < 3) return out;
  constexpr Vertex anchor = 1;
  for (int gap = 1; gap <= n / k; ++gap) {
    const Vertex next = mod(anchor + gap, n);
    if (c.color(anchor, next) != color) continue;
    for (Clique& q : cliques_through_edge(c, color, anchor, next, k)) {
      bool between = false;
      for (Vertex v : q.vertices) {
        const int offset = mod(v - anchor, n);
        if (offset > 0 && offset < gap) between = true;
      }
      if (!between && min_circular_gap(n, q.vertices) == gap) {
        out.push_back(std::move(q));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CheckReport verify_standard_reduction(const Coloring& c, EdgeColor color,
                                      int k) {
  CheckReport r("standard " + std::string(color_name(color)) + " K" +
                        std::to_string(k) + " orbit expansion");
  const auto standard = standard_enumerate(c, color, k);
  std::set<std::vector<Vertex>> expanded;
  for (const Clique& q : standard) {
    auto orbit = dihedral_orbit(c.order(), q.vertices);
    expanded.insert(orbit.begin(), orbit.end());
  }
  std::set<std::vector<Vertex>> full;
  if (k <= c.active_count()) {
    for (const Clique& q : enumerate_mono(c, color, k)) full.insert(q.vertices);
  }
  if (expanded != full) {
    std::size_t shown = 0;
    for (const auto& q : full) {
      if (!expanded.count(q)) record(r, shown, "not covered: " + join(q));
    }
    for (const auto& q : expanded) {
      if (!full.count(q)) record(r, shown, "spurious: " + join(q));
    }
  }
  r.summary = std::to_string(standard.size()) + " standard, " +
              std::to_string(expanded.size()) + " after expansion, " +
              std::to_string(full.size()) + " by enumeration";
  return r;
}

std::string render_diagram(const Coloring& c, EdgeColor color,
                           const std::vector<Vertex>& rows,
                           DiagramOptions options) {
  const int n = c.order();
  std::string tens(n, ' ');
  std::string units(n, ' ');
  for (int j = 1; j <= n; ++j) {
    if (j == 1) tens[0] = '0';
    if (j % 10 == 0) tens[j - 1] = static_cast<char>('0' + j / 10);
    units[j - 1] = static_cast<char>('0' + j % 10);
  }
  std::string out = tens + '\n' + units + '\n';
  std::string common(n, 'E');
  for (Vertex r : rows) {
    std::string line(n, ' ');
    for (int j = 1; j <= n; ++j) {
      const Vertex v = j % n;
      char& ch = line[j - 1];
      if (v == r) {
        ch = 'o';
      } else if (c.is_active(v) && c.is_active(r) && c.color(r, v) == color) {
        ch = is_flipped(c.spec(), r, v) ? 'X' : 'x';
      }
      if (ch != 'x' && ch != 'X') common[j - 1] = ' ';
    }
    out += line + '\n';
  }
  if (options.mark_common && rows.size() >= 2) out += common + '\n';
  return out;
}

VertexMask parse_diagram_row(std::string_view row, int n) {
  VertexMask m = 0;
  for (int j = 1; j <= n && j <= static_cast<int>(row.size()); ++j) {
    if (row[j - 1] == 'x' || row[j - 1] == 'X') m |= bit(j % n);
  }
  return m;
}

std::vector<CheckReport> run_lemma_suite(const ColoringSpec& spec) {
  std::vector<CheckReport> out;
  const Coloring c = build(spec);
  const Coloring base = base_coloring(c);
  const bool cyc43 = is_cyc43_base(spec);
  const bool modified = !spec.flips.empty() || !spec.deletions.empty();

  auto skipped = [](std::string name) {
    CheckReport r(std::move(name));
    r.status = CheckReport::Status::Skipped;
    r.summary = "not applicable";
    return r;
  };

  out.push_back(cyc43 ? verify_canonical_family()
                      : skipped("canonical red K5 family in Cyc43"));
  out.push_back(cyc43 && modified
                    ? verify_disruptions(spec)
                    : skipped("every canonical red K5 is disrupted"));

  CheckReport sym = verify_symmetry_proposition(base, 0);
  sym.name += " (base coloring)";
  out.push_back(std::move(sym));

  if (cyc43) {
    CheckReport all("eight common blue neighbors, every a (base)");
    for (Vertex a = 0; a < base.order(); ++a) {
      CheckReport one = verify_eight_common_neighbors(base, a, false);
      for (auto& f : one.failures) all.fail("a=" + std::to_string(a) + ": " + f);
    }
    all.summary = "43 values of a";
    out.push_back(std::move(all));

    CheckReport flipped("eight common blue neighbors at flipped (a,a+1)");
    int count = 0;
    for (const Edge& e : spec.flips) {
      Vertex a = -1;
      if (mod(e.a + 1, spec.order) == e.b) a = e.a;
      if (mod(e.b + 1, spec.order) == e.a) a = e.b;
      if (a < 0) continue;
      ++count;
      CheckReport one = verify_eight_common_neighbors(c, a, true);
      for (auto& f : one.failures) flipped.fail("a=" + std::to_string(a) + ": " + f);
    }
    if (count == 0) flipped.status = CheckReport::Status::Skipped;
    flipped.summary = std::to_string(count) + " consecutive flipped edges";
    out.push_back(std::move(flipped));
  }

  out.push_back(spec.flips.empty()
                    ? skipped("flipped edges lie in no monochromatic K5")
                    : verify_flip_edges_blue_safe(c));
  if (cyc43) out.push_back(verify_flip_counterfactual());

  for (EdgeColor color : {EdgeColor::Red, EdgeColor::Blue}) {
    CheckReport std_check = verify_standard_reduction(base, color, 5);
    std_check.name += " (base coloring)";
    out.push_back(std::move(std_check));
  }
  return out;
}

}  // namespace ramsey

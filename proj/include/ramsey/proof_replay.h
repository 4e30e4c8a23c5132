// Machine checks for the structural facts behind the R(5,5) >= 43 coloring:
// the canonical family of red K5s in the circulant coloring, how the edge
// flips and the vertex deletion destroy each of them, the reflection
// symmetry about an edge, common blue neighborhoods of adjacent vertices,
// and the standard-clique reduction with dihedral orbit expansion.

#ifndef RAMSEY_PROOF_REPLAY_H_
#define RAMSEY_PROOF_REPLAY_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramsey/clique_engine.h"
#include "ramsey/coloring.h"

namespace ramsey {

struct CheckReport {
  enum class Status { Pass, Fail, Skipped };

  explicit CheckReport(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  Status status = Status::Pass;
  std::string summary;
  std::vector<std::string> failures;

  bool passed() const { return status != Status::Fail; }
  void fail(std::string what) {
    status = Status::Fail;
    failures.push_back(std::move(what));
  }
};

std::string_view status_name(CheckReport::Status s);

struct CanonicalRedK5 {
  int i = 0;
  std::vector<Vertex> vertices;  // sorted
};

// {i, i+1, i+2, i+22, i+23} mod 43. Throws std::out_of_range unless
// 0 <= i <= 42.
CanonicalRedK5 canonical_red_k5(int i);

// Each canonical tuple is a red K5 of Cyc43 using only lengths
// {1, 2, 20, 21}, the 43 tuples are distinct, and they are exactly the red
// K5s found by the engine.
CheckReport verify_canonical_family();

struct DisruptionWitness {
  enum class Kind { DeletedVertex, FlippedEdge };

  int i = 0;
  Kind kind = Kind::DeletedVertex;
  Vertex vertex = 0;  // DeletedVertex
  Edge edge;          // FlippedEdge
};

// Looks for a deleted vertex of tuple i, then for a flipped red-length
// edge of tuple i (pairs scanned in tuple order i, i+1, i+2, i+22, i+23).
std::optional<DisruptionWitness> find_disruption(int i,
                                                 const ColoringSpec& spec);
// Witness against Exoo42; throws std::logic_error if none exists.
DisruptionWitness disruption_witness(int i);

// Every canonical tuple has a witness in spec, and the resulting coloring
// has no red K5.
CheckReport verify_disruptions(const ColoringSpec& spec);

// The vertex v with a - u == v - b (mod n).
Vertex symmetric_vertex(int n, Vertex a, Vertex b, Vertex u);

// color(x,a) == color(y,b) and color(x,b) == color(y,a) for
// y = symmetric_vertex(a, b, x). samples <= 0 checks every triple;
// otherwise draws that many triples from a generator seeded with seed.
CheckReport verify_symmetry_proposition(const Coloring& c, int samples,
                                        std::uint64_t seed = 0);

// The eight-vertex form a+4, a+5, a+6, a+9, a-8, a-5, a-4, a-3 (mod n).
std::vector<Vertex> eight_vertex_formula(int n, Vertex a);

// Common blue neighbors of a and a+1 equal the eight-vertex form, the two
// halves are symmetric about edge (a, a+1), and no pair among the eight is
// a flipped edge. With allow_deleted, deleted vertices are restored first.
CheckReport verify_eight_common_neighbors(const Coloring& c, Vertex a,
                                          bool allow_deleted);

// No flipped edge of c lies in a monochromatic K5 of its current color.
CheckReport verify_flip_edges_blue_safe(const Coloring& c);
CheckReport verify_flip_edges_blue_safe();

// The Exoo42 flips with vertex 0 kept and edge (0,1) also flipped: the blue K5s
// through (0,1).
std::vector<Clique> flip_counterfactual_cliques();
CheckReport verify_flip_counterfactual();

// Images of vs under v -> v + t and v -> t - v (mod n), each sorted.
std::set<std::vector<Vertex>> dihedral_orbit(int n,
                                             const std::vector<Vertex>& vs);
// Lexicographically least element of the dihedral orbit.
std::vector<Vertex> canonical_form(int n, const std::vector<Vertex>& vs);

// k-cliques containing vertex 1 whose minimum circular gap is attained by
// the step from 1 to the next clique vertex clockwise and is at most
// floor(n/k). Throws std::invalid_argument for colorings with flips or
// deletions.
std::vector<Clique> standard_enumerate(const Coloring& c, EdgeColor color,
                                       int k = 5);

// Dihedral orbits of the standard cliques cover exactly the engine's
// k-cliques of the color.
CheckReport verify_standard_reduction(const Coloring& c, EdgeColor color,
                                      int k = 5);

struct DiagramOptions {
  bool mark_common = true;
};

// Text diagram: tens and units header rows for columns 1..n (column j is
// vertex j mod n), then one row per listed vertex with 'o' at the vertex,
// 'x' at its neighbors in the color ('X' for flipped edges), and a final
// 'E' row where every listed row is marked. Every line is n characters.
std::string render_diagram(const Coloring& c, EdgeColor color,
                           const std::vector<Vertex>& rows,
                           DiagramOptions options = {});

// Vertices marked 'x' or 'X' in one rendered row.
VertexMask parse_diagram_row(std::string_view row, int n);

// Every check applicable to the coloring described by spec.
std::vector<CheckReport> run_lemma_suite(const ColoringSpec& spec);

}  // namespace ramsey

#endif  // RAMSEY_PROOF_REPLAY_H_

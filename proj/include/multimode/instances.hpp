#pragma once

#include <string>
#include <vector>

#include "multimode/graph.hpp"
#include "multimode/random.hpp"

namespace mm {

using BitVector = std::vector<std::uint8_t>;

struct OvInstance {
    std::vector<BitVector> A;
    std::vector<BitVector> B;
    int d = 1;

    int na() const { return static_cast<int>(A.size()); }
    int nb() const { return static_cast<int>(B.size()); }
};

// Throws std::invalid_argument on ragged vectors, non-boolean entries or d < 1.
void validate(const OvInstance& ov);

// i.i.d. Bernoulli(p) entries.
OvInstance random_ov(int na, int nb, int d, double p, Rng& rng);

bool orthogonal(const BitVector& a, const BitVector& b);
// Some a in A, b in B with a.b = 0.
bool solve_ov(const OvInstance& ov);
// Some a in A with a.b != 0 for every b in B.
bool solve_hse(const OvInstance& ov);

// Undirected single-mode graph on A, then B, then U = [d]; a_i is vertex i, b_j is
// |A| + j, coordinate c is |A| + |B| + c.
MultimodeGraph build_gov(const OvInstance& ov);

struct DagGadget {
    int size = 0;
    std::vector<Edge> edges;  // mode 0, unit weight
    VertexSet order;          // topological order of all gadget vertices
    VertexSet embedded;       // gadget id of the i-th input vertex
};

// Gadget ids are 0..size-1. Every x before y in `order` has d(x, y) <= 2.
DagGadget dag_gadget(int count);

enum class LabelKind { Diameter, Radius, StDiameter };
enum class Relation { Eq, Le, Ge };

struct Label {
    LabelKind kind = LabelKind::Diameter;
    Relation rel = Relation::Eq;
    Dist value = 0;

    bool holds(Dist measured) const;
    // "l <kind> <relation> <value>"
    std::string sidecar() const;
};

Label parse_label(const std::string& line);
std::string kind_str(LabelKind k);
std::string relation_str(Relation r);

struct LabeledInstance {
    MultimodeGraph graph;
    std::string family;
    Label label;
    bool answer = false;  // the OV or HSE bit
    // Only for st-diameter labels, measured in mode 0.
    VertexSet S, T;
};

const std::vector<std::string>& family_names();

struct GenOptions {
    // The 3-mode DAG diameter family exactly as first written, with green arcs from
    // the A gadget into the B gadget. Its YES case can have finite diameter.
    bool verbatim_3mode_dag = false;
};

LabeledInstance gen_lower_bound_instance(const std::string& family, const OvInstance& ov,
                                         const GenOptions& opt = {});

}  // namespace mm

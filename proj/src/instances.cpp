#include "multimode/instances.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mm {

void validate(const OvInstance& ov) {
    if (ov.d < 1) throw std::invalid_argument("vector dimension must be at least 1");
    for (const auto* list : {&ov.A, &ov.B})
        for (const auto& v : *list) {
            if (static_cast<int>(v.size()) != ov.d) throw std::invalid_argument("vector length differs from d");
            for (auto x : v)
                if (x > 1) throw std::invalid_argument("vector entries must be 0 or 1");
        }
}

OvInstance random_ov(int na, int nb, int d, double p, Rng& rng) {
    if (na < 0 || nb < 0 || d < 1) throw std::invalid_argument("bad OV shape");
    std::bernoulli_distribution bit(p);
    OvInstance ov;
    ov.d = d;
    auto fill = [&](std::vector<BitVector>& list, int count) {
        list.assign(count, BitVector(d));
        for (auto& v : list)
            for (auto& x : v) x = bit(rng) ? 1 : 0;
    };
    fill(ov.A, na);
    fill(ov.B, nb);
    return ov;
}

bool orthogonal(const BitVector& a, const BitVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

bool solve_ov(const OvInstance& ov) {
    for (const auto& a : ov.A)
        for (const auto& b : ov.B)
            if (orthogonal(a, b)) return true;
    return false;
}

bool solve_hse(const OvInstance& ov) {
    for (const auto& a : ov.A) {
        bool hits = true;
        for (const auto& b : ov.B)
            if (orthogonal(a, b)) { hits = false; break; }
        if (hits) return true;
    }
    return false;
}

DagGadget dag_gadget(int count) {
    if (count < 1) throw std::invalid_argument("gadget needs at least one vertex");
    DagGadget g;
    g.size = count;
    g.embedded.resize(count);
    for (int i = 0; i < count; ++i) g.embedded[i] = i;
    // Halve the list, put a hub between the halves: everything on the left feeds the hub,
    // the hub feeds everything on the right.
    auto build = [&](auto&& self, int lo, int hi) -> VertexSet {
        if (hi - lo == 1) return {lo};
        int mid = lo + (hi - lo) / 2;
        VertexSet left = self(self, lo, mid);
        VertexSet right = self(self, mid, hi);
        Vertex h = g.size++;
        for (Vertex x : left) g.edges.push_back({0, x, h, 1});
        for (Vertex y : right) g.edges.push_back({0, h, y, 1});
        left.push_back(h);
        left.insert(left.end(), right.begin(), right.end());
        return left;
    };
    g.order = build(build, 0, count);
    return g;
}

bool Label::holds(Dist measured) const {
    switch (rel) {
        case Relation::Eq: return measured == value;
        case Relation::Le: return measured <= value;
        case Relation::Ge: return measured >= value;
    }
    return false;
}

std::string kind_str(LabelKind k) {
    switch (k) {
        case LabelKind::Diameter: return "diameter";
        case LabelKind::Radius: return "radius";
        case LabelKind::StDiameter: return "st-diameter";
    }
    return "?";
}

std::string relation_str(Relation r) {
    switch (r) {
        case Relation::Eq: return "=";
        case Relation::Le: return "<=";
        case Relation::Ge: return ">=";
    }
    return "?";
}

std::string Label::sidecar() const {
    return "l " + kind_str(kind) + " " + relation_str(rel) + " " + dist_str(value);
}

Label parse_label(const std::string& line) {
    std::istringstream in(line);
    std::string tag, kind, rel, value, extra;
    if (!(in >> tag >> kind >> rel >> value) || tag != "l" || (in >> extra))
        throw std::invalid_argument("label line must read 'l <kind> <relation> <value>'");
    Label l;
    if (kind == "diameter") l.kind = LabelKind::Diameter;
    else if (kind == "radius") l.kind = LabelKind::Radius;
    else if (kind == "st-diameter") l.kind = LabelKind::StDiameter;
    else throw std::invalid_argument("unknown label kind '" + kind + "'");
    if (rel == "=") l.rel = Relation::Eq;
    else if (rel == "<=") l.rel = Relation::Le;
    else if (rel == ">=") l.rel = Relation::Ge;
    else throw std::invalid_argument("unknown label relation '" + rel + "'");
    if (value == "inf") {
        l.value = kInf;
    } else {
        std::size_t used = 0;
        try {
            l.value = std::stoll(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != value.size() || l.value < 0) throw std::invalid_argument("bad label value '" + value + "'");
    }
    return l;
}

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names{
        "diam-2mode-undirected", "diam-3mode-dag",  "diam-logmode",
        "stdiam-l2",             "radius-2mode-directed", "radius-3mode-dag",
        "radius-2mode-dag",      "radius-2mode-undirected", "radius-logmode"};
    return names;
}

namespace {

// Vertex bookkeeping shared by every family: A, then B, then U, then extras.
struct Layout {
    const OvInstance& ov;
    int total;
    std::vector<Edge> edges;

    explicit Layout(const OvInstance& o) : ov(o), total(o.na() + o.nb() + o.d) {}

    Vertex a(int i) const { return i; }
    Vertex b(int j) const { return ov.na() + j; }
    Vertex u(int c) const { return ov.na() + ov.nb() + c; }
    Vertex fresh() { return total++; }

    void add(int mode, Vertex x, Vertex y) { edges.push_back({mode, x, y, 1}); }

    // Edges of G_OV; oriented A -> U -> B when the caller builds a digraph.
    void ov_edges(int mode) {
        for (int i = 0; i < ov.na(); ++i)
            for (int c = 0; c < ov.d; ++c)
                if (ov.A[i][c]) add(mode, a(i), u(c));
        for (int j = 0; j < ov.nb(); ++j)
            for (int c = 0; c < ov.d; ++c)
                if (ov.B[j][c]) add(mode, u(c), b(j));
    }

    // Places a gadget over `list`; returns the graph id of every gadget vertex, indexed
    // by gadget id. Hubs get fresh ids.
    VertexSet gadget(const VertexSet& list, DagGadget& dg) {
        dg = dag_gadget(static_cast<int>(list.size()));
        VertexSet id(dg.size);
        for (int i = 0; i < static_cast<int>(list.size()); ++i) id[dg.embedded[i]] = list[i];
        for (int h = static_cast<int>(list.size()); h < dg.size; ++h) id[h] = fresh();
        return id;
    }

    void gadget_arcs(const DagGadget& dg, const VertexSet& id, int mode, bool reversed) {
        for (const auto& e : dg.edges) {
            if (reversed) add(mode, id[e.v], id[e.u]);
            else add(mode, id[e.u], id[e.v]);
        }
    }

    VertexSet range(Vertex lo, int count) const {
        VertexSet s(count);
        for (int i = 0; i < count; ++i) s[i] = lo + i;
        return s;
    }
    VertexSet As() const { return range(0, ov.na()); }
    VertexSet Bs() const { return range(ov.na(), ov.nb()); }
    VertexSet Us() const { return range(ov.na() + ov.nb(), ov.d); }
};

VertexSet hubs_of(const VertexSet& id, int embedded) { return VertexSet(id.begin() + embedded, id.end()); }

LabeledInstance diam_2mode_undirected(const OvInstance& ov) {
    Layout L(ov);
    Vertex x = L.fresh(), y = L.fresh();
    L.ov_edges(0);
    for (Vertex a : L.As()) L.add(0, y, a);
    for (Vertex b : L.Bs()) L.add(0, x, b);
    for (Vertex a : L.As()) L.add(1, x, a);
    for (Vertex u : L.Us()) {
        L.add(1, x, u);
        L.add(1, y, u);
    }
    for (Vertex b : L.Bs()) L.add(1, y, b);
    LabeledInstance out;
    out.graph = build_graph(L.total, 2, false, L.edges);
    out.answer = solve_ov(ov);
    out.label = out.answer ? Label{LabelKind::Diameter, Relation::Ge, 4} : Label{LabelKind::Diameter, Relation::Eq, 2};
    return out;
}

LabeledInstance diam_3mode_dag(const OvInstance& ov, bool verbatim) {
    Layout L(ov);
    DagGadget ga, gb, gu;
    VertexSet ia = L.gadget(L.As(), ga);
    VertexSet ib = L.gadget(L.Bs(), gb);
    VertexSet iu = L.gadget(L.Us(), gu);
    Vertex x = L.fresh();
    VertexSet hubA = hubs_of(ia, ov.na()), hubB = hubs_of(ib, ov.nb());

    // red
    L.ov_edges(0);
    for (Vertex h : hubA) L.add(0, h, x);
    for (Vertex v : ib) L.add(0, x, v);
    if (!verbatim)
        for (Vertex a : L.As())
            for (Vertex h : hubB) L.add(0, a, h);
    // blue
    L.gadget_arcs(ga, ia, 1, false);
    L.gadget_arcs(gb, ib, 1, false);
    L.gadget_arcs(gu, iu, 1, false);
    for (const auto* side : {&ia, &ib})
        for (Vertex v : *side)
            for (Vertex u : iu) L.add(1, v, u);
    for (Vertex v : ib) L.add(1, v, x);
    for (Vertex v : ia) L.add(1, x, v);
    // green
    L.gadget_arcs(ga, ia, 2, true);
    L.gadget_arcs(gb, ib, 2, true);
    L.gadget_arcs(gu, iu, 2, true);
    for (Vertex u : iu)
        for (const auto* side : {&ia, &ib})
            for (Vertex v : *side) L.add(2, u, v);
    for (Vertex v : ia) L.add(2, v, x);
    if (verbatim)
        for (Vertex v : ia)
            for (Vertex h : hubB) L.add(2, v, h);

    LabeledInstance out;
    out.graph = build_graph(L.total, 3, true, L.edges);
    out.answer = solve_ov(ov);
    out.label = out.answer ? Label{LabelKind::Diameter, Relation::Eq, kInf} : Label{LabelKind::Diameter, Relation::Eq, 2};
    return out;
}

LabeledInstance diam_logmode(const OvInstance& ov) {
    Layout L(ov);
    const int d = ov.d;
    for (int i = 0; i < ov.na(); ++i)
        for (int c = 0; c < d; ++c)
            if (ov.A[i][c]) L.add(c, L.a(i), L.u(c));
    for (int j = 0; j < ov.nb(); ++j)
        for (int c = 0; c < d; ++c)
            if (ov.B[j][c]) L.add(c, L.u(c), L.b(j));
    for (Vertex a : L.As())
        for (Vertex u : L.Us()) L.add(d, a, u);
    for (Vertex u : L.Us())
        for (Vertex b : L.Bs()) L.add(d + 1, u, b);
    LabeledInstance out;
    out.graph = build_graph(L.total, d + 2, false, L.edges);
    out.answer = solve_ov(ov);
    out.label = out.answer ? Label{LabelKind::Diameter, Relation::Eq, kInf} : Label{LabelKind::Diameter, Relation::Eq, 2};
    return out;
}

// G_OV with S = A, T = B in mode 0, lifted to three modes by a vertex x joined to
// everything outside T in mode 1 and outside S in mode 2.
LabeledInstance stdiam_l2(const OvInstance& ov) {
    Layout L(ov);
    const int base = L.total;
    Vertex x = L.fresh();
    L.ov_edges(0);
    for (Vertex v = 0; v < base; ++v) {
        bool in_s = v < ov.na();
        bool in_t = v >= ov.na() && v < ov.na() + ov.nb();
        if (!in_t) L.add(1, x, v);
        if (!in_s) L.add(2, x, v);
    }
    LabeledInstance out;
    out.graph = build_graph(L.total, 3, false, L.edges);
    out.answer = solve_ov(ov);
    out.label = out.answer ? Label{LabelKind::StDiameter, Relation::Ge, 4} : Label{LabelKind::StDiameter, Relation::Eq, 2};
    out.S = L.As();
    out.T = L.Bs();
    return out;
}

Label radius_label(bool hse, Dist no_value, Relation no_rel) {
    return hse ? Label{LabelKind::Radius, Relation::Le, 2} : Label{LabelKind::Radius, no_rel, no_value};
}

LabeledInstance radius_2mode_directed(const OvInstance& ov) {
    Layout L(ov);
    Vertex x = L.fresh();
    L.ov_edges(0);
    for (Vertex a : L.As()) {
        for (Vertex u : L.Us()) L.add(1, a, u);
        L.add(1, a, x);
        L.add(1, x, a);
    }
    LabeledInstance out;
    out.graph = build_graph(L.total, 2, true, L.edges);
    out.answer = solve_hse(ov);
    out.label = radius_label(out.answer, kInf, Relation::Eq);
    return out;
}

LabeledInstance radius_3mode_dag(const OvInstance& ov) {
    Layout L(ov);
    DagGadget g1, g2;
    VertexSet i1 = L.gadget(L.As(), g1);
    VertexSet i2 = L.gadget(L.As(), g2);
    L.ov_edges(0);
    L.gadget_arcs(g1, i1, 1, false);
    L.gadget_arcs(g2, i2, 1, false);
    for (Vertex a : L.As())
        for (Vertex u : L.Us()) L.add(1, a, u);
    L.gadget_arcs(g1, i1, 2, true);
    L.gadget_arcs(g2, i2, 2, true);
    LabeledInstance out;
    out.graph = build_graph(L.total, 3, true, L.edges);
    out.answer = solve_hse(ov);
    out.label = radius_label(out.answer, kInf, Relation::Eq);
    return out;
}

LabeledInstance radius_2mode_dag(const OvInstance& ov) {
    Layout L(ov);
    DagGadget g1, g2;
    VertexSet i1 = L.gadget(L.As(), g1);
    VertexSet i2 = L.gadget(L.As(), g2);
    L.ov_edges(0);
    L.gadget_arcs(g1, i1, 0, false);
    L.gadget_arcs(g2, i2, 0, false);
    L.gadget_arcs(g1, i1, 1, true);
    L.gadget_arcs(g2, i2, 1, true);
    for (Vertex a : L.As())
        for (Vertex u : L.Us()) L.add(1, a, u);
    LabeledInstance out;
    out.graph = build_graph(L.total, 2, true, L.edges);
    out.answer = solve_hse(ov);
    out.label = radius_label(out.answer, 4, Relation::Ge);
    return out;
}

LabeledInstance radius_2mode_undirected(const OvInstance& ov) {
    Layout L(ov);
    L.ov_edges(0);
    for (Vertex a : L.As())
        for (Vertex u : L.Us()) L.add(1, a, u);
    LabeledInstance out;
    out.graph = build_graph(L.total, 2, false, L.edges);
    out.answer = solve_hse(ov);
    out.label = radius_label(out.answer, 4, Relation::Ge);
    return out;
}

LabeledInstance radius_logmode(const OvInstance& ov) {
    Layout L(ov);
    const int d = ov.d;
    Vertex x = L.fresh();
    for (int i = 0; i < ov.na(); ++i)
        for (int c = 0; c < d; ++c)
            if (ov.A[i][c]) L.add(c, L.a(i), L.u(c));
    for (int j = 0; j < ov.nb(); ++j)
        for (int c = 0; c < d; ++c)
            if (ov.B[j][c]) L.add(c, L.u(c), L.b(j));
    for (Vertex a : L.As()) {
        for (Vertex u : L.Us()) L.add(d, a, u);
        L.add(d + 1, a, x);
    }
    LabeledInstance out;
    out.graph = build_graph(L.total, d + 2, false, L.edges);
    out.answer = solve_hse(ov);
    out.label = radius_label(out.answer, kInf, Relation::Eq);
    return out;
}

}  // namespace

MultimodeGraph build_gov(const OvInstance& ov) {
    validate(ov);
    Layout L(ov);
    L.ov_edges(0);
    return build_graph(L.total, 1, false, L.edges);
}

LabeledInstance gen_lower_bound_instance(const std::string& family, const OvInstance& ov, const GenOptions& opt) {
    validate(ov);
    if (ov.A.empty() || ov.B.empty()) throw std::invalid_argument("vector lists must be non-empty");
    LabeledInstance out;
    if (family == "diam-2mode-undirected") out = diam_2mode_undirected(ov);
    else if (family == "diam-3mode-dag") out = diam_3mode_dag(ov, opt.verbatim_3mode_dag);
    else if (family == "diam-logmode") out = diam_logmode(ov);
    else if (family == "stdiam-l2") out = stdiam_l2(ov);
    else if (family == "radius-2mode-directed") out = radius_2mode_directed(ov);
    else if (family == "radius-3mode-dag") out = radius_3mode_dag(ov);
    else if (family == "radius-2mode-dag") out = radius_2mode_dag(ov);
    else if (family == "radius-2mode-undirected") out = radius_2mode_undirected(ov);
    else if (family == "radius-logmode") out = radius_logmode(ov);
    else throw std::invalid_argument("unknown family '" + family + "'");
    out.family = family;
    return out;
}

}  // namespace mm

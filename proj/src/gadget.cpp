#include "plcat/gadget.hpp"

#include <algorithm>
#include <sstream>

#include "plcat/collapse.hpp"
#include "plcat/homology.hpp"

namespace plcat {

namespace {

std::string sphere_vertex(int i, int corner) {
    return "s" + std::to_string(i) + "_" + std::to_string(corner);
}

bool mask_is_2_sphere(const Complex2& k, const SubcomplexMask& m, std::string& detail) {
    if (m.triangles.none()) {
        detail = "no triangles";
        return false;
    }
    Subcomplex s = restrict_to(k, m);
    if (!s.complex.is_connected()) {
        detail = "not connected";
        return false;
    }
    if (!is_pure(s.complex) || s.complex.dimension() != 2) {
        detail = "not pure 2-dimensional";
        return false;
    }
    for (const auto& tris : s.complex.edge_triangles)
        if (tris.size() != 2) {
            detail = "an edge is not in exactly 2 triangles";
            return false;
        }
    Betti b = betti(s.complex);
    if (!(b == Betti{1, 0, 1})) {
        std::ostringstream os;
        os << "betti (" << b.b0 << "," << b.b1 << "," << b.b2 << ") != (1,0,1)";
        detail = os.str();
        return false;
    }
    detail = "";
    return true;
}

}  // namespace

GadgetReport verify_gadget_contract(const GadgetComplex& g) {
    GadgetReport report;
    const Complex2& k = g.complex;

    {
        CheckEntry e{"pure_2_dimensional", false, ""};
        if (k.labels.empty()) {
            e.detail = "empty complex";
        } else if (k.dimension() != 2) {
            e.detail = "dimension != 2";
        } else if (!is_pure(k)) {
            e.detail = "maximal faces of mixed dimension";
        } else {
            e.pass = true;
        }
        report.checks.push_back(e);
    }

    for (std::size_t i = 0; i < g.spheres.size(); ++i) {
        CheckEntry e{"sphere_" + std::to_string(i + 1) + "_is_2_sphere", false, ""};
        if (!is_valid_subcomplex(k, g.spheres[i])) {
            e.detail = "mask is not a subcomplex";
        } else {
            e.pass = mask_is_2_sphere(k, g.spheres[i], e.detail);
        }
        report.checks.push_back(e);
    }

    {
        CheckEntry e{"spheres_pairwise_disjoint", true, ""};
        for (std::size_t i = 0; i < g.spheres.size() && e.pass; ++i)
            for (std::size_t j = i + 1; j < g.spheres.size(); ++j)
                if (g.spheres[i].vertices.intersects(g.spheres[j].vertices)) {
                    e.pass = false;
                    e.detail = "spheres " + std::to_string(i + 1) + " and " +
                               std::to_string(j + 1) + " share vertices";
                    break;
                }
        report.checks.push_back(e);
    }

    {
        CheckEntry e{"h2_generated_by_spheres", false, ""};
        try {
            e.pass = h2_supported_only_on(k, g.spheres);
            if (!e.pass) e.detail = "kernel of d2 not spanned by the sphere classes";
        } catch (const SpheresNotDisjointError&) {
            e.detail = "spheres overlap";
        }
        report.checks.push_back(e);
    }
    return report;
}

GadgetComplex toy_gadget(int n) {
    if (n < 1) throw Error("toy gadget needs at least one sphere");
    std::vector<std::vector<std::string>> faces;
    for (int i = 1; i <= n; ++i) {
        std::array<std::string, 4> v{sphere_vertex(i, 0), sphere_vertex(i, 1),
                                     sphere_vertex(i, 2), sphere_vertex(i, 3)};
        faces.push_back({v[0], v[1], v[2]});
        faces.push_back({v[0], v[1], v[3]});
        faces.push_back({v[0], v[2], v[3]});
        faces.push_back({v[1], v[2], v[3]});
    }
    // bridge disks: two triangles sharing an edge, pinned to one vertex of
    // each neighboring sphere
    for (int i = 1; i < n; ++i) {
        std::string p = "b" + std::to_string(i) + "_0";
        std::string q = "b" + std::to_string(i) + "_1";
        faces.push_back({sphere_vertex(i, 0), p, q});
        faces.push_back({p, q, sphere_vertex(i + 1, 0)});
    }

    GadgetComplex g;
    g.complex = from_maximal_faces(faces);
    g.provenance = "toy chain of " + std::to_string(n) + " spheres";
    for (int i = 1; i <= n; ++i) {
        std::vector<std::vector<std::string>> sphere_faces;
        std::array<std::string, 4> v{sphere_vertex(i, 0), sphere_vertex(i, 1),
                                     sphere_vertex(i, 2), sphere_vertex(i, 3)};
        sphere_faces.push_back({v[0], v[1], v[2]});
        sphere_faces.push_back({v[0], v[1], v[3]});
        sphere_faces.push_back({v[0], v[2], v[3]});
        sphere_faces.push_back({v[1], v[2], v[3]});
        g.spheres.push_back(mask_from_faces(g.complex, sphere_faces));
    }
    return g;
}

bool removal_witness_check(const GadgetComplex& g, const std::vector<TriangleId>& removed) {
    if (removed.size() != g.spheres.size())
        throw WrongCountError("need exactly one removal per sphere");
    std::vector<bool> used(g.spheres.size(), false);
    for (TriangleId t : removed) {
        if (t < 0 || static_cast<std::size_t>(t) >= g.complex.triangle_count())
            throw TriangleNotInSphereError("triangle id out of range");
        bool found = false;
        for (std::size_t i = 0; i < g.spheres.size(); ++i) {
            if (g.spheres[i].triangles.test(t)) {
                if (used[i]) throw WrongCountError("two removals in one sphere");
                used[i] = true;
                found = true;
                break;
            }
        }
        if (!found) throw TriangleNotInSphereError("removed triangle lies in no sphere");
    }
    SubcomplexMask rest = full_mask(g.complex);
    for (TriangleId t : removed) rest.triangles.reset(t);
    Subcomplex sub = restrict_to(g.complex, rest);
    if (!sub.complex.is_connected()) return false;
    return is_collapsible(sub.complex).has_value();
}

PipelineResult run_pipeline(const Formula& f, const GadgetComplex* gadget) {
    PipelineResult res;
    res.formula = f;
    if (gadget) {
        res.gadget = *gadget;
    } else {
        if (f.num_vars < 1) throw Error("toy gadget pipeline needs at least one variable");
        res.gadget = toy_gadget(f.num_vars);
    }
    res.report = verify_gadget_contract(res.gadget);
    if (!res.report.all_pass()) throw ContractViolationError(res.report);
    res.n = reduced_euler(res.gadget.complex);
    res.enriched = enrich(res.gadget.complex);
    return res;
}

}  // namespace plcat

#ifndef PLCAT_GADGET_HPP
#define PLCAT_GADGET_HPP

#include <string>
#include <vector>

#include "plcat/complex.hpp"
#include "plcat/enrichment.hpp"
#include "plcat/sat.hpp"

namespace plcat {

// Pure 2-complex with one marked 2-sphere per variable.
struct GadgetComplex {
    Complex2 complex;
    std::vector<SubcomplexMask> spheres;
    std::string provenance;
};

struct CheckEntry {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct GadgetReport {
    std::vector<CheckEntry> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Contract every usable gadget must satisfy: pure and 2-dimensional; every
// marked sphere a triangulated 2-sphere; spheres pairwise disjoint; second
// homology generated by the spheres (no 2-cycle outside them).
GadgetReport verify_gadget_contract(const GadgetComplex& g);

// n disjoint boundary-tetrahedron spheres chained through 2-triangle bridge
// disks that touch consecutive spheres in a single vertex each. Passes the
// contract with b2 = n and reduced Euler characteristic n.
GadgetComplex toy_gadget(int n);

// Checks one removal per sphere (distinct spheres, WrongCountError /
// TriangleNotInSphereError otherwise); true iff the complex minus those
// triangles is collapsible.
bool removal_witness_check(const GadgetComplex& g, const std::vector<TriangleId>& removed);

struct ContractViolationError : Error {
    GadgetReport report;
    explicit ContractViolationError(GadgetReport r)
        : Error("gadget contract violated"), report(std::move(r)) {}
};

struct PipelineResult {
    Formula formula;
    GadgetComplex gadget;
    GadgetReport report;
    ComplexPlus enriched;
    int n = 0;  // reduced Euler characteristic of the gadget
};

// Formula -> gadget -> contract check (hard fail) -> enriched complex.
// gadget == nullptr uses the toy gadget with one sphere per variable.
PipelineResult run_pipeline(const Formula& f, const GadgetComplex* gadget = nullptr);

}  // namespace plcat

#endif

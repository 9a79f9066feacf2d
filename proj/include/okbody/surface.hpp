#pragma once

#include <map>
#include <string>
#include <vector>

#include "okbody/linalg.hpp"

namespace okb {

// Divisor class in the chosen Neron-Severi basis; rational coefficients.
using DivisorClass = VecQ;

struct CurveEntry {
    std::string name;
    std::vector<mpz_class> cls; // primitive integer class vector
    mpz_class self_int = 0;
};

// Cone description. The quadratic kind encodes
//   Eff = Nef = { v : v.v >= 0 and v.h >= 0 }
// with an ample witness h (h.h > 0); the polyhedral kind lists effective
// generators and facets plus nef facets, mutually consistent.
struct ConeModel {
    enum class Kind { Polyhedral, Quadratic };
    Kind kind = Kind::Polyhedral;
    std::vector<VecQ> eff_generators;
    std::vector<VecQ> eff_facets;
    std::vector<VecQ> nef_facets;
    VecQ ample; // quadratic kind only
};

// A surface as this library sees it: the lattice with its intersection form,
// the catalog of curves eligible to appear in negative parts, and the cone
// model. The catalog is asserted complete for negative-part supports by the
// model author; incomplete catalogs produce NefTestFailed or wrong output,
// which is the documented garbage-in contract.
struct SurfaceModel {
    int rank = 0;
    std::vector<std::string> basis;
    std::vector<std::vector<mpz_class>> intersection_matrix;
    std::vector<CurveEntry> curves;
    ConeModel cone;

    const CurveEntry* find_curve(const std::string& name) const;
    // Index of the catalog curve whose class equals v, or -1.
    int curve_with_class(const DivisorClass& v) const;
    DivisorClass curve_class(const CurveEntry& e) const;
};

// Exact intersection product v^T Q w.
Rational pair(const SurfaceModel& s, const DivisorClass& v, const DivisorClass& w);

bool is_pseff(const SurfaceModel& s, const DivisorClass& v);
bool is_nef(const SurfaceModel& s, const DivisorClass& v);
bool is_big(const SurfaceModel& s, const DivisorClass& v);

// Full invariant check; returns the list of violations (empty means valid).
std::vector<std::string> validate_surface(const SurfaceModel& s);

// The admissible flag (C, x): the flag curve class and, for each catalog
// curve E passing through x, the local intersection multiplicity
// m_E = ord_x(E|_C) <= E.C.
struct FlagData {
    DivisorClass curve_class;
    std::map<std::string, long> multiplicities;
};

std::vector<std::string> validate_flag(const SurfaceModel& s, const FlagData& flag);

// Exact polyhedral test: do the listed eff and nef descriptions cut out the
// same cone? (Needed by the slice machinery, whose formulas assume Eff = Nef.)
bool eff_equals_nef(const SurfaceModel& s);

} // namespace okb

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "jtube/jalg.h"
#include "jtube/rational.h"

namespace jtube {
namespace riesz {

// Wallach set membership: s in {0, d/2, ..., (r-1)d/2} or s > (r-1)d/2.
bool RieszAdmissible(const jalg::AlgebraDescriptor& a, const Exponent& s);
// Human-readable reason when not admissible, empty otherwise.
std::string WallachViolation(const jalg::AlgebraDescriptor& a, const Exponent& s);

// Im of the boundary value vanishes on E^x_j iff s j in 2Z.
bool ImVanishesOnComponent(const jalg::AlgebraDescriptor& a, const Exponent& s, int j);

struct ComponentRow {
  int index = 0;
  bool vanishes = false;
};

struct DualityRow {
  int k = 0;
  Exponent nu;              // s (k - r/2)
  bool p_integral = false;  // nu in Z
  bool p_component = false; // Im vanishes on E^x_{2k-r}
  bool p_wedge_disjoint = false;
  bool wedge_in_component = false;
  bool consistent = false;
};

enum class Verdict { kVanishesIdentically, kSingularSetOnly, kPartial, kFull };
std::string VerdictName(Verdict v);

struct SupportReport {
  jalg::AlgebraDescriptor algebra;
  Exponent s;
  bool formula_only = false;
  bool wallach_admissible = true;
  std::vector<ComponentRow> components;
  Verdict verdict = Verdict::kFull;
  std::string statement;
  bool double_cone_locality = false;      // vanishes for all j != +-r
  bool in_closed_double_cone = false;     // rank 2 only
  bool in_double_cone_boundary = false;   // rank 2 only
  std::vector<DualityRow> wedge_duality;
};

// Throws ValidationError when s is outside the Wallach set, unless
// parity_only is set: the component and duality tables are parity
// statements in s and remain computable, and the report records that s is
// not admissible.
SupportReport MakeSupportReport(const jalg::AlgebraDescriptor& a, const Exponent& s, bool parity_only = false);

// Evaluates the three predicates independently. For algebras with element
// arithmetic the inclusion W(h_k) in E^x_{2k-r} is audited on random wedge
// points; in formula-only mode it is taken as given.
DualityRow WedgeDualityCheck(const jalg::AlgebraDescriptor& a, const Exponent& s, int k,
                             int wedge_samples = 16, bool parity_only = false);

// Holomorphic Delta(-iz)^{-s} on the tube, normalized to 1 at ie, by
// continuation of log Delta along the segment from e to -iz.
std::complex<double> TildeMuTube(const jalg::JordanAlgebra& a, double s, const ComplexElement& z);
// log Delta(-iz) on the branch used above.
std::complex<double> LogDeltaTube(const jalg::JordanAlgebra& a, const ComplexElement& z);

// |Delta(x)|^{-s} e^{ind(x) s pi i / 2}.
std::complex<double> TildeMuBoundary(const jalg::JordanAlgebra& a, double s, const Element& x,
                                     double tol = 1e-9);

struct BoundaryLimit {
  std::complex<double> value;
  double error_estimate = 0.0;
  int levels = 0;
};

// Richardson extrapolation of TildeMuTube(x + i eps e) as eps -> 0.
BoundaryLimit TubeBoundaryLimit(const jalg::JordanAlgebra& a, double s, const Element& x,
                                int levels = 7);

// |(-i)^{rs} Delta(x)^s mu~_s(x) - 1| with Delta(x) from the determinant
// polynomial and mu~_s(x) from the boundary formula.
double MultIdentityResidual(const jalg::JordanAlgebra& a, int s, const Element& x, double tol = 1e-9);

}  // namespace riesz
}  // namespace jtube

#pragma once

#include <map>
#include <string>
#include <vector>

namespace gf {

enum class VeyVariant { general, relative };
enum class IneqReading { le, ge };  // direction of the p1-vs-r1 constraint

/// One basis monomial: transgression indices ps (strictly increasing) and
/// cocycle indices rs (non-decreasing). degree = 2(sum ps + sum rs) - |ps|.
struct VeyTuple {
  std::vector<int> ps;
  std::vector<int> rs;
  bool relative = false;

  int degree() const;
  std::string str() const;  // e.g. "G1 P1 P1" / "L1 P2"
  bool operator==(const VeyTuple&) const = default;
};

/// All tuples of the given variant and degree m over W_n, deterministically
/// ordered. The two source equations print opposite inequalities between p1
/// and r1; `ineq` selects the reading (the printed defaults are le for the
/// general equation and ge for the relative one).
std::vector<VeyTuple> enumerate_vey(int n, int m, VeyVariant variant,
                                    IneqReading ineq);

struct DimensionTable {
  int n = 1;
  VeyVariant variant = VeyVariant::general;
  IneqReading ineq = IneqReading::le;
  std::map<int, int> counts;  // degree -> count, nonzero entries only
  int bound_lo = 0, bound_hi = 0;
  bool bounds_respected = false;
};

/// Counts per degree over the admissible window, plus the vanishing-range
/// verification. Degrees <= 2n in the relative variant are out of the
/// claimed range of the basis and are not tabulated.
DimensionTable dimension_table(int n, VeyVariant variant, IneqReading ineq);

std::string render(const DimensionTable& t, bool with_tuples = false);

}  // namespace gf

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "egstab/graph.hpp"

namespace egstab {

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr int t_of(int k) { return (k - 1) / 2; }
std::int64_t binom2(std::int64_t x);

/// e(H_{n,k,a}) = C(k-a,2) + a(n-k+a); needs n >= k and 1 <= a < k/2.
std::int64_t h_value(int n, int k, int a);
/// max{C(n-d,2)+d^2, C(ceil((n+1)/2),2)+floor((n-1)/2)^2}; needs d >= 1, n > 2d.
std::int64_t ell_value(int n, int d);

enum class Family { H, G1, G2, G3, G4, G5, G6, G7, G8, F0, F1, F2, F3, F4, F4Prime, FGeneral };
std::string family_name(Family f);

struct LabeledConstruction {
  Graph graph;
  Family family = Family::H;
  int n = 0;
  int k = 0;
  int t = 0;
  // Named parts: "A", "B", "C", "J", "A'", and single vertices "a1", "b1", "c1", "c2", ...
  std::map<std::string, VertexSet> parts;

  VertexSet part(const std::string& name) const;
  int vertex(const std::string& name) const;
};

LabeledConstruction build_H(int n, int k, int a);

/// A component of G-A in a class member.  For the star-forest classes
/// (G3, G4) `pair` is unused; for G5..G8 it names the two A-vertices the
/// component attaches to (indices into A, 0-based so a1 = 0).  `anchor` is
/// the A-index that all leaves of a star with 3+ vertices attach to.
struct ComponentShape {
  int size = 1;
  int p = 0;
  int q = 1;
  int anchor = 0;
};

struct ClassSpec {
  Family cls = Family::G1;
  int n = 0;
  int k = 0;
  int t = -1;  // defaults to t_of(k); the k=7 list uses k=6 classes with t=2
  int b = 0;   // |B| for G2/G3
  int j = 0;   // |J| for G2
  std::vector<ComponentShape> components;
};

/// Edge-maximal member of the class for the given shape.  Throws
/// ParameterError when the shape breaks a class constraint.
LabeledConstruction build_class_member(const ClassSpec& spec);

struct FFamilySpec {
  Family family = Family::F0;
  int t = 4;
  // Removed A-B edges as (A index, B index).
  std::vector<std::pair<int, int>> deletions;
  // FGeneral only.
  int b = 0;
  std::vector<int> a1_set;
  std::vector<int> a2_set;
};

LabeledConstruction build_F_member(const FFamilySpec& spec);

}  // namespace egstab

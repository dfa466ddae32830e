#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stanley/criticality.hpp"
#include "stanley/linext.hpp"
#include "stanley/poset.hpp"

namespace stanley {

class GeometryError : public std::runtime_error {
 public:
  enum class Kind { UnsupportedDirection, BadTotal, NotAFace };
  GeometryError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Coordinates of R^{n-k} are the non-chain element ids.
struct Direction {
  enum class Kind { PlusE, MinusE, Euv };
  Kind kind = Kind::PlusE;
  int j = -1;  // PlusE / MinusE
  int u = -1;  // Euv: (e_u - e_v) / sqrt 2
  int v = -1;

  static Direction plus(int j) { return {Kind::PlusE, j, -1, -1}; }
  static Direction minus(int j) { return {Kind::MinusE, j, -1, -1}; }
  static Direction euv(int u, int v) { return {Kind::Euv, -1, u, v}; }
  friend bool operator==(const Direction&, const Direction&) = default;
  friend auto operator<=>(const Direction&, const Direction&) = default;
};
std::string direction_text(const Direction& d, const Instance* names = nullptr);

// Linear span of a face: the free coordinates plus, for e_uv with y_u < y_v, the
// all-ones vector on the tied interval [y_u, y_v] (o_uv when y_v covers y_u).
struct FaceSpan {
  ElementSet coords;
  ElementSet tie;
  bool has_ouv() const { return !tie.empty(); }
  int rank() const { return coords.size() + (has_ouv() && !tie.subset_of(coords) ? 1 : 0); }
};

FaceSpan face_span(const Poset& p, const ChainConfig& c, int i, const Direction& d);

// Rank of the span of a sum of faces.
int summed_rank(const std::vector<FaceSpan>& faces);

// Every support subset of the canonical collection, at full multiplicity, has a
// summed face of rank at least its size.
bool is_extreme(const Poset& p, const ChainConfig& c, const Direction& d);

enum class DirClause { A, B, C, D, E, F, G, H };
char clause_letter(DirClause c);

struct CertifiedDirection {
  Direction direction;
  DirClause clause;
  int m = -1;  // chain index for the e_j clauses, -1 otherwise
  friend bool operator==(const CertifiedDirection&, const CertifiedDirection&) = default;
};

// Directions whose combinatorial hypotheses hold on the instance, one entry per
// (direction, clause, m). Clauses E and F need a maximal splitting pair; clauses
// G and H read N_+ and N_-, the rest read N_=.
std::vector<CertifiedDirection> certified_directions(const Poset& p, const ChainConfig& c);

struct MixedVolume {
  BigInt numerator;    // extensions with x_m pinned at m + sum_{j<m} kappa_j
  BigInt denominator;  // (n - k)!
};

// kappa must have k + 1 entries summing to n - k. Only the chain of c is used.
MixedVolume mixed_volume(const Poset& p, const ChainConfig& c, const CollectionDescriptor& kappa);

// Multiplicities of the three mixed volumes equal to |N_-|, |N_=|, |N_+|.
CollectionDescriptor variant_collection(int n, const ChainConfig& c, Variant v);

// dim of every sub-sum of the collection is at least its size.
bool mixed_volume_positive_by_dimension(const Poset& p, const ChainConfig& c, const CollectionDescriptor& kappa);

// Facets of the order polytope of the subposet on `s`: minimal elements,
// maximal elements, and cover pairs.
int facet_count(const Poset& p, ElementSet s);

}  // namespace stanley

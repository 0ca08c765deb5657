#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schemoid/schemoid.hpp"

namespace schemoid {

// ---------------------------------------------------------------------------
// Groups

/// Finite group as a multiplication table; element 0 need not be the unit.
struct GroupTable {
  std::vector<std::vector<std::uint32_t>> mul;
  std::size_t order() const { return mul.size(); }
};

/// Returns the unit, or throws ValidationError if the table is not a group.
std::uint32_t check_group(const GroupTable& g);
GroupTable cyclic_group(std::size_t n);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
/// Dihedral group of order 2n: r^i is i, s r^i is n + i.
GroupTable dihedral_group(std::size_t n);
/// Permutations of {0..n-1} in lexicographic order; composition (ab)(x) = a(b(x)).
GroupTable symmetric_group(std::size_t n);
GroupTable quaternion_group();
/// One representative of every isomorphism class of groups of order <= 8,
/// with short names.
std::vector<std::pair<std::string, GroupTable>> small_groups();

/// The group as a one-object category; morphism a∘b = a·b.
FinCat group_category(const GroupTable& g);

// ---------------------------------------------------------------------------
// Association schemes

struct AssociationScheme {
  std::size_t points = 0;
  /// relation[x][y] = class of the pair (x, y).
  std::vector<std::vector<std::uint32_t>> relation;
  std::vector<std::string> labels;
  std::size_t num_classes() const;
};

struct SchemeReport {
  bool ok = true;
  std::vector<std::string> failures;
  /// p^g_{ef} as [e][f][g] when ok.
  std::vector<std::vector<std::vector<std::uint64_t>>> intersection;
};

SchemeReport validate_association_scheme(const AssociationScheme& a);
/// Points are words in {0,1}^n read as integers; class = Hamming distance.
AssociationScheme hamming(std::size_t n);
/// Points are left cosets gH in order of first appearance; classes are
/// G-orbits on pairs in order of first appearance.
AssociationScheme group_case(const GroupTable& g, const std::vector<std::uint32_t>& subgroup);

// ---------------------------------------------------------------------------
// Schemoids

Schemoid discrete(const FinCat& c);
/// Objects = points; morphism x*n + y is (x, y): y → x; blocks = classes.
Schemoid from_association_scheme(const AssociationScheme& a);
/// S~(H): objects = morphisms of H; (h, g): g → h whenever t(h) = t(g);
/// blocks G_f = {(k, l) : k^{-1} l = f}, indexed by f.
Schemoid from_groupoid(const FinCat& h);
/// Objects 0..n; one arrow i → j for i <= j; blocks by length j - i.
/// Identities come first, then arrows by (length, source).
Schemoid truncated_len(std::size_t n);

using Subset = std::uint64_t;

struct PowersetSchemoid {
  Schemoid schemoid;
  std::vector<Subset> objects;      ///< subset of each object
  std::vector<Subset> differences;  ///< V \ U for each block
  std::size_t ground = 0;
};

/// Category of inclusions within `family` (subsets of {0..ground-1}),
/// blocks keyed by V \ U. Objects and blocks are ordered by (size, lex).
/// Throws ValidationError when the family does not give a schemoid.
PowersetSchemoid powerset_difference(std::vector<Subset> family, std::size_t ground);
std::vector<Subset> full_powerset(std::size_t ground);

struct SimplicialComplex {
  std::size_t vertices = 0;
  std::vector<Subset> faces;  ///< non-empty faces
};

/// Checks downward closure and vertex range; throws ValidationError with the
/// offending face.
void check_complex(const SimplicialComplex& k);
/// Adds all non-empty subsets of the given faces.
SimplicialComplex closure(std::size_t vertices, const std::vector<Subset>& generators);
/// Every simplicial complex on the vertex set {0..n-1} (any downward-closed
/// family of non-empty subsets).
std::vector<SimplicialComplex> all_complexes(std::size_t n);

/// P(K) with the empty face as initial object.
PowersetSchemoid simplicial_schemoid(const SimplicialComplex& k);

struct FiniteSpace {
  std::size_t points = 0;
  std::vector<Subset> opens;
};
void check_topology(const FiniteSpace& x);
PowersetSchemoid open_set_schemoid(const FiniteSpace& x);

/// Display name for a subset, with 1-based element names: "{}", "{1,3}".
std::string subset_name(Subset s);

// ---------------------------------------------------------------------------
// Morphisms between constructed schemoids

/// U ↦ |U| into truncated_len(ground).
SchemoidMorphism height_morphism(const PowersetSchemoid& p);
/// U ↦ indicator vector in the n-fold power of truncated_len(1).
SchemoidMorphism indicator_morphism(const PowersetSchemoid& p);

struct SimplicialMapResult {
  std::optional<SchemoidMorphism> morphism;
  std::string rejection;  ///< witness when rejected
  bool ok() const { return morphism.has_value(); }
};

/// Vertex map f: K → L. Rejects non-simplicial maps, components that are
/// neither non-degenerate nor constant, and maps whose P(f) fails the block
/// condition.
SimplicialMapResult simplicial_map_morphism(const SimplicialComplex& k, const SimplicialComplex& l,
                                            const std::vector<std::uint32_t>& f);
/// True when f is injective on every face of k.
bool non_degenerate(const SimplicialComplex& k, const std::vector<std::uint32_t>& f);

/// f: X → Y continuous gives U ↦ f^{-1}(U) from Open_Y to Open_X.
/// Throws ValidationError naming an open set with non-open preimage.
SchemoidMorphism continuous_map_morphism(const FiniteSpace& x, const FiniteSpace& y,
                                         const std::vector<std::uint32_t>& f);

// ---------------------------------------------------------------------------
// The Hamming witnesses

/// u: S~(Z/2) → iota(H(n,2)), 0 ↦ 0..0, 1 ↦ 0..01.
SchemoidMorphism hamming_u(SchemoidPtr sz2, SchemoidPtr hn);
/// v: iota(H(n,2)) → S~(Z/2), word ↦ parity. With `swapped` the two
/// objects of S~(Z/2) trade places (still a morphism, but v∘u is no longer
/// the identity).
SchemoidMorphism hamming_v(SchemoidPtr hn, SchemoidPtr sz2, bool swapped = false);

}  // namespace schemoid

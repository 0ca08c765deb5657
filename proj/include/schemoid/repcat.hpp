#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schemoid/algebra.hpp"
#include "schemoid/schemoid.hpp"

namespace schemoid {

/// A functor from a schemoid into finite-dimensional vector spaces with
/// chosen bases: mats[f] is dims[t(f)] x dims[s(f)].
struct FunctorRep {
  SchemoidPtr schemoid;
  Field field = Field::rationals();
  std::vector<std::size_t> dims;
  std::vector<Matrix> mats;

  /// Expands one matrix per block to every member; identity blocks may be
  /// omitted from `block_mats` (they get identity matrices).
  static FunctorRep from_blocks(SchemoidPtr s, Field k, std::vector<std::size_t> dims,
                                const std::map<BlockId, Matrix>& block_mats);
  /// Every object gets dimension d and every morphism the identity.
  static FunctorRep constant(SchemoidPtr s, Field k, std::size_t d = 1);
  static FunctorRep zero(SchemoidPtr s, Field k);

  /// Matrix of the first member of block b.
  const Matrix& block_mat(BlockId b) const { return mats[schemoid->block(b).front()]; }
  std::size_t total_dim() const;
  friend bool operator==(const FunctorRep& a, const FunctorRep& b) {
    return a.field == b.field && a.dims == b.dims && a.mats == b.mats;
  }
};

/// Empty when valid; otherwise the first failed check with its witness.
/// Shape errors throw StructuralError.
std::optional<std::string> rep_defect(const FunctorRep& m);
/// Throws ValidationError with the witness when rep_defect reports one.
void validate_functor_rep(const FunctorRep& m);

/// A natural transformation given by its components, one per object
/// (dims_N[x] x dims_M[x]).
using Components = std::vector<Matrix>;

struct HomSpace {
  std::size_t dimension = 0;
  std::vector<Components> basis;
};

/// Locally constant natural transformations M → N: components agree on
/// objects whose identities share a block.
HomSpace lc_hom(const FunctorRep& m, const FunctorRep& n);
/// All natural transformations M → N (no local-constancy equations).
HomSpace nat_hom(const FunctorRep& m, const FunctorRep& n);
/// Empty when `eta` is a locally constant natural transformation M → N.
std::optional<std::string> lc_nat_defect(const FunctorRep& m, const FunctorRep& n, const Components& eta);
/// An invertible locally constant transformation M → N, if one is found.
/// Exhaustive over small F_p hom spaces, a fixed pseudo-random sample
/// otherwise.
std::optional<Components> rep_isomorphism(const FunctorRep& m, const FunctorRep& n);

// ---------------------------------------------------------------------------
// Modules and the Mitchell correspondence

/// Left module: actions[i] is the matrix of e_i.
struct AlgModule {
  std::shared_ptr<const FDAlgebra> algebra;
  std::size_t dim = 0;
  std::vector<Matrix> actions;
};

std::optional<std::string> module_defect(const AlgModule& m);
/// The module A^r with component-major coordinates (index j*dim A + i).
AlgModule free_module(std::shared_ptr<const FDAlgebra> a, std::size_t r);

/// theta(M): direct sum of M over identity classes (one representative
/// object each) with blocks acting through M. The algebra is the category
/// algebra of the quotient category; throws PreconditionError if not tame.
AlgModule mitchell(const FunctorRep& m);
/// eta(X)(x) = [id_x] X with the pivot-column basis of each idempotent image.
FunctorRep mitchell_inverse(SchemoidPtr s, const AlgModule& x);

// ---------------------------------------------------------------------------
// Restriction and Kan extensions

/// (u*F)(x) = F(u(x)).
FunctorRep restrict(const SchemoidMorphism& u, const FunctorRep& f);
/// Ran_u M via the end over the source; the target must be tame.
FunctorRep kan_right(const SchemoidMorphism& u, const FunctorRep& m);
/// Lan_u M via the coend over the source; the target must be tame.
FunctorRep kan_left(const SchemoidMorphism& u, const FunctorRep& m);

struct AdjunctionDims {
  std::size_t restrict_to_m = 0;  ///< lc_hom(u*F, M)
  std::size_t f_to_ran = 0;       ///< lc_hom(F, Ran M)
  std::size_t lan_to_f = 0;       ///< lc_hom(Lan M, F)
  std::size_t m_to_restrict = 0;  ///< lc_hom(M, u*F)
  bool ok() const { return restrict_to_m == f_to_ran && lan_to_f == m_to_restrict; }
};
AdjunctionDims adjunction_check(const SchemoidMorphism& u, const FunctorRep& m, const FunctorRep& f);

// ---------------------------------------------------------------------------
// Resolutions and Ext

/// Free resolution P_n → ... → P_0 → M. differentials[i] is the matrix of
/// d_{i+1}: P_{i+1} → P_i. generators[0] holds the images in M of the free
/// generators of P_0; generators[i] for i >= 1 holds those of P_i in P_{i-1}.
struct Resolution {
  std::shared_ptr<const FDAlgebra> algebra;
  std::vector<std::size_t> ranks;
  Matrix augmentation;  ///< P_0 → M
  std::vector<std::vector<Vec>> generators;
  std::vector<Matrix> differentials;
};

/// Computes P_0..P_length; checks d^2 = 0 and exactness by rank arithmetic
/// (throws InvariantViolation otherwise).
Resolution projective_resolution(const AlgModule& m, std::size_t length);
/// dim Ext^i_A(M, N) for i = 0..n_max.
std::vector<std::size_t> ext_dims(const AlgModule& m, const AlgModule& n, std::size_t n_max);
/// dim Hom_A(M, N) computed directly.
std::size_t module_hom_dim(const AlgModule& m, const AlgModule& n);

/// H^i(u; M) = Ext^i(theta(constant), theta(Ran_u M)) on the tame target.
std::vector<std::size_t> schemoid_cohomology(const SchemoidMorphism& u, const FunctorRep& m,
                                             std::size_t n_max);

// ---------------------------------------------------------------------------
// Enumeration and Morita witnesses

struct EnumerationGuard {
  std::uint32_t max_prime = 3;
  std::uint64_t max_candidates = 1'000'000;
  std::size_t max_dim_assignments = 4096;
};

/// Every functor rep over F_p with all dimensions <= dim_bound. Objects
/// forced to share a dimension vary together; order is by dimension vector,
/// then block id, then row-major entries.
std::vector<FunctorRep> enumerate_functor_reps(SchemoidPtr s, Field k, std::size_t dim_bound,
                                               const EnumerationGuard& guard = {});

struct MoritaReport {
  bool clause1 = false;  ///< v∘u is the identity functor
  bool clause2 = false;  ///< u*v* fixes every enumerated rep of D
  bool clause3 = false;  ///< identities give an iso v*u*M → M
  bool clause4 = false;  ///< u*, v* preserve locally constant transformations
  std::string witness;
  std::size_t reps_c = 0, reps_d = 0;
  bool ok() const { return clause1 && clause2 && clause3 && clause4; }
};

/// u: D → C and v: C → D.
MoritaReport morita_witness_check(const SchemoidMorphism& u, const SchemoidMorphism& v, Field k,
                                  std::size_t dim_bound);

// ---------------------------------------------------------------------------
// Bimodules

struct BimoduleResult {
  FunctorRep tensor;  ///< F ⊗_{C1} U on C2
  FunctorRep hom;     ///< hom_U(G) on C1
  std::size_t tensor_to_g = 0;  ///< lc_hom(F ⊗ U, G)
  std::size_t f_to_hom = 0;     ///< lc_hom(F, hom_U(G))
  bool ok() const { return tensor_to_g == f_to_hom; }
};

/// U is a rep on product_schemoid(opposite_schemoid(C1), C2); c1 and c2
/// give the factors.
BimoduleResult bimodule_functors(SchemoidPtr c1, SchemoidPtr c2, const FunctorRep& u,
                                 const FunctorRep& f, const FunctorRep& g);
/// U(x, y) = k[C]([x], [y]) with U(phi, psi)(beta) = [psi] beta [phi], for a
/// tame schemoid.
FunctorRep regular_bimodule(SchemoidPtr s, SchemoidPtr product, Field k);

}  // namespace schemoid

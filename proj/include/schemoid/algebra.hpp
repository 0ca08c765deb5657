#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schemoid/constructors.hpp"
#include "schemoid/field.hpp"
#include "schemoid/matrix.hpp"
#include "schemoid/schemoid.hpp"

namespace schemoid {

using Vec = std::vector<Scalar>;

struct Term {
  std::uint32_t index;
  Scalar coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Finite-dimensional associative unital algebra given by a basis and a
/// sparse structure tensor e_i e_j = sum_k c^k_{ij} e_k.
class FDAlgebra {
public:
  /// Finds the unit by solving linear equations; throws ValidationError if
  /// there is none. Coefficients are normalised into the field.
  /// A supplied unit is verified instead of solved for.
  FDAlgebra(Field k, std::vector<std::string> labels, std::vector<std::vector<Term>> products,
            std::optional<Vec> unit = std::nullopt);

  const Field& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Non-zero terms of e_i e_j.
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return tensor_[i * dim() + j]; }
  const Vec& unit() const { return unit_; }

  Vec basis_vector(std::size_t i) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  /// Matrix of x ↦ e_i x (column j = coordinates of e_i e_j).
  Matrix left_mult(std::size_t i) const;
  /// Matrix of x ↦ x e_i.
  Matrix right_mult(std::size_t i) const;
  bool is_commutative() const;

private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Term>> tensor_;
  Vec unit_;
};

/// nullopt when the tensor is associative (checked on all basis triples).
std::optional<std::string> associativity_defect(const FDAlgebra& a);

/// R C: basis = morphisms, e_g e_f = e_{g∘f} when composable, else 0.
FDAlgebra category_algebra(const FinCat& c, const Field& k, std::vector<std::string> labels = {});
/// Bose-Mesner algebra on block sums via the cached structure constants.
FDAlgebra bose_mesner(const Schemoid& s, const Field& k);
/// Expands (sum sigma)(sum tau) in the category algebra and compares with
/// sum_mu p^mu_{sigma tau} (sum mu). nullopt when every pair agrees.
std::optional<std::string> bose_mesner_relation_defect(const Schemoid& s);
/// The algebra of the linear category R-[C]: basis = blocks, products via the
/// structure constants when the endpoints match in [C]. Requires a unital
/// schemoid (T(i)); for such schemoids it agrees with the Bose-Mesner algebra.
FDAlgebra quotient_linear_algebra(const Schemoid& s, const Field& k);
/// Category algebra of the quotient category [C] (requires tameness).
FDAlgebra quotient_category_algebra(const Schemoid& s, const Field& k);

// ---------------------------------------------------------------------------
// Algebra maps

struct AlgebraMap {
  Matrix matrix;  ///< dim(target) x dim(source)
};
/// nullopt when the map is multiplicative on basis pairs and preserves units.
std::optional<std::string> algebra_map_defect(const FDAlgebra& src, const FDAlgebra& tgt,
                                              const AlgebraMap& f);

// ---------------------------------------------------------------------------
// Stanley-Reisner comparison

struct SrComparison {
  FDAlgebra sr;          ///< R[K]/(x_i^2), basis = 1 and the face monomials
  FDAlgebra bm;          ///< Bose-Mesner algebra of P(K)
  std::vector<Subset> monomials;  ///< support of each SR basis element (0 = 1)
  AlgebraMap alpha;      ///< x_sigma ↦ sigma~
  bool alpha_is_iso = false;
  std::string defect;    ///< reason when alpha_is_iso is false
};
SrComparison stanley_reisner_mod_squares(const SimplicialComplex& k, const Field& f);

struct SrPullbacks {
  AlgebraMap phi_star;    ///< SR(L) → SR(K)
  AlgebraMap pphi_star;   ///< BM(P(L)) → BM(P(K))
  bool phi_star_multiplicative = false;
  bool pphi_star_multiplicative = false;
  bool commutes = false;  ///< alpha_K phi* = P(phi)* alpha_L entrywise
};
/// phi must be non-degenerate (injective on faces); throws PreconditionError
/// otherwise.
SrPullbacks sr_pullbacks(const SimplicialComplex& k, const SimplicialComplex& l,
                         const std::vector<std::uint32_t>& phi, const Field& f);

// ---------------------------------------------------------------------------
// Invariants

struct CenterResult {
  std::size_t dimension;
  std::vector<Vec> basis;
};
CenterResult center(const FDAlgebra& a);

/// HH^0..HH^{n_max} from the bar cochain complex Hom(A^{⊗k}, A). Refuses
/// dim A > max_dim or a coboundary matrix with more than max_cells entries.
std::vector<std::size_t> hochschild_cohomology(const FDAlgebra& a, std::size_t n_max,
                                               std::size_t max_dim = 12,
                                               std::size_t max_cells = 4'000'000);

struct AlgebraInvariants {
  std::size_t dim = 0;
  bool commutative = false;
  std::size_t center_dim = 0;
  /// dims of R, R^2, R^3, ... down to 0 (or stabilisation), R = radical of
  /// the trace form.
  std::vector<std::size_t> radical_powers;
  std::optional<std::uint64_t> idempotents;  ///< only over small F_p
  friend bool operator==(const AlgebraInvariants&, const AlgebraInvariants&) = default;
};
AlgebraInvariants algebra_invariants(const FDAlgebra& a);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Undetermined };
struct IsoResult {
  IsoVerdict verdict;
  std::optional<AlgebraMap> witness;
  std::string reason;
};
/// Invariant battery, then an exhaustive search over all linear maps when
/// the field is F_p and p^(dim^2) is small, else a basis-permutation search.
IsoResult algebra_iso_bruteforce(const FDAlgebra& a, const FDAlgebra& b);

/// Dimension of the span of vectors of length `dim`.
std::size_t span_dimension(const Field& k, const std::vector<Vec>& vs, std::size_t dim);

}  // namespace schemoid

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "schemoid/fincat.hpp"

namespace schemoid {

using BlockId = std::uint32_t;

/// One entry p^mu_{sigma tau}: the number of pairs (s, t) in sigma x tau with
/// s∘t equal to a fixed member of mu.
struct Constant {
  BlockId sigma, tau, mu;
  std::uint64_t value;
  friend bool operator==(const Constant&, const Constant&) = default;
};

/// First failure of the schemoid axiom: f and g lie in mu but have different
/// numbers of factorizations through sigma x tau.
struct AxiomWitness {
  BlockId sigma, tau, mu;
  MorId f, g;
  std::uint64_t count_f, count_g;
  std::string describe() const;
};

class Schemoid;

struct SchemoidValidation {
  std::optional<AxiomWitness> violation;
  std::shared_ptr<const Schemoid> schemoid;  ///< set iff violation is empty
  bool ok() const { return !violation.has_value(); }
};

/// A finite category with a partition of its morphisms satisfying the
/// schemoid axiom, with cached structure constants.
///
/// Composition convention: p^mu_{sigma tau} counts pairs (s, t) with s in
/// sigma, t in tau, s(s) = t(t) and s∘t = h for a fixed h in mu.
class Schemoid {
public:
  /// Checks the partition (structural errors throw) and the axiom (throws
  /// ValidationError with the witness).
  static Schemoid make(FinCat cat, std::vector<std::vector<MorId>> blocks);

  const FinCat& cat() const { return cat_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  const std::vector<MorId>& block(BlockId b) const { return blocks_[b]; }
  const std::vector<std::vector<MorId>>& blocks() const { return blocks_; }
  BlockId block_of(MorId m) const { return block_of_[m]; }
  const std::vector<BlockId>& block_of() const { return block_of_; }

  /// Sparse table sorted by (sigma, tau, mu); absent entries are 0.
  const std::vector<Constant>& constants() const { return constants_; }
  std::uint64_t constant(BlockId sigma, BlockId tau, BlockId mu) const;

  /// Optional display names (empty when not set).
  const std::vector<std::string>& object_labels() const { return object_labels_; }
  const std::vector<std::string>& block_labels() const { return block_labels_; }
  Schemoid& set_object_labels(std::vector<std::string> l);
  Schemoid& set_block_labels(std::vector<std::string> l);
  std::string block_name(BlockId b) const;
  std::string object_name(ObjId x) const;

  /// Identity classes: x ~ y iff id_x and id_y share a block. Classes are
  /// numbered by their smallest member.
  std::size_t num_identity_classes() const { return class_members_.size(); }
  std::uint32_t identity_class(ObjId x) const { return class_of_[x]; }
  const std::vector<ObjId>& class_members(std::uint32_t c) const { return class_members_[c]; }

private:
  friend SchemoidValidation validate_schemoid(FinCat cat, std::vector<std::vector<MorId>> blocks);
  Schemoid() = default;

  FinCat cat_;
  std::vector<std::vector<MorId>> blocks_;
  std::vector<BlockId> block_of_;
  std::vector<Constant> constants_;
  std::map<std::tuple<BlockId, BlockId, BlockId>, std::uint64_t> lookup_;
  std::vector<std::string> object_labels_, block_labels_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::vector<ObjId>> class_members_;
};

using SchemoidPtr = std::shared_ptr<const Schemoid>;

/// Partition errors throw StructuralError; an axiom failure is reported with
/// the first witness in (sigma, tau, mu) order.
SchemoidValidation validate_schemoid(FinCat cat, std::vector<std::vector<MorId>> blocks);

/// Brute-force fiber counts, independent of the cached table: for every
/// (sigma, tau, h) the number of pairs in sigma x tau composing to h.
std::uint64_t factorization_count(const Schemoid& s, BlockId sigma, BlockId tau, MorId h);

// ---------------------------------------------------------------------------
// Tameness and the quotient category

struct TiiiFailure {
  BlockId sigma, tau;  ///< sigma: [x]→[y], tau: [y]→[z]
  bool no_composable_pair;
  std::vector<BlockId> products;  ///< blocks mu with p^mu_{tau sigma} >= 1
  std::string describe(const Schemoid& s) const;
};

struct TamenessReport {
  bool unital = false;
  bool tii_holds = false;
  std::string tii_witness;
  bool tiii_holds = false;
  std::vector<TiiiFailure> tiii_failures;
  /// mu(tau, sigma) for every composable pair of [C] morphisms, when tame.
  std::map<std::pair<BlockId, BlockId>, BlockId> product;
  bool tame = false;
  std::string unital_witness;
};

TamenessReport tameness_report(const Schemoid& s);

struct Quotient {
  FinCat category;                   ///< morphism index = block id
  std::vector<std::uint32_t> object_of;  ///< object of [C] for each object of C
  TamenessReport report;
};

/// [C] for a tame schemoid; throws PreconditionError (with the report
/// summary) otherwise.
Quotient quotient_category(const Schemoid& s);

// ---------------------------------------------------------------------------
// Morphisms

struct SchemoidMorphism {
  SchemoidPtr source;
  SchemoidPtr target;
  Functor functor;
  std::vector<BlockId> block_map;
};

/// Checks functoriality and that each source block lands in a single target
/// block. Throws ValidationError carrying the witness.
SchemoidMorphism validate_morphism(SchemoidPtr source, SchemoidPtr target, Functor u);
SchemoidMorphism identity_morphism(SchemoidPtr s);
/// g∘f.
SchemoidMorphism compose_morphisms(const SchemoidMorphism& g, const SchemoidMorphism& f);

/// The functor [u]: [C] → [D] between quotients (both tame).
Functor quotient_functor(const SchemoidMorphism& u, const Quotient& qc, const Quotient& qd);

// ---------------------------------------------------------------------------
// Constructions

/// Blocks are pairs (sigma, sigma') with index sigma*|S'| + sigma'.
Schemoid product_schemoid(const Schemoid& a, const Schemoid& b);
Schemoid opposite_schemoid(const Schemoid& s);
/// n-fold product S x ... x S (n >= 1), nested to the left.
Schemoid power_schemoid(const Schemoid& s, std::size_t n);
/// Singleton blocks on the interval category.
Schemoid interval_schemoid();

/// H: S x I → S'. Returns (H∘eps0, H∘eps1), each validated.
std::pair<SchemoidMorphism, SchemoidMorphism> check_homotopy(SchemoidPtr s,
                                                             const SchemoidMorphism& h);

/// Isomorphism of schemoids: functor bijection carrying blocks onto blocks.
std::optional<Functor> schemoid_isomorphic_bruteforce(const Schemoid& a, const Schemoid& b,
                                                      std::size_t max_objects = 8);

}  // namespace schemoid

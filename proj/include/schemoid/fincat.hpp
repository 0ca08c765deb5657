#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace schemoid {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;

struct Arrow {
  ObjId src = 0;
  ObjId tgt = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Raw category tables as read from a file: compose lists (g, f, g∘f).
struct CategoryData {
  std::size_t objects = 0;
  std::vector<Arrow> morphisms;
  std::vector<MorId> identity;
  std::vector<std::array<MorId, 3>> compose;
};

enum class LawKind { Identity, Endpoints, Closure, Associativity };

struct LawViolation {
  LawKind kind;
  std::string message;
};

struct CategoryReport {
  /// Index errors and malformed tables. When non-empty the laws were not checked.
  std::vector<std::string> structural;
  std::vector<LawViolation> violations;
  bool ok() const { return structural.empty() && violations.empty(); }
  std::string summary() const;
};

/// Checks every category law on raw tables and lists every failure.
CategoryReport validate_category(const CategoryData& data);

/// Immutable finite category. Composites are stored only for composable
/// pairs: the composite of g after f lives at offset_[g] + in_pos_[f].
class FinCat {
public:
  FinCat() = default;

  /// Validates and builds; throws StructuralError / ValidationError.
  static FinCat from_data(const CategoryData& data);

  /// Builds from a composition rule. When `check` is false the rule is
  /// trusted (constructors whose laws hold by construction).
  static FinCat from_rule(std::size_t objects, std::vector<Arrow> morphisms,
                          std::vector<MorId> identity,
                          const std::function<MorId(MorId g, MorId f)>& rule, bool check = true);

  std::size_t num_objects() const { return n_objects_; }
  std::size_t num_morphisms() const { return arrows_.size(); }
  ObjId src(MorId m) const { return arrows_[m].src; }
  ObjId tgt(MorId m) const { return arrows_[m].tgt; }
  const Arrow& arrow(MorId m) const { return arrows_[m]; }
  MorId identity(ObjId x) const { return identity_[x]; }
  bool is_identity(MorId m) const { return identity_[arrows_[m].src] == m; }
  bool composable(MorId g, MorId f) const { return src(g) == tgt(f); }

  /// g∘f; throws PreconditionError when s(g) != t(f).
  MorId compose(MorId g, MorId f) const;
  /// Unchecked variant for hot loops.
  MorId compose_unchecked(MorId g, MorId f) const { return table_[offset_[g] + in_pos_[f]]; }

  /// Morphisms with the given target (resp. source), in index order.
  const std::vector<MorId>& into(ObjId x) const { return in_[x]; }
  const std::vector<MorId>& out_of(ObjId x) const { return out_[x]; }
  std::vector<MorId> hom(ObjId x, ObjId y) const;

  std::size_t composable_pairs() const { return table_.size(); }

  CategoryData data() const;

  friend bool operator==(const FinCat& a, const FinCat& b) {
    return a.n_objects_ == b.n_objects_ && a.arrows_ == b.arrows_ &&
           a.identity_ == b.identity_ && a.table_ == b.table_ && a.offset_ == b.offset_;
  }

private:
  void index_arrows();

  std::size_t n_objects_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<MorId> identity_;
  std::vector<std::vector<MorId>> in_, out_;
  std::vector<std::uint32_t> in_pos_;
  std::vector<std::size_t> offset_;
  std::vector<MorId> table_;
};

/// Law check on a built category (used for rule-built categories).
CategoryReport check_laws(const FinCat& c);

FinCat terminal_category();
/// Objects 0, 1; morphisms id0 = 0, id1 = 1, the arrow 0→1 = 2.
FinCat interval_category();
/// One-object category of a monoid given by its table (table[a][b] = a·b),
/// identity element at index `unit`. Morphism a∘b = a·b.
FinCat monoid_category(const std::vector<std::vector<std::uint32_t>>& table, std::uint32_t unit);

FinCat opposite(const FinCat& c);
/// Objects x*|ob D| + y, morphisms f*|mor D| + g.
FinCat product_category(const FinCat& c, const FinCat& d);

struct Functor {
  std::vector<ObjId> obj;
  std::vector<MorId> mor;
  friend bool operator==(const Functor&, const Functor&) = default;
};

/// nullopt when F: C → D is a functor, else a witness description.
std::optional<std::string> functor_defect(const FinCat& c, const FinCat& d, const Functor& f);
Functor identity_functor(const FinCat& c);
/// g∘f as functors.
Functor compose_functors(const Functor& g, const Functor& f);
/// Projections out of product_category(c, d).
Functor projection_first(const FinCat& c, const FinCat& d);
Functor projection_second(const FinCat& c, const FinCat& d);

/// Bijection search between two categories. Optional colourings of the
/// morphisms must correspond under some bijection of colours (used for block
/// partitions). Returns an isomorphism C → D or nullopt once the search space
/// is exhausted; throws GuardExceeded above `max_objects` objects.
std::optional<Functor> isomorphism_search(const FinCat& c, const FinCat& d,
                                          const std::vector<std::uint32_t>* colour_c,
                                          const std::vector<std::uint32_t>* colour_d,
                                          std::size_t max_objects = 8);

inline std::optional<Functor> category_isomorphism(const FinCat& c, const FinCat& d,
                                                   std::size_t max_objects = 8) {
  return isomorphism_search(c, d, nullptr, nullptr, max_objects);
}

}  // namespace schemoid

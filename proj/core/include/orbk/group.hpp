#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbk {

/// Raised when a multiplication table or action table violates the axioms,
/// or when a group spec cannot be parsed.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for calls that are well-typed but meaningless (wrong degree,
/// non-abelian input where abelian is required, ...).
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Dense element index in [0, order). Index 0 is always the identity.
using Element = int;

inline constexpr int kDefaultOrderCap = 64;

/// A finite group stored as a full multiplication table.
///
/// Copies are cheap: the tables live behind a shared immutable block, so a
/// FiniteGroup can be handed to subgroups, groupoids and cochains by value.
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();

  /// Validates `table` (row = left factor) and relabels so the identity is
  /// index 0. Throws ValidationError naming the failing triple.
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::vector<std::string> labels = {},
                                int order_cap = kDefaultOrderCap);

  static FiniteGroup cyclic(int n);
  static FiniteGroup elementary_abelian(int p, int rank);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                    int order_cap = kDefaultOrderCap);
  static FiniteGroup symmetric(int n);
  /// Dihedral group of order 2n (symmetries of the n-gon).
  static FiniteGroup dihedral(int n);

  int order() const noexcept { return impl_->order; }
  Element identity() const noexcept { return 0; }
  Element mul(Element a, Element b) const noexcept {
    return impl_->mult[static_cast<std::size_t>(a) * impl_->order + b];
  }
  Element inv(Element a) const noexcept { return impl_->inv[a]; }
  /// u^{-1} g u
  Element conj(Element g, Element u) const noexcept { return mul(mul(inv(u), g), u); }
  int element_order(Element g) const;
  int exponent() const;
  bool is_abelian() const noexcept { return impl_->abelian; }
  const std::string& label(Element g) const { return impl_->labels[g]; }

  bool operator==(const FiniteGroup& other) const noexcept;

 private:
  struct Impl {
    int order = 0;
    std::vector<int> mult;
    std::vector<int> inv;
    std::vector<std::string> labels;
    bool abelian = false;
  };
  explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

struct Subgroup {
  FiniteGroup parent;
  std::vector<Element> members;  // sorted, contains 0

  int order() const noexcept { return static_cast<int>(members.size()); }
  bool contains(Element g) const;
  /// Position of a member in `members`, or -1.
  int local_index(Element g) const;
  /// The subgroup as a group in its own right; local index i corresponds to
  /// members[i], so local 0 is still the identity.
  FiniteGroup as_group() const;
};

struct ConjugacyPartition {
  std::vector<std::vector<Element>> classes;  // each sorted, ordered by rep
  std::vector<int> class_of;                  // element -> class index

  Element representative(int cls) const { return classes[cls].front(); }
  int count() const noexcept { return static_cast<int>(classes.size()); }
};

Subgroup centralizer(const FiniteGroup& g, Element x);
ConjugacyPartition conjugacy_classes(const FiniteGroup& g);
Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> gens);
/// Every subgroup, ordered by decreasing order then lexicographically.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

/// A small generating set picked greedily by element index.
std::vector<Element> greedy_generators(const FiniteGroup& g);

/// Homomorphisms G -> (1/denominator)Z/Z, given as numerators mod denominator.
std::vector<std::vector<int>> homomorphisms_to_cyclic(const FiniteGroup& g, int denominator);

/// Explicit isomorphism a -> b as an element map, if one exists.
std::vector<Element> find_group_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

/// Coordinates of each element over F_2 for an elementary abelian 2-group,
/// using a greedy basis. Throws UsageError otherwise.
std::vector<std::vector<int>> f2_coordinates(const FiniteGroup& g);

/// Parses the group-spec text format:
///   `order N` followed by N rows of the table, or the shorthands
///   `cyclic N`, `elemab P N`, `symmetric N`, `dihedral N`,
///   `product <specA> <specB>`.
/// The command-line form `elemab:2,3` and `A*B` products are accepted too.
FiniteGroup parse_group_spec(std::string_view text, int order_cap = kDefaultOrderCap);

}  // namespace orbk

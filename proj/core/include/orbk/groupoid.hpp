#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "orbk/group.hpp"

namespace orbk {

inline constexpr std::int64_t kDefaultArrowCap = 1'000'000;

/// A finite groupoid with fully materialized structure tables.
///
/// Composition is written in diagrammatic order: compose(a, b) is defined
/// when target(a) == source(b) and is the arrow "a then b". For the action
/// groupoid of a right action this is the group product ab.
class FiniteGroupoid {
 public:
  using ComposeFn = std::function<int(int, int)>;

  struct BuildOptions {
    std::int64_t arrow_cap = kDefaultArrowCap;
    /// Associativity is checked exhaustively when the number of composable
    /// triples is at most this bound.
    std::int64_t associativity_check_limit = 5'000'000;
  };

  FiniteGroupoid();

  /// Builds the groupoid from source/target tables and a composition rule,
  /// derives identities and inverses, and validates the axioms.
  static FiniteGroupoid build(int objects, std::vector<int> source, std::vector<int> target,
                              const ComposeFn& compose, const BuildOptions& opts);
  static FiniteGroupoid build(int objects, std::vector<int> source, std::vector<int> target,
                              const ComposeFn& compose) {
    return build(objects, std::move(source), std::move(target), compose, BuildOptions{});
  }

  int object_count() const noexcept { return impl_->objects; }
  int arrow_count() const noexcept { return static_cast<int>(impl_->source.size()); }
  int source(int a) const noexcept { return impl_->source[a]; }
  int target(int a) const noexcept { return impl_->target[a]; }
  int identity(int x) const noexcept { return impl_->identity[x]; }
  int inverse(int a) const noexcept { return impl_->inverse[a]; }
  bool composable(int a, int b) const noexcept { return target(a) == source(b); }
  /// Requires composable(a, b).
  int compose(int a, int b) const noexcept {
    return impl_->comp[impl_->comp_offset[a] + impl_->out_pos[b]];
  }
  std::span<const int> arrows_from(int x) const noexcept {
    return {impl_->out.data() + impl_->out_offset[x],
            impl_->out.data() + impl_->out_offset[x + 1]};
  }
  /// Position of arrow a inside arrows_from(source(a)).
  int out_position(int a) const noexcept { return impl_->out_pos[a]; }
  /// Arrows x -> x.
  std::vector<int> isotropy(int x) const;
  /// Connected components as sorted object lists, ordered by first object.
  std::vector<std::vector<int>> orbits() const;
  std::vector<int> orbit_index() const;

  bool operator==(const FiniteGroupoid& other) const noexcept;

 private:
  struct Impl {
    int objects = 0;
    std::vector<int> source, target, identity, inverse;
    std::vector<int> out, out_offset, out_pos;
    std::vector<std::int64_t> comp_offset;
    std::vector<int> comp;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Action groupoid [X/G] for the right action x.g given as act[x][g].
/// Objects are X, arrow x*|G|+g goes x -> x.g.
FiniteGroupoid action_groupoid(const FiniteGroup& g, const std::vector<std::vector<int>>& act);
/// [*/G]: one object, arrow index = element index.
FiniteGroupoid point_groupoid(const FiniteGroup& g);
/// The isotropy group at x as a FiniteGroup; local index i is arrows[i].
struct IsotropyGroup {
  FiniteGroup group;
  std::vector<int> arrows;
};
IsotropyGroup isotropy_group(const FiniteGroupoid& g, int x);

struct GroupoidHom {
  FiniteGroupoid source;
  FiniteGroupoid target;
  std::vector<int> object_map;
  std::vector<int> arrow_map;
};

/// Checks that `h` commutes with source, target, identities and composition.
bool is_functor(const GroupoidHom& h);
/// Bijective on objects and arrows (and a functor).
bool is_isomorphism(const GroupoidHom& h);
/// Bijective on orbit sets and on every isotropy group.
bool is_equivalence(const GroupoidHom& h);
GroupoidHom compose_homs(const GroupoidHom& first, const GroupoidHom& second);
GroupoidHom identity_hom(const FiniteGroupoid& g);

/// Groupoid of k-sectors: objects are k-tuples of loops at a common base
/// object, arrows append a conjugator u, target is the simultaneous
/// conjugation u^{-1} a_i u. k = 1 is the inertia groupoid.
struct SectorGroupoid {
  FiniteGroupoid base;
  FiniteGroupoid groupoid;
  int k = 0;

  std::span<const int> loops(int object) const {
    return {loop_table.data() + static_cast<std::size_t>(object) * k, static_cast<std::size_t>(k)};
  }
  int base_object(int object) const { return base.source(loops(object)[0]); }
  int conjugator(int arrow) const { return conjugator_table[arrow]; }
  int object_of(std::span<const int> loops) const;
  int arrow_of(int object, int base_arrow) const {
    return arrow_offset[object] + base.out_position(base_arrow);
  }

  std::vector<int> loop_table;
  std::vector<int> conjugator_table;
  std::vector<int> arrow_offset;
  std::vector<int> loop_position;  // base arrow -> index among loops at its object, or -1
  std::vector<int> loops_per_object;
  std::vector<int> object_offset;  // base object -> first sector object
};

SectorGroupoid k_sectors(const FiniteGroupoid& g, int k,
                         std::int64_t arrow_cap = kDefaultArrowCap);
inline SectorGroupoid inertia(const FiniteGroupoid& g) { return k_sectors(g, 1); }

/// e: G -> ∧G, x -> 1_x, u -> (1_{s(u)}, u).
GroupoidHom unit_embedding(const SectorGroupoid& inertia);
/// G -> G^k, x -> (1_x, ..., 1_x).
GroupoidHom identity_section(const SectorGroupoid& sectors);
/// G^k -> G, forgetting the loops.
GroupoidHom base_projection(const SectorGroupoid& sectors);

/// A letter +i / -i (1-based) stands for loop a_i or its inverse.
using SectorWord = std::vector<int>;
/// Map G^k -> G^m sending (a_1..a_k) to the products named by `words`,
/// with conjugators carried over unchanged.
GroupoidHom word_map(const SectorGroupoid& src, const SectorGroupoid& dst,
                     const std::vector<SectorWord>& words);

enum class Evaluation { First, Second, Product, Base };
/// e1(a,b)=a, e2(a,b)=b, e12(a,b)=ab into the inertia groupoid, or the
/// projection to the base groupoid.
GroupoidHom evaluation_hom(Evaluation which, const SectorGroupoid& two_sectors,
                           const SectorGroupoid& inertia);

/// (g1,g2,g3) -> (g2, g3, g3^{-1} g2^{-1} g1 g2 g3) on 3-sectors.
GroupoidHom i3_rotation(const SectorGroupoid& three_sectors);

struct FiberedProduct {
  FiniteGroupoid groupoid;
  struct Object {
    int left, middle, right;  // y, g: f(y) -> g(z), z
  };
  std::vector<Object> objects;
  std::vector<std::pair<int, int>> arrows;  // (h, k)
  GroupoidHom left_projection;
  GroupoidHom right_projection;

  /// -1 when (y; g; z) is not an object.
  int object_index(int left, int middle, int right) const;
  int arrow_of(int object, int h, int k) const;

  std::unordered_map<std::int64_t, int> object_lookup;
  std::vector<int> arrow_offset;
  std::int64_t middle_count = 0;
  std::int64_t right_count = 0;
  FiniteGroupoid left_source, right_source;
};

/// Objects (y; g; z) with g: f(y) -> h(z); arrows (h; k) with
/// g' f(h) = h(k) g. Throws UsageError when the targets differ.
FiberedProduct fibered_product(const GroupoidHom& f, const GroupoidHom& g,
                               std::int64_t arrow_cap = kDefaultArrowCap);

/// Full subgroupoid on the given objects; the hom is the inclusion.
struct FullSubgroupoid {
  FiniteGroupoid groupoid;
  GroupoidHom inclusion;
};
FullSubgroupoid full_subgroupoid(const FiniteGroupoid& g, const std::vector<int>& objects);

/// Canonical functor G^3 -> G^2 x_{e12,e1} G^2,
/// (a,b,c) -> ((a,b); 1_{ab}; (ab,c)), u -> ((a,b,u); (ab,c,u)).
GroupoidHom three_sectors_to_fibered(const SectorGroupoid& three_sectors,
                                     const SectorGroupoid& two_sectors,
                                     const SectorGroupoid& inertia,
                                     const FiberedProduct& product);

/// Isomorphism search: components are matched by size and isotropy
/// signature, isotropy groups by backtracking on generators.
std::optional<GroupoidHom> find_isomorphism(const FiniteGroupoid& a, const FiniteGroupoid& b);

struct SectorEntry {
  Element representative;
  Subgroup centralizer;
};
/// One entry per conjugacy class of G, i.e. per component of ∧[*/G].
std::vector<SectorEntry> sector_decomposition(const FiniteGroup& g);

/// Lexicographic enumeration of composable r-tuples. Degree 0 visits
/// each object as a one-element tuple.
void for_each_simplex(const FiniteGroupoid& g, int degree,
                      const std::function<void(std::span<const int>)>& visit);
std::vector<std::vector<int>> nerve(const FiniteGroupoid& g, int degree);
std::int64_t nerve_size(const FiniteGroupoid& g, int degree);

}  // namespace orbk

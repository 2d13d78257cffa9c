#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fszlab {

namespace detail {
class GroupImpl;
}

/// Hard ceiling on the order of groups materialized from files or builders.
inline constexpr int64_t kOrderCap = 200000;

/// Index of an element in a group's canonical enumeration.  Only meaningful
/// relative to the group that minted it.
struct ElementId {
    int32_t idx = -1;
    constexpr ElementId() = default;
    constexpr explicit ElementId(int32_t i) : idx(i) {}
    constexpr int32_t value() const { return idx; }
    friend constexpr bool operator==(ElementId a, ElementId b) { return a.idx == b.idx; }
    friend constexpr auto operator<=>(ElementId a, ElementId b) { return a.idx <=> b.idx; }
};

/// One conjugacy class: representative (the least element index in the
/// class), the full sorted member list and the class size.  The centralizer
/// of the representative is served by Group::class_centralizer.
struct ConjClass {
    ElementId representative;
    std::vector<ElementId> members;
    int64_t size = 0;
};

/// Block of the partition of a group into sets of elements generating the
/// same cyclic subgroup: the block of g is { g^m : gcd(m, o(g)) = 1 }.
struct PowerClassBlock {
    ElementId leader;  // least element index in the block
    std::vector<ElementId> members;
};

struct PowerClassPartition {
    std::vector<PowerClassBlock> blocks;  // ordered by leader
    std::vector<int32_t> block_of;        // element index -> block index
};

/// Consistent power-commutator presentation: k generators g_1..g_k with
/// relative orders o_i >= 2, power words g_i^{o_i} and commutator words
/// [g_j, g_i] (j > i), both supported on generators of index > i.
/// Words are exponent vectors of length k; absent entries mean trivial.
struct PcPresentation {
    std::vector<int64_t> relative_orders;
    std::map<int, std::vector<int64_t>> power_words;                   // key: i (1-based)
    std::map<std::pair<int, int>, std::vector<int64_t>> comm_words;    // key: (j, i), j > i
};

/// Immutable finite group with a canonical element enumeration and
/// index-based arithmetic.  Cheap to copy (shared handle); all operations
/// are const and safe to call from parallel workers once the lazily built
/// tables they touch have been produced (first access is internally locked).
class Group {
public:
    Group() = default;
    bool valid() const { return impl_ != nullptr; }

    int64_t order() const;
    const std::string& name() const;
    std::string backend() const;

    ElementId identity() const;
    bool is_identity(ElementId a) const { return a == identity(); }
    ElementId multiply(ElementId a, ElementId b) const;
    ElementId inverse(ElementId a) const;
    /// a^k by square-and-multiply; k may be negative or zero.
    ElementId power(ElementId a, int64_t k) const;
    /// by^{-1} * x * by
    ElementId conjugate(ElementId x, ElementId by) const;
    bool commute(ElementId a, ElementId b) const;

    int64_t element_order(ElementId a) const;
    const std::vector<int64_t>& element_orders() const;
    int64_t exponent() const;
    bool is_abelian() const;
    std::vector<ElementId> generators() const;
    /// Human-readable element rendering (cycles for permutations, words for
    /// pc elements).
    std::string element_repr(ElementId a) const;

    const std::vector<ConjClass>& conjugacy_classes() const;
    int class_of(ElementId a) const;
    const std::vector<ElementId>& class_centralizer(int class_index) const;
    std::vector<ElementId> centralizer(std::span<const ElementId> s) const;
    std::vector<ElementId> centralizer(ElementId u) const;

    /// Sorted closure of the given elements under the group law.
    std::vector<ElementId> generated_subgroup(std::span<const ElementId> gens) const;
    /// Group induced on a subset, which must be closed under the law
    /// (verified; throws std::invalid_argument otherwise).
    Group subgroup(std::vector<ElementId> members, std::string name = {}) const;
    /// Mapping between a subgroup's enumeration and its parent's.
    ElementId subgroup_to_parent(ElementId a) const;
    ElementId parent_to_subgroup(ElementId parent_elt) const;

    const PowerClassPartition& rational_power_classes() const;

    /// n-th power map over the whole group plus a bucket index grouping
    /// elements by their n-th power (CSR layout).  Cached per n.
    struct PowerData {
        int64_t n = 0;
        std::vector<int32_t> pow;           // pow[a] = index of a^n
        std::vector<int32_t> bucket_start;  // size order+1
        std::vector<int32_t> bucket_elems;  // elements grouped by pow value
    };
    std::shared_ptr<const PowerData> power_data(int64_t n) const;

    // --- constructors ---------------------------------------------------
    static Group from_permutations(int degree, const std::vector<std::vector<int>>& gen_images,
                                   std::string name);
    static Group from_cayley_table(const std::vector<std::vector<int32_t>>& table,
                                   std::string name);
    static Group from_pc_presentation(const PcPresentation& pres, std::string name);
    static Group direct_product(const Group& a, const Group& b, std::string name = {});

    // --- backend-specific accessors --------------------------------------
    /// Degree of the permutation backend; throws for other backends.
    int permutation_degree() const;
    /// Image of a point (0-based) under an element of a permutation group.
    int permutation_image(ElementId a, int point) const;
    /// Component ids of a direct-product element.
    std::pair<ElementId, ElementId> product_components(ElementId a) const;
    ElementId product_id(ElementId a, ElementId b) const;
    std::pair<Group, Group> product_factors() const;

private:
    explicit Group(std::shared_ptr<const detail::GroupImpl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const detail::GroupImpl> impl_;
    friend class detail::GroupImpl;
};

}  // namespace fszlab

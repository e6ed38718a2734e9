#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gspin {

using Elem = int;

/// Finite group presented by its full Cayley table.
///
/// Construction validates closure, associativity, identity and inverses and
/// reports the first offending triple on failure. Instances are immutable.
class FiniteGroup {
public:
    static FiniteGroup from_table(std::vector<std::vector<Elem>> table,
                                  std::vector<std::string> names = {});

    int order() const { return order_; }
    Elem identity() const { return identity_; }
    Elem mul(Elem a, Elem b) const { return cayley_[static_cast<std::size_t>(a) * order_ + b]; }
    Elem inv(Elem a) const { return inverse_[a]; }
    /// g^{-1} h g
    Elem conj(Elem g, Elem h) const { return mul(mul(inv(g), h), g); }
    const std::string& name(Elem a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }
    bool is_abelian() const;

private:
    FiniteGroup() = default;
    int order_ = 0;
    Elem identity_ = 0;
    std::vector<Elem> cayley_;   // row-major order x order
    std::vector<Elem> inverse_;
    std::vector<std::string> names_;
};

using GroupRef = std::shared_ptr<const FiniteGroup>;

FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);   // order 2n, n >= 1
FiniteGroup symmetric_group(int n);  // order n!
FiniteGroup quaternion_group();      // order 8

/// "cyclic:N" | "dihedral:N" | "symmetric:N" | "quaternion" | "file:PATH".
/// Orders above max_order raise ResourceCapError.
FiniteGroup parse_group_spec(const std::string& spec, int max_order = 48);

/// Line-based table file: first line the order n, then n lines of n indices,
/// then optionally one line of n whitespace-separated element names.
FiniteGroup read_cayley_file(const std::string& path);

/// Subgroup of a fixed parent group, as a sorted member list plus lookup
/// tables. Built from generators by closure; records normality and, when not
/// normal, one conjugation witness (g, h) with g^{-1} h g outside.
class Subgroup {
public:
    Subgroup() = default; // empty placeholder, to be assigned from a real one
    Subgroup(const FiniteGroup& parent, const std::vector<Elem>& generators);
    static Subgroup whole(const FiniteGroup& parent);
    static Subgroup trivial(const FiniteGroup& parent);

    int order() const { return static_cast<int>(members_.size()); }
    const std::vector<Elem>& members() const { return members_; }
    bool contains(Elem g) const { return member_index_[g] >= 0; }
    /// Position of g in members(), or -1.
    int index_of(Elem g) const { return member_index_[g]; }
    Elem member(int i) const { return members_[i]; }
    bool normal() const { return normal_; }
    std::optional<std::pair<Elem, Elem>> normality_witness() const { return witness_; }
    int parent_order() const { return parent_order_; }

private:
    int parent_order_ = 0;
    std::vector<Elem> members_;
    std::vector<int> member_index_;
    bool normal_ = false;
    std::optional<std::pair<Elem, Elem>> witness_;
};

/// Comma-separated element indices, "all", or "" / "e" for the trivial one.
Subgroup parse_subgroup_spec(const FiniteGroup& G, const std::string& spec);

} // namespace gspin

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lop/model.hpp"

namespace lop {

/// Cyclic sequence of circle ids forming the outer contact ring. Positions are
/// 0-based indices into the stored rotation; all operations are cyclic.
class Border {
public:
    explicit Border(std::vector<int> ring);

    std::size_t size() const { return ring_.size(); }
    int at(std::size_t pos) const { return ring_[pos % ring_.size()]; }
    const std::vector<int>& ring() const { return ring_; }
    std::optional<std::size_t> position_of(int id) const;

    /// The t consecutive cyclic pairs in ring order starting at position 0.
    std::vector<std::pair<int, int>> contact_pairs() const;

    /// Insertion with span removal: k enters between positions p and q
    /// (q = p + s cyclically, 1 <= s <= floor((t-2)/2)); the s-1 ids strictly
    /// between them leave the ring. Throws InvalidSpan / DuplicateId.
    Border inserted(int k, std::size_t p_index, std::size_t q_index) const;

    /// Ring with the id at p_index removed. Requires t >= 4 so at least a
    /// 3-ring remains; throws TooSmall otherwise.
    Border erased(std::size_t p_index) const;

    /// Rotation starting at the smallest id. Two borders describe the same
    /// cyclic order iff their canonical rotations are equal.
    std::vector<int> canonical() const;
    bool cyclic_equal(const Border& other) const;

private:
    std::vector<int> ring_;
};

/// Forward cyclic span from p to q: the s in q = p + s (mod t).
std::size_t border_span(const Border& border, std::size_t p_index, std::size_t q_index);

/// Polygon through the border circles' centers, in ring order.
Polygon main_area_polygon(const Border& border, const Layout& layout);

/// Checks the border invariants: all ring ids placed, consecutive rings pairs
/// in contact within eps, induced polygon simple, and every placed center
/// inside or on the polygon boundary. Returns human-readable violations
/// (empty means the border is valid).
std::vector<std::string> border_violations(const Border& border, const Layout& layout,
                                           const ProblemInstance& circles,
                                           double eps = kDefaultTolerance);

}  // namespace lop

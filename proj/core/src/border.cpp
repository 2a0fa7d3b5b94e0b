#include "lop/border.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lop/errors.hpp"

namespace lop {

Border::Border(std::vector<int> ring) : ring_(std::move(ring)) {
    if (ring_.size() < 3) {
        throw TooSmall("border: ring needs at least 3 circles");
    }
    for (std::size_t i = 0; i < ring_.size(); ++i) {
        for (std::size_t j = i + 1; j < ring_.size(); ++j) {
            if (ring_[i] == ring_[j]) {
                throw DuplicateId("border: id " + std::to_string(ring_[i]) +
                                  " appears twice in the ring");
            }
        }
    }
}

std::optional<std::size_t> Border::position_of(int id) const {
    auto it = std::find(ring_.begin(), ring_.end(), id);
    if (it == ring_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - ring_.begin());
}

std::vector<std::pair<int, int>> Border::contact_pairs() const {
    const std::size_t t = ring_.size();
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
        pairs.emplace_back(ring_[i], ring_[(i + 1) % t]);
    }
    return pairs;
}

Border Border::inserted(int k, std::size_t p_index, std::size_t q_index) const {
    const std::size_t t = ring_.size();
    if (std::find(ring_.begin(), ring_.end(), k) != ring_.end()) {
        throw DuplicateId("border insert: id " + std::to_string(k) +
                          " already in the ring");
    }
    p_index %= t;
    q_index %= t;
    const std::size_t s = (q_index + t - p_index) % t;
    if (s < 1 || s > (t - 2) / 2) {
        throw InvalidSpan("border insert: span " + std::to_string(s) +
                          " outside [1, " + std::to_string((t - 2) / 2) +
                          "] for ring of " + std::to_string(t));
    }
    // i_1..i_p k i_{p+s}..i_t, built from the rotation starting at p.
    std::vector<int> out;
    out.reserve(t - s + 2);
    out.push_back(ring_[p_index]);
    out.push_back(k);
    for (std::size_t i = s; i < t; ++i) {
        out.push_back(ring_[(p_index + i) % t]);
    }
    return Border(std::move(out));
}

Border Border::erased(std::size_t p_index) const {
    const std::size_t t = ring_.size();
    if (t < 4) {
        throw TooSmall("border delete: ring of " + std::to_string(t) +
                       " cannot shrink below 3");
    }
    std::vector<int> out = ring_;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(p_index % t));
    return Border(std::move(out));
}

std::vector<int> Border::canonical() const {
    const auto it = std::min_element(ring_.begin(), ring_.end());
    std::vector<int> out;
    out.reserve(ring_.size());
    out.insert(out.end(), it, ring_.end());
    out.insert(out.end(), ring_.begin(), it);
    return out;
}

bool Border::cyclic_equal(const Border& other) const {
    return canonical() == other.canonical();
}

std::size_t border_span(const Border& border, std::size_t p_index,
                        std::size_t q_index) {
    const std::size_t t = border.size();
    return (q_index % t + t - p_index % t) % t;
}

Polygon main_area_polygon(const Border& border, const Layout& layout) {
    Polygon poly;
    poly.vertices.reserve(border.size());
    for (int id : border.ring()) {
        poly.vertices.push_back(layout.at(id));
    }
    return poly;
}

std::vector<std::string> border_violations(const Border& border, const Layout& layout,
                                           const ProblemInstance& circles,
                                           double eps) {
    std::vector<std::string> out;
    for (int id : border.ring()) {
        if (!layout.contains(id)) {
            out.push_back("border id " + std::to_string(id) + " is not placed");
        }
    }
    if (!out.empty()) return out;

    for (const auto& [a, b] : border.contact_pairs()) {
        const double want = circles.radius_of(a) + circles.radius_of(b);
        const double got = distance(layout.at(a), layout.at(b));
        if (std::abs(got - want) > eps * want) {
            out.push_back("ring pair (" + std::to_string(a) + "," + std::to_string(b) +
                          ") not in contact: gap " + std::to_string(got - want));
        }
    }

    const Polygon poly = main_area_polygon(border, layout);
    if (!is_simple_polygon(poly, eps)) {
        out.push_back("main-area polygon is not simple");
    }
    for (const auto& [id, p] : layout) {
        if (classify_point(p, poly, eps) == Region::Outside) {
            out.push_back("center of circle " + std::to_string(id) +
                          " lies outside the main area");
        }
    }
    return out;
}

}  // namespace lop

#include "slopespec/hn_type.hpp"

#include <algorithm>
#include <cassert>

namespace slopespec {

HNPolygon::HNPolygon(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    assert(vertices_.size() >= 2);
    assert(vertices_.front().x == 0 && vertices_.front().y == 0);
    for (size_t i = 0; i + 1 < vertices_.size(); ++i) {
        assert(vertices_[i].x < vertices_[i + 1].x);
    }
}

Rational HNPolygon::eval(const Rational& s) const {
    if (s < Rational(0) || s > Rational(width())) {
        throw OutOfRange("polygon evaluation outside [0, " + std::to_string(width()) + "]");
    }
    for (size_t i = 0; i + 1 < vertices_.size(); ++i) {
        const Vertex& a = vertices_[i];
        const Vertex& b = vertices_[i + 1];
        if (s <= Rational(b.x)) {
            Rational edge_slope(b.y - a.y, b.x - a.x);
            return Rational(a.y) + (s - Rational(a.x)) * edge_slope;
        }
    }
    return Rational(vertices_.back().y);  // s == width(), covered above
}

HNType::HNType(Int genus, std::vector<HNBlock> blocks)
    : genus_(genus), blocks_(std::move(blocks)) {
    cum_rank_.reserve(blocks_.size() + 1);
    cum_degree_.reserve(blocks_.size() + 1);
    cum_rank_.push_back(0);
    cum_degree_.push_back(0);
    for (const HNBlock& b : blocks_) {
        cum_rank_.push_back(cum_rank_.back() + b.rank);
        cum_degree_.push_back(cum_degree_.back() + b.degree);
    }
}

Rational HNType::block_slope(Int j) const {
    const HNBlock& b = blocks_[static_cast<size_t>(j - 1)];
    return Rational(b.degree, b.rank);
}

Rational HNType::slope() const { return Rational(total_degree(), total_rank()); }

Rational HNType::mu_max() const { return block_slope(1); }

HNType make_hn_type(Int genus, const std::vector<HNBlock>& blocks) {
    if (blocks.empty()) throw EmptyType("a bundle type needs at least one block");
    if (genus < 0) throw OutOfRange("genus must be non-negative");
    for (const HNBlock& b : blocks) {
        if (b.rank < 1) throw OutOfRange("block rank must be positive");
    }
    for (size_t j = 0; j + 1 < blocks.size(); ++j) {
        // mu_j > mu_{j+1}  <=>  d_j * r_{j+1} > d_{j+1} * r_j  (ranks positive)
        if (blocks[j].degree * blocks[j + 1].rank <= blocks[j + 1].degree * blocks[j].rank) {
            throw SlopeOrderViolation(
                "block slopes must strictly decrease (blocks " + std::to_string(j + 1) +
                " and " + std::to_string(j + 2) + ")");
        }
    }
    return HNType(genus, blocks);
}

HNType twist(const HNType& type, Int t) {
    std::vector<HNBlock> blocks = type.blocks();
    for (HNBlock& b : blocks) b.degree += b.rank * t;
    return make_hn_type(type.genus(), blocks);
}

HNType hn_from_split(Int genus, std::vector<Int> line_degrees) {
    if (line_degrees.empty()) throw EmptyType("split bundle needs at least one line degree");
    std::sort(line_degrees.begin(), line_degrees.end(), std::greater<>());
    std::vector<HNBlock> blocks;
    for (size_t i = 0; i < line_degrees.size();) {
        size_t j = i;
        while (j < line_degrees.size() && line_degrees[j] == line_degrees[i]) ++j;
        Int count = static_cast<Int>(j - i);
        blocks.push_back({count, count * line_degrees[i]});
        i = j;
    }
    return make_hn_type(genus, blocks);
}

HNPolygon polygon(const HNType& type) {
    std::vector<HNPolygon::Vertex> vertices;
    vertices.reserve(static_cast<size_t>(type.block_count()) + 1);
    for (Int i = 0; i <= type.block_count(); ++i) {
        vertices.push_back({type.cumulative_rank(i), type.cumulative_degree(i)});
    }
    return HNPolygon(std::move(vertices));
}

}  // namespace slopespec

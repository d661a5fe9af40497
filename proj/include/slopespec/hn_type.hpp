#pragma once

#include <vector>

#include "slopespec/rational.hpp"

namespace slopespec {

// One step of a slope filtration: the rank and degree of a subquotient.
// The block is understood to be strongly semistable.
struct HNBlock {
    Int rank;
    Int degree;

    friend bool operator==(const HNBlock&, const HNBlock&) = default;
};

// The concave lattice polygon through the cumulative (rank, degree) points.
// Edge slopes strictly decrease; evaluation is exact piecewise-linear
// interpolation over the rationals.
class HNPolygon {
public:
    struct Vertex {
        Int x;
        Int y;
        friend bool operator==(const Vertex&, const Vertex&) = default;
    };

    explicit HNPolygon(std::vector<Vertex> vertices);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    Int width() const { return vertices_.back().x; }

    // Value at s, for 0 <= s <= width(). Exact at vertices.
    Rational eval(const Rational& s) const;

private:
    std::vector<Vertex> vertices_;
};

// A slope filtration type: genus plus the ordered block list, with the
// cumulative data cached. Immutable after construction; build through
// make_hn_type so the strict slope ordering is always enforced.
class HNType {
public:
    Int genus() const { return genus_; }
    const std::vector<HNBlock>& blocks() const { return blocks_; }
    Int block_count() const { return static_cast<Int>(blocks_.size()); }

    // Cumulative rank/degree of the first i blocks, i in [0, block_count()].
    Int cumulative_rank(Int i) const { return cum_rank_[static_cast<size_t>(i)]; }
    Int cumulative_degree(Int i) const { return cum_degree_[static_cast<size_t>(i)]; }

    Int total_rank() const { return cum_rank_.back(); }
    Int total_degree() const { return cum_degree_.back(); }

    // Slope of block j, j in [1, block_count()].
    Rational block_slope(Int j) const;

    // Total degree over total rank.
    Rational slope() const;

    // Slope of the first block; equals slope() exactly when there is one block.
    Rational mu_max() const;

    friend bool operator==(const HNType& a, const HNType& b) {
        return a.genus_ == b.genus_ && a.blocks_ == b.blocks_;
    }

private:
    HNType(Int genus, std::vector<HNBlock> blocks);
    friend HNType make_hn_type(Int genus, const std::vector<HNBlock>& blocks);

    Int genus_;
    std::vector<HNBlock> blocks_;
    std::vector<Int> cum_rank_;    // cum_rank_[0] = 0
    std::vector<Int> cum_degree_;  // cum_degree_[0] = 0
};

// Validates and builds a type. Throws EmptyType for no blocks, OutOfRange for
// a non-positive rank or negative genus, SlopeOrderViolation when block
// slopes fail to strictly decrease (equal-slope neighbours must be one block;
// see hn_from_split for the grouping constructor).
HNType make_hn_type(Int genus, const std::vector<HNBlock>& blocks);

// Tensor by a degree-t line bundle: every block degree shifts by rank * t.
// Slope ordering is preserved, so the result is always valid.
HNType twist(const HNType& type, Int t);

// The type of a direct sum of line bundles: degrees sorted descending, equal
// values grouped into one block of (count, count * value).
HNType hn_from_split(Int genus, std::vector<Int> line_degrees);

// Polygon through (0,0) and the cumulative (rank, degree) points.
HNPolygon polygon(const HNType& type);

}  // namespace slopespec

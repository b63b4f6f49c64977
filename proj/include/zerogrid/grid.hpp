#pragma once

#include "zerogrid/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zg {

/// One finite integer axis: an inclusive interval or an explicit value list
/// (deduplicated, sorted). Interval membership is O(1), list membership is a
/// binary search.
class Axis {
public:
    static Axis interval(std::int64_t lo, std::int64_t hi);  // requires lo <= hi
    static Axis explicit_values(std::vector<std::int64_t> values);

    bool is_interval() const { return is_interval_; }
    std::int64_t lo() const { return lo_; }
    std::int64_t hi() const { return hi_; }
    const std::vector<std::int64_t>& values() const { return values_; }

    std::uint64_t size() const;
    bool empty() const { return size() == 0; }
    bool contains(std::int64_t v) const;
    std::int64_t at(std::uint64_t index) const;

    std::string to_string() const;

private:
    bool is_interval_ = true;
    std::int64_t lo_ = 0, hi_ = -1;
    std::vector<std::int64_t> values_;
};

/// Cartesian product of axes, one per variable (by declared order).
struct GridSpec {
    std::vector<Axis> axes;

    std::size_t arity() const { return axes.size(); }
    Integer cell_count() const;
    std::uint64_t max_axis_size() const;

    /// Micro-format: comma-separated axes, each "lo..hi" or "{v1,v2,...}".
    static GridSpec parse(std::string_view text);
    std::string to_string() const;
};

}  // namespace zg

#include "zerogrid/grid.hpp"

#include "zerogrid/error.hpp"

#include <algorithm>
#include <cctype>

namespace zg {

Axis Axis::interval(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) fail(ErrorCode::Domain, "interval axis with lo > hi");
    Axis a;
    a.is_interval_ = true;
    a.lo_ = lo;
    a.hi_ = hi;
    return a;
}

Axis Axis::explicit_values(std::vector<std::int64_t> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    Axis a;
    a.is_interval_ = false;
    a.values_ = std::move(values);
    return a;
}

std::uint64_t Axis::size() const {
    if (is_interval_)
        return static_cast<std::uint64_t>(hi_) - static_cast<std::uint64_t>(lo_) + 1;
    return values_.size();
}

bool Axis::contains(std::int64_t v) const {
    if (is_interval_) return v >= lo_ && v <= hi_;
    return std::binary_search(values_.begin(), values_.end(), v);
}

std::int64_t Axis::at(std::uint64_t index) const {
    if (is_interval_) return lo_ + static_cast<std::int64_t>(index);
    return values_[index];
}

std::string Axis::to_string() const {
    if (is_interval_) return std::to_string(lo_) + ".." + std::to_string(hi_);
    std::string out = "{";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values_[i]);
    }
    return out + "}";
}

Integer GridSpec::cell_count() const {
    Integer total = 1;
    for (const auto& a : axes) total *= a.size();
    return total;
}

std::uint64_t GridSpec::max_axis_size() const {
    std::uint64_t m = 0;
    for (const auto& a : axes) m = std::max(m, a.size());
    return m;
}

namespace {

std::int64_t read_int(std::string_view text, std::size_t& i) {
    std::size_t start = i;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        fail(ErrorCode::Parse,
             "bad grid spec: expected an integer at position " + std::to_string(start + 1));
    std::int64_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
    }
    return neg ? -v : v;
}

void skip_spaces(std::string_view text, std::size_t& i) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
}

}  // namespace

GridSpec GridSpec::parse(std::string_view text) {
    GridSpec spec;
    std::size_t i = 0;
    skip_spaces(text, i);
    if (i == text.size()) fail(ErrorCode::Parse, "bad grid spec: empty");
    for (;;) {
        skip_spaces(text, i);
        if (i < text.size() && text[i] == '{') {
            ++i;
            std::vector<std::int64_t> vals;
            skip_spaces(text, i);
            if (i < text.size() && text[i] == '}') {
                ++i;  // "{}" is an explicitly empty axis
            } else {
                for (;;) {
                    skip_spaces(text, i);
                    vals.push_back(read_int(text, i));
                    skip_spaces(text, i);
                    if (i < text.size() && text[i] == ',') {
                        ++i;
                        continue;
                    }
                    if (i < text.size() && text[i] == '}') {
                        ++i;
                        break;
                    }
                    fail(ErrorCode::Parse, "bad grid spec: expected ',' or '}' at position " +
                                               std::to_string(i + 1));
                }
            }
            spec.axes.push_back(Axis::explicit_values(std::move(vals)));
        } else {
            std::int64_t lo = read_int(text, i);
            if (i + 1 >= text.size() || text[i] != '.' || text[i + 1] != '.')
                fail(ErrorCode::Parse,
                     "bad grid spec: expected '..' at position " + std::to_string(i + 1));
            i += 2;
            std::int64_t hi = read_int(text, i);
            if (lo > hi)
                fail(ErrorCode::Parse, "bad grid spec: empty interval " + std::to_string(lo) +
                                           ".." + std::to_string(hi));
            spec.axes.push_back(Axis::interval(lo, hi));
        }
        skip_spaces(text, i);
        if (i == text.size()) break;
        if (text[i] != ',')
            fail(ErrorCode::Parse,
                 "bad grid spec: expected ',' between axes at position " + std::to_string(i + 1));
        ++i;
    }
    return spec;
}

std::string GridSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < axes.size(); ++i) {
        if (i) out += ",";
        out += axes[i].to_string();
    }
    return out;
}

}  // namespace zg

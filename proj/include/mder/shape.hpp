#pragma once

#include <mder/errors.hpp>
#include <mder/exactcore.hpp>

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mder {

/// Block sizes (k_1, ..., k_n) of a multiset. Zero entries are legal.
struct MultisetShape {
    std::vector<std::size_t> blocks;

    MultisetShape() = default;
    MultisetShape(std::initializer_list<std::size_t> b) : blocks(b) {}
    explicit MultisetShape(std::vector<std::size_t> b) : blocks(std::move(b)) {}

    // k repeated n times
    static MultisetShape repeated(std::size_t k, std::size_t n) {
        return MultisetShape(std::vector<std::size_t>(n, k));
    }

    std::size_t total() const {
        std::size_t s = 0;
        for (auto k : blocks) s += k;
        return s;
    }

    // prod k_i!
    Integer factorial_product() const {
        Integer p = 1, f;
        for (auto k : blocks) {
            mpz_fac_ui(f.get_mpz_t(), k);
            p *= f;
        }
        return p;
    }

    MultisetShape without_zeros() const {
        MultisetShape r;
        for (auto k : blocks)
            if (k != 0) r.blocks.push_back(k);
        return r;
    }

    bool operator==(const MultisetShape&) const = default;
};

namespace detail {

inline std::size_t parse_count(std::string_view token, std::string_view whole) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw parse_error("malformed shape '" + std::string(whole) + "': bad number '" + std::string(token) + "'");
    return v;
}

} // namespace detail

/// Parses "2,2,3" or "4^13" or a mix such as "1^2,3". Whitespace is ignored.
/// The empty string is the empty shape.
inline MultisetShape parse_shape(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s += c;
    MultisetShape shape;
    if (s.empty()) return shape;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = s.find(',', pos);
        std::string_view item(s.data() + pos, (comma == std::string::npos ? s.size() : comma) - pos);
        std::size_t caret = item.find('^');
        if (caret == std::string_view::npos) {
            shape.blocks.push_back(detail::parse_count(item, text));
        } else {
            std::size_t k = detail::parse_count(item.substr(0, caret), text);
            std::size_t n = detail::parse_count(item.substr(caret + 1), text);
            shape.blocks.insert(shape.blocks.end(), n, k);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return shape;
}

// All ordered compositions of total into positive parts, lexicographic.
inline std::vector<MultisetShape> compositions(std::size_t total) {
    std::vector<MultisetShape> out;
    std::vector<std::size_t> parts;
    auto rec = [&](auto&& self, std::size_t left) -> void {
        if (left == 0) {
            out.emplace_back(parts);
            return;
        }
        for (std::size_t k = 1; k <= left; ++k) {
            parts.push_back(k);
            self(self, left - k);
            parts.pop_back();
        }
    };
    rec(rec, total);
    return out;
}

inline std::string to_string(const MultisetShape& shape) {
    std::string out;
    for (std::size_t i = 0; i < shape.blocks.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(shape.blocks[i]);
    }
    return out;
}

} // namespace mder

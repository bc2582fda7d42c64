#pragma once

#include <charconv>
#include <fstream>
#include <sstream>

#include "sunion/family.hpp"

namespace sunion {

// Family text format:
//   n=<n>
//   1,2,3        one set per line, elements 1..n
//   {}           the empty set
// Compact hex form: same header, then one lowercase hex word per line.
// Both serialize members in canonical order and round-trip bit-exactly.

enum class FamilyFormat { text, hex };

inline std::string to_text(const Family& f) {
    std::ostringstream os;
    os << "n=" << f.n() << '\n';
    for (std::uint32_t m : f.masks()) {
        if (m == 0) {
            os << "{}" << '\n';
            continue;
        }
        bool first = true;
        for (std::uint32_t b = m; b; b &= b - 1) {
            if (!first) os << ',';
            os << std::countr_zero(b) + 1;
            first = false;
        }
        os << '\n';
    }
    return os.str();
}

inline std::string to_hex(const Family& f) {
    std::ostringstream os;
    os << "n=" << f.n() << '\n';
    char buf[16];
    for (std::uint32_t m : f.masks()) {
        auto [p, ec] = std::to_chars(buf, buf + sizeof buf, m, 16);
        os.write(buf, p - buf);
        os << '\n';
    }
    return os.str();
}

namespace detail {

inline std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline int parse_header(const std::string& line, int lineno) {
    std::string t = strip(line);
    if (t.rfind("n=", 0) != 0)
        throw parse_error("line " + std::to_string(lineno) + ": expected header n=<n>");
    int n = 0;
    auto [p, ec] = std::from_chars(t.data() + 2, t.data() + t.size(), n);
    if (ec != std::errc{} || p != t.data() + t.size())
        throw parse_error("line " + std::to_string(lineno) + ": bad ground-set size");
    if (n < 1 || n > kMaxGroundSet)
        throw parse_error("line " + std::to_string(lineno) + ": n out of range 1..32");
    return n;
}

}  // namespace detail

inline Family from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::uint32_t> masks;
    while (std::getline(is, line)) {
        ++lineno;
        std::string t = detail::strip(line);
        if (t.empty()) continue;
        if (n < 0) {
            n = detail::parse_header(t, lineno);
            continue;
        }
        if (t == "{}") {
            masks.push_back(0);
            continue;
        }
        std::uint32_t m = 0;
        const char* p = t.data();
        const char* end = t.data() + t.size();
        while (p < end) {
            int e = 0;
            auto [q, ec] = std::from_chars(p, end, e);
            if (ec != std::errc{} || e < 1 || e > n)
                throw parse_error("line " + std::to_string(lineno) + ": bad element");
            m |= std::uint32_t{1} << (e - 1);
            p = q;
            if (p < end) {
                if (*p != ',') throw parse_error("line " + std::to_string(lineno) + ": expected ','");
                ++p;
            }
        }
        masks.push_back(m);
    }
    if (n < 0) throw parse_error("missing n=<n> header");
    return Family(n, std::move(masks));
}

inline Family from_hex(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::uint32_t> masks;
    while (std::getline(is, line)) {
        ++lineno;
        std::string t = detail::strip(line);
        if (t.empty()) continue;
        if (n < 0) {
            n = detail::parse_header(t, lineno);
            continue;
        }
        std::uint32_t m = 0;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), m, 16);
        if (ec != std::errc{} || p != t.data() + t.size())
            throw parse_error("line " + std::to_string(lineno) + ": bad hex word");
        if (m & ~universe_mask(n))
            throw parse_error("line " + std::to_string(lineno) + ": set outside [n]");
        masks.push_back(m);
    }
    if (n < 0) throw parse_error("missing n=<n> header");
    return Family(n, std::move(masks));
}

inline std::string serialize(const Family& f, FamilyFormat fmt) {
    return fmt == FamilyFormat::text ? to_text(f) : to_hex(f);
}
inline Family deserialize(const std::string& s, FamilyFormat fmt) {
    return fmt == FamilyFormat::text ? from_text(s) : from_hex(s);
}

inline Family read_family_file(const std::string& path, FamilyFormat fmt = FamilyFormat::text) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return deserialize(ss.str(), fmt);
}

inline void write_family_file(const std::string& path, const Family& f,
                              FamilyFormat fmt = FamilyFormat::text) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open " + path + " for writing");
    out << serialize(f, fmt);
}

}  // namespace sunion

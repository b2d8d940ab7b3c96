#ifndef EQUICHAIN_UTIL_HPP
#define EQUICHAIN_UTIL_HPP

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

namespace equichain {

// Compares label strings numerically when both are unsigned integers, so
// that leaf "10" sorts after leaf "2"; falls back to plain string order.
inline bool natural_less(const std::string& a, const std::string& b) {
    auto all_digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    if (all_digits(a) && all_digits(b)) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
    return a < b;
}

struct NaturalLess {
    bool operator()(const std::string& a, const std::string& b) const { return natural_less(a, b); }
};

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

template <class It, class F>
std::string join(It first, It last, const std::string& sep, F&& fmt) {
    std::string out;
    for (It it = first; it != last; ++it) {
        if (it != first) out += sep;
        out += fmt(*it);
    }
    return out;
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
    return join(v.begin(), v.end(), sep, [](const std::string& s) { return s; });
}

} // namespace equichain

#endif

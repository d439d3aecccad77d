#include "spinflat/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace spinflat {

std::string Rat::str() const {
    std::ostringstream os;
    os << num;
    if (den != 1) os << '/' << den;
    return os.str();
}

namespace {

bool parse_i64(const std::string& s, i64& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(s.c_str(), &end, 10);
    if (errno != 0 || end != s.c_str() + s.size()) return false;
    out = v;
    return true;
}

} // namespace

Rat parse_rat(const std::string& token) {
    auto slash = token.find('/');
    i64 num = 0, den = 1;
    if (slash == std::string::npos) {
        if (!parse_i64(token, num)) throw ParseError("malformed rational: '" + token + "'");
    } else {
        if (!parse_i64(token.substr(0, slash), num) ||
            !parse_i64(token.substr(slash + 1), den) || den == 0)
            throw ParseError("malformed rational: '" + token + "'");
    }
    return Rat(num, den);
}

} // namespace spinflat

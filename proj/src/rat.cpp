#include "untangle/rat.hpp"

#include <algorithm>
#include <cctype>

#include "untangle/errors.hpp"

namespace untangle {

namespace {
bool valid_int_token(const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + i, t.end(), [](unsigned char c) { return std::isdigit(c); });
}
}  // namespace

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int_token(num) || !valid_int_token(den))
        throw ParseError("malformed rational: '" + s + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw ParseError("zero denominator in rational: '" + s + "'");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str(10);
    return r.get_num().get_str(10) + "/" + r.get_den().get_str(10);
}

long rat_bits(const Rat& r) {
    return static_cast<long>(mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
                             mpz_sizeinbase(r.get_den().get_mpz_t(), 2));
}

long drawing_bits(const Drawing& d) {
    long b = 0;
    for (const auto& p : d) b = std::max({b, rat_bits(p.x), rat_bits(p.y)});
    return b;
}

}  // namespace untangle

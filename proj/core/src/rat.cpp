#include "logdiv/rat.hpp"

#include "logdiv/errors.hpp"

#include <cctype>

namespace logdiv {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    // mpq_class(str) accepts "p/q" but also whitespace and odd bases; validate shape first.
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int(s)) throw InputError("malformed integer literal '" + s + "'");
        return Rat(Int(s, 10));
    }
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw InputError("malformed rational literal '" + s + "'");
    Int d(den, 10);
    if (d == 0) throw InputError("zero denominator in '" + s + "'");
    Rat r(Int(num, 10), d);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

bool is_integer(const Rat& r) {
    return r.get_den() == 1;
}

Int rat_to_int(const Rat& r) {
    if (!is_integer(r))
        throw MathError("not-an-integer", "expected integer, got " + rat_to_string(r));
    return r.get_num();
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Rat rat_pow(const Rat& base, unsigned e) {
    Rat out = 1;
    Rat b = base;
    unsigned k = e;
    while (k) {
        if (k & 1u) out *= b;
        b *= b;
        k >>= 1u;
    }
    return out;
}

} // namespace logdiv

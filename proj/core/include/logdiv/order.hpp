#pragma once

#include "logdiv/monomial.hpp"

namespace logdiv {

/// Monomial orders. Grevlex and Lex are global (1 is the smallest monomial);
/// NegDegRevLex is the local order where lower total degree ranks *higher*,
/// ties broken reverse-lexicographically, so 1 is the largest monomial.
enum class Ord { Grevlex, Lex, NegDegRevLex };

inline bool is_global(Ord o) { return o != Ord::NegDegRevLex; }

/// Sign of the reverse-lex tiebreak: +1 if a ranks above b among equal-degree
/// monomials (rightmost nonzero entry of a-b is negative), -1 converse, 0 equal.
inline int revlex_tiebreak(const Monomial& a, const Monomial& b) {
    for (std::size_t i = a.e.size(); i-- > 0;) {
        const int d = a.e[i] - b.e[i];
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

/// Strict "a ranks below b" in the given order.
inline bool mon_less(const Monomial& a, const Monomial& b, Ord o) {
    switch (o) {
    case Ord::Grevlex: {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return revlex_tiebreak(a, b) < 0;
    }
    case Ord::Lex: {
        for (std::size_t i = 0; i < a.e.size(); ++i) {
            const int d = a.e[i] - b.e[i];
            if (d != 0) return d < 0;
        }
        return false;
    }
    case Ord::NegDegRevLex: {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return revlex_tiebreak(a, b) < 0;
    }
    }
    return false; // unreachable
}

/// Canonical storage/printing comparator (ascending grevlex).
struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return mon_less(a, b, Ord::Grevlex);
    }
};

} // namespace logdiv

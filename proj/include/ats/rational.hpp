#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ats {

using Rat = mpq_class;

// Parses "a" or "a/b" (b > 0 after canonicalization).
inline Rat parse_rat(const std::string& tok) {
    Rat q;
    if (tok.empty() || q.set_str(tok, 10) != 0 || q.get_den() == 0)
        throw std::runtime_error("bad rational token: '" + tok + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace ats

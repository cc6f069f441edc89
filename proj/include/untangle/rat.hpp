#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace untangle {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the serialized form we need.
using Rat = mpq_class;

// Parses "p" or "p/q" in base 10. Throws ParseError on malformed input or q == 0.
Rat parse_rat(const std::string& s);

// Serializes in lowest terms: "p" if the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& r);

// Total bit length of numerator and denominator (measure of coordinate size).
long rat_bits(const Rat& r);

struct Pt {
    Rat x, y;
    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Pt& o) const { return !(*this == o); }
};

using Drawing = std::vector<Pt>;

long drawing_bits(const Drawing& d);

}  // namespace untangle

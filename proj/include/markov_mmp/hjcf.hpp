#pragma once

// Hirzebruch-Jung continued fractions [e1,...,er] = e1 - 1/(e2 - 1/(...)).
// Positions handed to blow_up/blow_down are 1-based.

#include <optional>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace mm {

using Seq = std::vector<Int>;

struct Frac {
    Int delta, omega;
    bool operator==(const Frac&) const = default;
};

struct Mat2 {
    Int a, b, c, d;  // [[a,b],[c,d]]
    bool operator==(const Mat2&) const = default;
    Mat2 operator*(const Mat2& m) const {
        return {a * m.a + b * m.c, a * m.b + b * m.d, c * m.a + d * m.c, c * m.b + d * m.d};
    }
};

bool valid_frac(const Frac& f);

Seq expand(const Int& m, const Int& q);
inline Seq expand(const Frac& f) { return expand(f.delta, f.omega); }

// nullopt when the sequence is inadmissible or a division by zero occurs.
std::optional<Rat> evaluate(const Seq& s);

Seq dual(const Frac& f);
Int inverse_den(const Frac& f);

Seq blow_up(const Seq& s, std::size_t pos);
Seq blow_down(const Seq& s, std::size_t pos);

bool is_zero_cf(const Seq& s);

struct ZeroCF {
    Seq cf;
    std::vector<int> degrees;  // v_0, v_1, ..., v_s
};
std::vector<ZeroCF> enumerate_zero_cf(int s);

bool blows_down_to(const Seq& s, const Seq& target);

Mat2 matrix_of(const Seq& s);

// Numerator and denominator read off the matrix product (TL, BL).
// Empty sequence gives (1, 0).
std::pair<Int, Int> num_den(const Seq& s);

// Blow down every 1, always taking the leftmost. Returns the final sequence and
// how many blow-downs fell off the left and right ends.
struct Cascade {
    Seq rest;
    int left = 0, right = 0;
};
Cascade blow_down_all(Seq s);

Seq reversed(Seq s);
Seq concat(std::initializer_list<const Seq*> parts);

}  // namespace mm

#include "parity/quadfield.hpp"

#include <stdexcept>

#include "parity/factor.hpp"

namespace parity {

QuadField::QuadField(i64 d) : d_(d) {
    if (d == 0 || d == 1) throw std::domain_error("QuadField: d must not be 0 or 1");
    if (!default_factorizer().factor(d).is_squarefree())
        throw std::domain_error("QuadField: d must be squarefree");
    half_ = ((d % 4 + 4) % 4) == 1;
    disc_ = half_ ? d : 4 * d;
}

std::string QuadField::str() const { return "Q(sqrt(" + std::to_string(d_) + "))"; }

namespace {
void require_same(const QuadField& a, const QuadField& b) {
    if (a != b) throw std::domain_error("QuadInt: mixed fields");
}
}  // namespace

QuadInt QuadInt::operator+(const QuadInt& o) const {
    require_same(field, o.field);
    return {field, checked_i64(static_cast<i128>(x) + o.x, "QuadInt add"),
            checked_i64(static_cast<i128>(y) + o.y, "QuadInt add")};
}

QuadInt QuadInt::operator-(const QuadInt& o) const {
    require_same(field, o.field);
    return {field, checked_i64(static_cast<i128>(x) - o.x, "QuadInt sub"),
            checked_i64(static_cast<i128>(y) - o.y, "QuadInt sub")};
}

QuadInt QuadInt::scaled(i64 k) const {
    return {field, checked_i64(static_cast<i128>(x) * k, "QuadInt scale"),
            checked_i64(static_cast<i128>(y) * k, "QuadInt scale")};
}

QuadInt QuadInt::operator*(const QuadInt& o) const {
    require_same(field, o.field);
    i128 x1 = x, y1 = y, x2 = o.x, y2 = o.y;
    i128 rx, ry;
    if (field.half_basis()) {
        // omega^2 = omega + (d - 1)/4
        i128 t = (static_cast<i128>(field.d()) - 1) / 4;
        rx = x1 * x2 + y1 * y2 * t;
        ry = x1 * y2 + y1 * x2 + y1 * y2;
    } else {
        // omega^2 = d
        rx = x1 * x2 + y1 * y2 * field.d();
        ry = x1 * y2 + y1 * x2;
    }
    return {field, checked_i64(rx, "QuadInt mult"), checked_i64(ry, "QuadInt mult")};
}

QuadInt QuadInt::conjugate() const {
    if (field.half_basis()) {
        // conj(omega) = 1 - omega
        return {field, checked_i64(static_cast<i128>(x) + y, "QuadInt conj"), -y};
    }
    return {field, x, -y};
}

i128 QuadInt::norm() const {
    i128 xx = x, yy = y;
    if (field.half_basis()) {
        // (x + y*omega)(x + y - y*omega) = x^2 + xy - y^2 (d-1)/4
        i128 t = (static_cast<i128>(field.d()) - 1) / 4;
        return xx * xx + xx * yy - yy * yy * t;
    }
    return xx * xx - static_cast<i128>(field.d()) * yy * yy;
}

i128 QuadInt::trace() const {
    if (field.half_basis()) return 2 * static_cast<i128>(x) + y;
    return 2 * static_cast<i128>(x);
}

std::string QuadInt::str() const {
    std::string w = field.half_basis() ? "w" : "s";  // w = (1+sqrt d)/2, s = sqrt d
    return std::to_string(x) + (y >= 0 ? "+" : "") + std::to_string(y) + w;
}

Vec2 embed_j(const QuadInt& z) { return {z.x, z.y}; }

QuadInt unembed_j(const QuadField& K, Vec2 v) { return {K, v.x, v.y}; }

}  // namespace parity

#pragma once

#include <cctype>
#include <charconv>
#include <cstdio>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "gemq/dimension.hpp"
#include "gemq/errors.hpp"
#include "gemq/quantity.hpp"

namespace gemq {

// Shortest decimal that round-trips the exact double. Locale-independent.
inline std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// Fixed-precision rendering for display-only values (decade gaps etc.).
inline std::string format_fixed(double v, int precision) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, precision);
    if (res.ec != std::errc{}) return format_double(v);
    return std::string(buf, res.ptr);
}

namespace detail {

struct UnitAtom {
    const char* symbol;
    Dimension dim;
};

// Accepted unit symbols. All are factor-1 SI; no scaled units (g, km, ...).
inline const std::vector<UnitAtom>& unit_atoms() {
    static const std::vector<UnitAtom> table = {
        {"kg", dims::mass},
        {"m", dims::length},
        {"s", dims::time},
        {"A", Dimension::current()},
        {"K", Dimension::temperature()},
        {"mol", Dimension::amount()},
        {"cd", Dimension::luminosity()},
        {"N", dims::force},
        {"J", dims::energy},
        {"Hz", dims::frequency},
        {"rad", dims::scalar},
        {"1", dims::scalar},
    };
    return table;
}

inline Dimension lookup_atom(std::string_view sym, std::string_view whole) {
    for (const auto& a : unit_atoms())
        if (sym == a.symbol) return a.dim;
    throw parse_error("unknown unit '" + std::string(sym) + "' in \"" + std::string(whole) + "\"");
}

} // namespace detail

/// Parses a unit expression such as "kg", "m/s^2", "kg m^2 / s^3", "1/s",
/// "m^1/2". Tokens multiply; each '/' inverts the following token.
inline Dimension parse_unit(std::string_view text) {
    Dimension result = Dimension::none();
    std::size_t i = 0;
    const std::size_t n = text.size();
    bool invert_next = false;
    bool saw_token = false;

    auto skip_ws = [&] {
        while (i < n && (text[i] == ' ' || text[i] == '\t' || text[i] == '*')) ++i;
    };

    skip_ws();
    while (i < n) {
        if (text[i] == '/') {
            if (invert_next || !saw_token)
                throw parse_error("misplaced '/' in unit \"" + std::string(text) + "\"");
            invert_next = true;
            ++i;
            skip_ws();
            continue;
        }
        // atom
        std::size_t start = i;
        while (i < n && (std::isalnum(static_cast<unsigned char>(text[i]))))
            ++i;
        if (i == start)
            throw parse_error("malformed unit \"" + std::string(text) + "\"");
        std::string_view sym = text.substr(start, i - start);
        Dimension d = detail::lookup_atom(sym, text);

        // optional ^exponent, integer or half-integer (n/2)
        int num = 2; // numerator over denominator 2, i.e. exponent 1
        if (i < n && text[i] == '^') {
            ++i;
            std::size_t es = i;
            if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == es || (text[es] == '-' && i == es + 1))
                throw parse_error("malformed exponent in \"" + std::string(text) + "\"");
            int whole = 0;
            std::from_chars(text.data() + es, text.data() + i, whole);
            num = whole * 2;
            if (i + 1 < n && text[i] == '/' && text[i + 1] == '2' &&
                (i + 2 == n || text[i + 2] == ' ' || text[i + 2] == '\t' ||
                 text[i + 2] == '*' || text[i + 2] == '/')) {
                num = whole; // "n/2" half-integer exponent
                i += 2;
            }
        }
        Dimension powd;
        {
            // raise d to num/2 where d's own numerators are already *2
            for (int k = 0; k < Dimension::kBaseCount; ++k) {
                int nk = d.numerator(k) * num / 2;
                if (nk != 0) powd = powd * Dimension::base(static_cast<BaseDim>(k), nk);
            }
        }
        result = invert_next ? result / powd : result * powd;
        invert_next = false;
        saw_token = true;
        skip_ws();
    }
    if (invert_next)
        throw parse_error("dangling '/' in unit \"" + std::string(text) + "\"");
    return result;
}

inline std::string format_quantity(const Quantity& q) {
    std::string out;
    if (q.is_scalar()) {
        out = format_double(q.si());
    } else {
        const Vec3& v = q.vec();
        out = "(" + format_double(v.x) + "," + format_double(v.y) + "," + format_double(v.z) + ")";
    }
    if (!q.is_dimensionless()) {
        out += ' ';
        out += q.dim().str();
    }
    return out;
}

/// Parses "<number> [unit]" or "(<x>,<y>,<z>) [unit]" back into a Quantity.
/// Round-trips format_quantity() bit-exactly.
inline Quantity parse_quantity(std::string_view text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == n) throw parse_error("empty quantity string");

    auto parse_number = [&](std::size_t& pos) -> double {
        double value = 0.0;
        auto res = std::from_chars(text.data() + pos, text.data() + n, value);
        if (res.ec != std::errc{})
            throw parse_error("malformed number in \"" + std::string(text) + "\"");
        pos = static_cast<std::size_t>(res.ptr - text.data());
        return value;
    };

    if (text[i] == '(') {
        ++i;
        double comp[3];
        for (int k = 0; k < 3; ++k) {
            while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            comp[k] = parse_number(i);
            while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            const char expect = (k < 2) ? ',' : ')';
            if (i >= n || text[i] != expect)
                throw parse_error("malformed vector in \"" + std::string(text) + "\"");
            ++i;
        }
        Dimension d = parse_unit(text.substr(i));
        return Quantity::vector({comp[0], comp[1], comp[2]}, d);
    }

    const double value = parse_number(i);
    Dimension d = parse_unit(text.substr(i));
    return Quantity::scalar(value, d);
}

// Parses and additionally demands a specific dimension; `field` names the
// offending input in the error message.
inline Quantity parse_quantity_as(std::string_view text, const Dimension& want,
                                  const std::string& field) {
    Quantity q = [&] {
        try {
            return parse_quantity(text);
        } catch (const parse_error& e) {
            throw parse_error("field '" + field + "': " + e.what());
        }
    }();
    if (q.dim() != want)
        throw parse_error("field '" + field + "': expected dimension " + want.str() + ", got " +
                          q.dim().str() + " in \"" + std::string(text) + "\"");
    return q;
}

} // namespace gemq

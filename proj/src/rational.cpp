#include <confcause/rational.hpp>

#include <confcause/errors.hpp>

#include <cctype>

namespace confcause {

std::string to_fraction_string(const rational& r)
{
    const big_int num = boost::multiprecision::numerator(r);
    const big_int den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

std::string to_decimal_string(const rational& r, int significant_digits)
{
    if (significant_digits < 1)
        significant_digits = 1;
    if (r == 0)
        return "0";

    big_int num = boost::multiprecision::numerator(r);
    const big_int den = boost::multiprecision::denominator(r);
    const bool negative = num < 0;
    if (negative)
        num = -num;

    // Scale so the quotient carries `significant_digits` digits, then round
    // half away from zero and place the decimal point.
    int magnitude = 0; // digits of the integer part of num/den, 0 when < 1
    big_int probe = num / den;
    while (probe > 0) {
        ++magnitude;
        probe /= 10;
    }
    int shift = significant_digits - magnitude;
    if (magnitude == 0) {
        // Count leading zeros after the point.
        big_int scaled = num;
        while (scaled * 10 / den == 0) {
            scaled *= 10;
            ++shift;
        }
    }

    big_int pow10 = 1;
    for (int i = 0; i < shift; ++i)
        pow10 *= 10;
    big_int scaled_num = num * pow10;
    big_int digits = (2 * scaled_num + den) / (2 * den); // round half up

    std::string repr = digits.str();
    std::string out;
    if (shift <= 0) {
        out = repr;
        for (int i = 0; i < -shift; ++i)
            out += '0';
    } else {
        while (static_cast<int>(repr.size()) <= shift)
            repr.insert(repr.begin(), '0');
        out = repr.substr(0, repr.size() - static_cast<std::size_t>(shift)) + "." +
              repr.substr(repr.size() - static_cast<std::size_t>(shift));
        while (out.back() == '0')
            out.pop_back();
        if (out.back() == '.')
            out.pop_back();
    }
    return negative ? "-" + out : out;
}

namespace {

rational parse_plain_decimal(std::string_view text)
{
    std::size_t i = 0;
    const auto fail = [&]() -> rational {
        throw error("unparsable decimal '" + std::string(text) + "'");
    };
    if (text.empty())
        return fail();

    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }

    big_int mantissa = 0;
    int int_digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        mantissa = mantissa * 10 + (text[i] - '0');
        ++int_digits;
        ++i;
    }
    int frac_digits = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            mantissa = mantissa * 10 + (text[i] - '0');
            ++frac_digits;
            ++i;
        }
        if (frac_digits == 0)
            return fail();
    }
    if (int_digits == 0 && frac_digits == 0)
        return fail();

    int exponent = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_negative = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            exp_negative = text[i] == '-';
            ++i;
        }
        if (i == text.size())
            return fail();
        int digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            exponent = exponent * 10 + (text[i] - '0');
            if (exponent > 1000)
                return fail();
            ++digits;
            ++i;
        }
        if (digits == 0)
            return fail();
        if (exp_negative)
            exponent = -exponent;
    }
    if (i != text.size())
        return fail();

    const int scale = exponent - frac_digits; // value = mantissa * 10^scale
    if (scale < -9)
        throw error("decimal '" + std::string(text) +
                    "' has more than 9 fractional digits");

    rational value(mantissa);
    big_int pow10 = 1;
    for (int k = 0; k < (scale < 0 ? -scale : scale); ++k)
        pow10 *= 10;
    if (scale < 0)
        value /= rational(pow10);
    else
        value *= rational(pow10);
    return negative ? -value : value;
}

} // namespace

rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return parse_plain_decimal(text);

    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    auto parse_int = [&](std::string_view part) -> big_int {
        if (part.empty())
            throw error("unparsable rational '" + std::string(text) + "'");
        std::size_t i = part[0] == '+' || part[0] == '-' ? 1 : 0;
        if (i == part.size())
            throw error("unparsable rational '" + std::string(text) + "'");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw error("unparsable rational '" + std::string(text) + "'");
        return big_int(std::string(part));
    };
    const big_int n = parse_int(num);
    const big_int d = parse_int(den);
    if (d == 0)
        throw error("zero denominator in '" + std::string(text) + "'");
    return rational(n, d);
}

rational parse_decimal(std::string_view text)
{
    if (text.find('/') != std::string_view::npos)
        throw error("expected a decimal, got '" + std::string(text) + "'");
    return parse_plain_decimal(text);
}

} // namespace confcause

#include "qfa/rational.hpp"

#include <charconv>
#include <compare>
#include <numeric>

namespace qfa {

namespace {

std::int64_t parse_int(std::string_view digits, std::string_view whole) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw ParameterError("number out of range: '" + std::string(whole) + "'");
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
        throw ParameterError("not a rational number: '" + std::string(whole) + "'");
    return value;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b, std::string_view whole) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw ParameterError("number out of range: '" + std::string(whole) + "'");
    return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw ParameterError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw ParameterError("empty rational");
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = parse_int(text.substr(0, slash), text);
        const auto den_text = text.substr(slash + 1);
        if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
            throw ParameterError("not a rational number: '" + std::string(text) + "'");
        const auto den = parse_int(den_text, text);
        if (den == 0) throw ParameterError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) return Rational(parse_int(text, text));

    std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && int_part[0] == '-') {
        negative = true;
        int_part.remove_prefix(1);
    }
    if (int_part.empty() && frac_part.empty()) throw ParameterError("not a rational number: '" + std::string(text) + "'");
    if (frac_part.size() > 18) throw ParameterError("too many decimal digits: '" + std::string(text) + "'");
    const std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
    const std::int64_t frac = frac_part.empty() ? 0 : parse_int(frac_part, text);
    if (whole < 0 || frac < 0) throw ParameterError("not a rational number: '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    std::int64_t num = 0;
    if (__builtin_add_overflow(checked_mul(whole, scale, text), frac, &num))
        throw ParameterError("number out of range: '" + std::string(text) + "'");
    return Rational(negative ? -num : num, scale);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    const std::string_view what = "rational subtraction";
    const std::int64_t den = checked_mul(a.den_, b.den_, what);
    std::int64_t num = 0;
    if (__builtin_sub_overflow(checked_mul(a.num_, b.den_, what), checked_mul(b.num_, a.den_, what), &num))
        throw ParameterError("overflow in rational subtraction");
    return Rational(num, den);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __extension__ using Wide = __int128;
    const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
    const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
    return lhs <=> rhs;
}

}  // namespace qfa

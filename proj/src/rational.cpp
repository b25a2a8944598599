#include "twcert/rational.hpp"

#include <charconv>

namespace twcert {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole)
{
    std::int64_t value = 0;
    const char * first = text.data();
    const char * last = text.data() + text.size();
    if (!text.empty() && text.front() == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    return value;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text, text));
    }
    auto num = parse_int(text.substr(0, slash), text);
    auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b)
{
    auto g = std::gcd(a, b);
    __int128 r = static_cast<__int128>(a / g) * b;
    if (r < 0) {
        r = -r;
    }
    if (r > INT64_MAX) {
        throw std::overflow_error("lcm overflow");
    }
    return static_cast<std::int64_t>(r);
}

} // namespace twcert

#include "rainbow/rational.hpp"

#include "rainbow/hypergraph.hpp"

#include <cctype>

namespace rainbow {

std::string to_string(const Rational& r)
{
    Rational c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

    bool is_integer_text(std::string_view s)
    {
        if (!s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    }

} // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+')
        throw InputError("malformed rational '" + std::string(text) + "'");
    mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw InputError("rational with zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

} // namespace rainbow

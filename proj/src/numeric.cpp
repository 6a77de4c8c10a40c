#include "symorb/numeric.hpp"

#include <sstream>

namespace symorb {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos)
        throw ParseError("floating-point literal rejected: " + s);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw ZeroDenominator("zero denominator in " + s);
        return Rational(num, den);
    } catch (const ZeroDenominator&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("cannot parse rational: " + s);
    }
}

std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Vec parse_rational_vector(const std::string& s) {
    Vec out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_rational(tok));
    if (out.empty()) throw ParseError("empty vector literal");
    return out;
}

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

unsigned largest_prime_leq(unsigned n) {
    if (n < 2) throw IndexOutOfRange("no prime <= " + std::to_string(n));
    for (unsigned p = n;; --p)
        if (is_prime(p)) return p;
}

unsigned mul_order_mod(unsigned k, unsigned p) {
    k %= p;
    if (k == 0) throw NotUnit("0 is not a unit mod " + std::to_string(p));
    unsigned ord = 1;
    unsigned x = k;
    while (x != 1) {
        x = (x * k) % p;
        ++ord;
    }
    return ord;
}

unsigned primitive_root(unsigned p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    for (unsigned k = 2; k < p; ++k)
        if (mul_order_mod(k, p) == p - 1) return k;
    throw NotPrime("no primitive root mod " + std::to_string(p));
}

} // namespace symorb

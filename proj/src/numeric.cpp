#include "pushtrack/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "pushtrack/errors.hpp"

namespace pushtrack {

std::string rat_to_string(const Rat& r) {
    // boost::rational keeps lowest terms with positive denominator.
    std::string s = r.numerator().str();
    if (r.denominator() != 1) {
        s += "/";
        s += r.denominator().str();
    }
    return s;
}

Rat rat_from_string(const std::string& s) {
    try {
        if (auto slash = s.find('/'); slash != std::string::npos) {
            Int num(s.substr(0, slash));
            Int den(s.substr(slash + 1));
            if (den == 0) fail(ErrorKind::BadParameters, "zero denominator in rational: " + s);
            return Rat(num, den);
        }
        // Also accept decimal and scientific notation: 0.001, 1e-9, 2.5e3.
        std::string mantissa = s;
        long exp10 = 0;
        if (auto e = s.find_first_of("eE"); e != std::string::npos) {
            mantissa = s.substr(0, e);
            exp10 = std::stol(s.substr(e + 1));
        }
        if (auto dot = mantissa.find('.'); dot != std::string::npos) {
            exp10 -= static_cast<long>(mantissa.size() - dot - 1);
            mantissa.erase(dot, 1);
        }
        if (mantissa.empty() || mantissa == "-" || mantissa == "+")
            fail(ErrorKind::BadParameters, "malformed rational: " + s);
        Rat r{Int(mantissa)};
        const Int scale = int_pow(10, static_cast<unsigned>(exp10 < 0 ? -exp10 : exp10));
        return exp10 < 0 ? r / scale : r * scale;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(ErrorKind::BadParameters, "malformed rational: " + s);
    }
}

double rat_to_double(const Rat& r) {
    Int num = r.numerator();
    Int den = r.denominator();
    if (num == 0) return 0.0;
    bool neg = num < 0;
    if (neg) num = -num;
    // Numerator and denominator can each exceed the double range even when
    // the ratio is small; shift both into range and restore the exponent.
    auto bits = [](const Int& v) { return static_cast<long>(boost::multiprecision::msb(v)); };
    long sn = std::max(0L, bits(num) - 380);
    long sd = std::max(0L, bits(den) - 380);
    double x = (num >> sn).convert_to<double>() / (den >> sd).convert_to<double>();
    x = std::ldexp(x, static_cast<int>(sn - sd));
    return neg ? -x : x;
}

}  // namespace pushtrack

#include "einkit/scalar.hpp"

#include <atomic>
#include <cstdlib>

namespace einkit {

namespace {
std::atomic<double> g_eps{1e-10};
}

double float_eps() { return g_eps.load(std::memory_order_relaxed); }
void set_float_eps(double eps) { g_eps.store(eps, std::memory_order_relaxed); }

Rat parse_rat(std::string_view s) {
  std::string str(s);
  if (str.empty()) throw std::invalid_argument("empty rational");
  if (str.find_first_of(".eE") != std::string::npos) {
    // decimal input is read exactly from its digits
    std::size_t epos = str.find_first_of("eE");
    long exp10 = 0;
    std::string mant = str;
    if (epos != std::string::npos) {
      exp10 = std::stol(str.substr(epos + 1));
      mant = str.substr(0, epos);
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
      neg = mant[0] == '-';
      mant = mant.substr(1);
    }
    std::size_t dot = mant.find('.');
    std::string digits = mant;
    if (dot != std::string::npos) {
      exp10 -= static_cast<long>(mant.size() - dot - 1);
      digits = mant.substr(0, dot) + mant.substr(dot + 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad rational: " + str);
    Rat v{boost::multiprecision::mpz_int(digits)};
    Rat ten = 10;
    for (long i = 0; i < std::labs(exp10); ++i) v = exp10 > 0 ? v * ten : v / ten;
    return neg ? Rat(-v) : v;
  }
  try {
    return Rat(str);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational: " + str);
  }
}

std::string to_string(const Rat& x) { return x.str(); }

}  // namespace einkit

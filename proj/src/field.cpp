#include "shiftlab/field.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include "shiftlab/error.hpp"

namespace shiftlab {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  return boost::multiprecision::miller_rabin_test(boost::multiprecision::cpp_int(p), 32);
}

PrimeField::PrimeField(std::uint64_t p) : p_(p), mersenne_(p == kMersenne61) {
  if (p >= (std::uint64_t{1} << 62) || !is_prime(p)) {
    throw Error(ErrorKind::InvalidParameters, std::to_string(p) + " is not a prime below 2^62");
  }
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const {
  Element result = 1;
  while (e != 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

}  // namespace shiftlab

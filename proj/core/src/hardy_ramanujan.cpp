#include <hilbert/analysis.hpp>
#include <hilbert/errors.hpp>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <ios>

namespace hilbert {

HardyRamanujan hr_compare(std::size_t n) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  if (n == 0) throw InvalidSpecError("the Hardy-Ramanujan comparison needs n >= 1");

  Integer exact = generate(series::Partition{}, n)[n];
  const Float size(static_cast<unsigned long long>(n));
  const Float pi = boost::math::constants::pi<Float>();
  const Float sqrt3 = boost::multiprecision::sqrt(Float(3));
  const Float asymptotic = boost::multiprecision::exp(pi * boost::multiprecision::sqrt(2 * size / 3)) / (4 * size * sqrt3);
  const Float ratio = Float(exact.get_str()) / asymptotic;
  return {n, std::move(exact), asymptotic.str(30, std::ios_base::scientific), ratio.convert_to<double>()};
}

}  // namespace hilbert

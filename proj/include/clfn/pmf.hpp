#ifndef CLFN_PMF_HPP
#define CLFN_PMF_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "clfn/rng.hpp"

namespace clfn {

// Finite-support probability mass function. Values are nonnegative reals
// (integer-valued supports are required where the pmf drives set sizes).
class DiscretePmf {
 public:
  DiscretePmf() = default;  // empty; only from_pairs/parse produce usable pmfs

  // Validates: values distinct and nonnegative, probabilities >= 0,
  // total probability within 1e-12 of 1. Entries are stored sorted by value.
  static DiscretePmf from_pairs(std::vector<std::pair<double, double>> entries);

  // Parses the compact "value:prob[,value:prob...]" command-line syntax.
  static DiscretePmf parse(const std::string& text);

  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return values_.size(); }
  double max_value() const { return values_.back(); }
  bool has_integer_support() const;

  // E V^r as an exact finite sum over the support.
  double moment(unsigned r) const;

  // Inverse-CDF draw; consumes exactly one uniform from the stream.
  double sample(SubstreamRng& rng) const;

  std::string to_string() const;

 private:
  std::vector<double> values_;
  std::vector<double> probs_;
  std::vector<double> cumulative_;
};

}  // namespace clfn

#endif  // CLFN_PMF_HPP

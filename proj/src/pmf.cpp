#include "clfn/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace clfn {

DiscretePmf DiscretePmf::from_pairs(
    std::vector<std::pair<double, double>> entries) {
  if (entries.empty())
    throw std::invalid_argument("pmf: empty support");
  std::sort(entries.begin(), entries.end());
  DiscretePmf pmf;
  double total = 0.0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto [value, prob] = entries[i];
    if (!(value >= 0.0) || !std::isfinite(value))
      throw std::invalid_argument("pmf: support values must be finite and >= 0");
    if (!(prob >= 0.0) || !std::isfinite(prob))
      throw std::invalid_argument("pmf: probabilities must be finite and >= 0");
    if (i > 0 && value == entries[i - 1].first)
      throw std::invalid_argument("pmf: duplicate support value");
    total += prob;
    pmf.values_.push_back(value);
    pmf.probs_.push_back(prob);
    pmf.cumulative_.push_back(total);
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("pmf: probabilities sum to " +
                                std::to_string(total) + ", expected 1");
  return pmf;
}

DiscretePmf DiscretePmf::parse(const std::string& text) {
  std::vector<std::pair<double, double>> entries;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("pmf: expected value:prob, got '" + item + "'");
    try {
      std::size_t used = 0;
      const double value = std::stod(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("");
      const std::string ptxt = item.substr(colon + 1);
      const double prob = std::stod(ptxt, &used);
      if (used != ptxt.size()) throw std::invalid_argument("");
      entries.emplace_back(value, prob);
    } catch (const std::exception&) {
      throw std::invalid_argument("pmf: cannot parse entry '" + item + "'");
    }
    pos = comma + 1;
  }
  return from_pairs(std::move(entries));
}

bool DiscretePmf::has_integer_support() const {
  for (double v : values_)
    if (v != std::floor(v)) return false;
  return true;
}

double DiscretePmf::moment(unsigned r) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i)
    acc += probs_[i] * std::pow(values_[i], static_cast<double>(r));
  return acc;
}

double DiscretePmf::sample(SubstreamRng& rng) const {
  const double u = rng.next_unit();
  // First index whose cumulative mass exceeds u; the final entry absorbs
  // the 1e-12 normalization slack.
  const auto it =
      std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  const std::size_t idx = it == cumulative_.end()
                              ? values_.size() - 1
                              : static_cast<std::size_t>(it - cumulative_.begin());
  return values_[idx];
}

std::string DiscretePmf::to_string() const {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < values_.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g:%.12g", values_[i], probs_[i]);
    if (i) out += ',';
    out += buf;
  }
  return out;
}

}  // namespace clfn

#include "cauchyscope/common.hpp"

namespace cauchyscope {

namespace {

template <typename T>
T pairwise_sum_impl(std::span<const T> terms) {
  if (terms.size() <= 32) {
    T acc{};
    for (const T& t : terms) acc += t;
    return acc;
  }
  const std::size_t half = terms.size() / 2;
  return pairwise_sum_impl(terms.first(half)) +
         pairwise_sum_impl(terms.subspan(half));
}

}  // namespace

Complex pairwise_sum(std::span<const Complex> terms) {
  return pairwise_sum_impl(terms);
}

double pairwise_sum(std::span<const double> terms) {
  return pairwise_sum_impl(terms);
}

}  // namespace cauchyscope

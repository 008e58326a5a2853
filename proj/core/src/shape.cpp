#include "mombin/shape.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mombin {

int Shape::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

bool Shape::well_formed() const {
  if (counts.empty() || counts.front() < 1 || counts.back() < 1) return false;
  return std::all_of(counts.begin(), counts.end(), [](int v) { return v >= 0; });
}

bool Shape::is_palindrome() const { return std::equal(counts.begin(), counts.end(), counts.rbegin()); }

std::string Shape::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < counts.size(); ++i) os << (i ? "," : "") << counts[i];
  return os.str();
}

}  // namespace mombin

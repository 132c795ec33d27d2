#include <deque>
#include <set>

#include "stratoforest/signature.hpp"
#include "stratoforest/whitehead.hpp"

namespace stratoforest {

std::vector<Signature> enumerate_all(int n, int max_codim, const EnumerationLimits& lim) {
  auto gen = enumerate_generic_signatures(n, lim);
  std::set<Signature> seen(gen.begin(), gen.end());
  std::deque<Signature> queue(gen.begin(), gen.end());
  while (!queue.empty()) {
    Signature s = std::move(queue.front());
    queue.pop_front();
    for (auto& [mv, t] : enumerate_contractions(s)) {
      if (codimension(t) > max_codim) continue;
      if (seen.insert(t).second) {
        if (seen.size() > lim.budget)
          throw BudgetExceeded("enumeration exceeded the budget of " + std::to_string(lim.budget) + " signatures");
        queue.push_back(t);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace stratoforest

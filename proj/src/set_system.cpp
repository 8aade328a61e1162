#include "setmax/set_system.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "setmax/errors.hpp"

namespace setmax {

std::size_t LabelHash::operator()(const Label& label) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ label.size();
  for (auto v : label) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool is_subset(const Label& a, const Label& b) {
  return a.size() <= b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_strict_subset(const Label& a, const Label& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Label label_union(const Label& a, const Label& b) {
  Label out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t overlap(const Label& a, const Label& b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

std::string format_label(const Label& label) {
  std::ostringstream os;
  os << '{';
  for (std::size_t t = 0; t < label.size(); ++t) {
    if (t) os << ',';
    os << label[t] + 1;
  }
  os << '}';
  return os.str();
}

SetSystem::SetSystem(std::size_t n, std::vector<std::vector<ElementIndex>> sets)
    : n_(n), sets_(std::move(sets)) {
  for (auto& s : sets_) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    p_ += s.size();
  }
}

std::vector<Violation> validate(const SetSystem& system) {
  std::vector<Violation> out;
  std::size_t total = 0;
  std::map<std::vector<ElementIndex>, std::size_t> seen;
  for (std::size_t i = 0; i < system.m(); ++i) {
    const auto& s = system.set(static_cast<SetIndex>(i));
    total += s.size();
    if (s.empty()) {
      out.push_back({ViolationKind::empty_set, i, 0, "set " + std::to_string(i + 1) + " is empty"});
    }
    for (auto e : s) {
      if (e >= system.n()) {
        out.push_back({ViolationKind::index_out_of_range, i, 0,
                       "set " + std::to_string(i + 1) + " contains element " + std::to_string(e) +
                           " but n = " + std::to_string(system.n())});
        break;
      }
    }
    auto [it, inserted] = seen.emplace(s, i);
    if (!inserted) {
      out.push_back({ViolationKind::duplicate_set, i, it->second,
                     "set " + std::to_string(i + 1) + " duplicates set " +
                         std::to_string(it->second + 1)});
    }
  }
  if (total != system.p()) {
    out.push_back({ViolationKind::stale_total, 0, 0,
                   "cached p = " + std::to_string(system.p()) + " but sets hold " +
                       std::to_string(total)});
  }
  return out;
}

void require_valid(const SetSystem& system) {
  auto violations = validate(system);
  if (!violations.empty()) throw InputError("invalid set system: " + violations.front().message);
}

Label signature(ElementIndex element, const SetSystem& system) {
  if (element >= system.n()) throw InputError("signature: element index out of range");
  Label out;
  for (std::size_t i = 0; i < system.m(); ++i) {
    const auto& s = system.set(static_cast<SetIndex>(i));
    if (std::binary_search(s.begin(), s.end(), element)) out.push_back(static_cast<SetIndex>(i));
  }
  return out;
}

std::vector<Label> signatures(const SetSystem& system) {
  std::vector<Label> out(system.n());
  for (std::size_t i = 0; i < system.m(); ++i) {
    for (auto e : system.set(static_cast<SetIndex>(i))) {
      if (e < system.n()) out[e].push_back(static_cast<SetIndex>(i));
    }
  }
  return out;
}

}  // namespace setmax

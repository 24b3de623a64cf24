#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace upalg {

/// One checked claim.  `detail` names the instance on success and carries
/// the witness on failure.
struct Claim {
  std::string id;
  bool passed = false;
  std::string detail;
};

class Checklist {
 public:
  void add(std::string id, bool passed, std::string detail = {}) {
    claims_.push_back({std::move(id), passed, std::move(detail)});
  }

  /// Copies every claim of `other` with ids prefixed by "<prefix>.".
  void append(std::string const& prefix, Checklist const& other) {
    for (auto const& c : other.claims_) {
      claims_.push_back({prefix + "." + c.id, c.passed, c.detail});
    }
  }

  bool all_passed() const noexcept {
    return std::all_of(claims_.begin(), claims_.end(),
                       [](Claim const& c) { return c.passed; });
  }

  Claim const* first_failure() const noexcept {
    auto it = std::find_if(claims_.begin(), claims_.end(),
                           [](Claim const& c) { return !c.passed; });
    return it == claims_.end() ? nullptr : &*it;
  }

  std::vector<Claim> const& claims() const noexcept { return claims_; }
  std::size_t size() const noexcept { return claims_.size(); }

 private:
  std::vector<Claim> claims_;
};

}  // namespace upalg

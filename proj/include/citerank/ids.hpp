#pragma once

#include <compare>
#include <cstdint>
#include <functional>

namespace citerank {

// Dense handle wrapper. Tag keeps paper and journal handles from mixing.
template <typename Tag>
struct DenseId {
  using value_type = std::uint32_t;

  value_type value = 0;

  constexpr DenseId() = default;
  constexpr explicit DenseId(value_type v) : value(v) {}

  constexpr auto operator<=>(const DenseId&) const = default;
};

struct PaperTag {};
struct JournalTag {};

using PaperId = DenseId<PaperTag>;
using JournalId = DenseId<JournalTag>;

}  // namespace citerank

template <typename Tag>
struct std::hash<citerank::DenseId<Tag>> {
  std::size_t operator()(const citerank::DenseId<Tag>& id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};

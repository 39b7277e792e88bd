#include "sigmax/spaces.hpp"

#include <algorithm>
#include <unordered_set>

namespace sigmax {

const char* space_kind_name(SpaceKind kind) {
  return kind == SpaceKind::random ? "random" : "fuzzy";
}

SampleSpace::SampleSpace(SpaceKind kind, std::vector<std::string> labels)
    : kind_(kind), labels_(std::move(labels)) {
  if (labels_.empty()) fail(Errc::invalid_argument, "sample space needs at least one label");
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (label.empty()) fail(Errc::invalid_argument, "empty outcome label");
    if (!seen.insert(label).second)
      fail(Errc::invalid_argument, "duplicate outcome label '" + label + "'");
  }
}

bool SampleSpace::contains(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t SampleSpace::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    fail(Errc::foreign_label, "label '" + label + "' not in the sample space");
  return static_cast<std::size_t>(it - labels_.begin());
}

Event::Event(std::vector<std::string> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

std::uint32_t Event::to_mask(const SampleSpace& space) const {
  std::uint32_t mask = 0;
  for (const auto& label : members_) mask |= std::uint32_t{1} << space.index_of(label);
  return mask;
}

Event Event::from_mask(const SampleSpace& space, std::uint32_t mask) {
  std::vector<std::string> members;
  for (std::size_t i = 0; i < space.size(); ++i)
    if (mask & (std::uint32_t{1} << i)) members.push_back(space.labels()[i]);
  return Event(std::move(members));
}

std::vector<Event> enumerate_events(const SampleSpace& space) {
  if (space.size() > 20)
    fail(Errc::space_too_large,
         "power-set enumeration guarded at 20 labels, got " + std::to_string(space.size()));
  const std::uint32_t count = std::uint32_t{1} << space.size();
  std::vector<Event> events;
  events.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) events.push_back(Event::from_mask(space, mask));
  return events;
}

EventAlgebra event_algebra(const Event& a, const Event& b, const SampleSpace& space) {
  const std::uint32_t ma = a.to_mask(space);
  const std::uint32_t mb = b.to_mask(space);
  const std::uint32_t full = (space.size() == 32)
                                 ? ~std::uint32_t{0}
                                 : (std::uint32_t{1} << space.size()) - 1;
  return EventAlgebra{
      Event::from_mask(space, full & ~ma),
      Event::from_mask(space, ma | mb),
      Event::from_mask(space, ma & mb),
  };
}

}  // namespace sigmax

#pragma once
// Finite sample spaces and their event algebra. A space is an ordered list of
// distinct outcome labels tagged random (mutually exclusive outcomes) or fuzzy
// (non-exclusive outcomes); events are label subsets handled as bitmasks over
// the declared label order.

#include <cstdint>
#include <string>
#include <vector>

#include "sigmax/error.hpp"

namespace sigmax {

enum class SpaceKind { random, fuzzy };

const char* space_kind_name(SpaceKind kind);

class SampleSpace {
 public:
  SampleSpace(SpaceKind kind, std::vector<std::string> labels);

  SpaceKind kind() const { return kind_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }

  bool contains(const std::string& label) const;
  // Throws ForeignLabel for labels not in this space.
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const SampleSpace& a, const SampleSpace& b) {
    return a.kind_ == b.kind_ && a.labels_ == b.labels_;
  }

 private:
  SpaceKind kind_;
  std::vector<std::string> labels_;
};

// A subset of some space's labels. Members are kept sorted and unique so that
// equality is set equality; validation against a concrete space happens when
// the event is converted to a bitmask.
class Event {
 public:
  Event() = default;
  explicit Event(std::vector<std::string> members);

  const std::vector<std::string>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }

  std::uint32_t to_mask(const SampleSpace& space) const;
  static Event from_mask(const SampleSpace& space, std::uint32_t mask);

  friend bool operator==(const Event& a, const Event& b) { return a.members_ == b.members_; }

 private:
  std::vector<std::string> members_;
};

struct EventAlgebra {
  Event complement_a;  // complement of the first operand, relative to the space
  Event union_ab;
  Event intersection_ab;
};

// All 2^N subsets in bitmask-ascending order under the space's label order,
// empty event included. Guarded at N <= 20.
std::vector<Event> enumerate_events(const SampleSpace& space);

EventAlgebra event_algebra(const Event& a, const Event& b, const SampleSpace& space);

}  // namespace sigmax

#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "urban/types.hpp"

namespace urban {

enum class EventKind : std::uint8_t {
  Timer,
  FrameRx,
  MacFeedback,
  Traffic,
  Mobility,
  Energy,
  Control,
};

struct EventHandle {
  std::uint64_t seq = 0;
  bool valid() const { return seq != 0; }
};

// Deterministic event loop. Ties at equal fire time break by insertion
// sequence, so two runs with the same seed replay identically.
class EventEngine {
 public:
  using Action = std::function<void()>;

  EventHandle schedule(SimTime fire_at, NodeId target, EventKind kind, Action action) {
    if (fire_at < now_)
      throw std::logic_error("EventEngine::schedule: fire_at precedes current clock");
    const std::uint64_t seq = ++next_seq_;
    queue_.push(Entry{fire_at, seq, target, kind, std::move(action)});
    pending_.insert(seq);
    return EventHandle{seq};
  }

  // True if the event was still pending; false once fired or cancelled.
  bool cancel(EventHandle h) {
    if (!h.valid()) return false;
    return pending_.erase(h.seq) > 0;
  }

  SimTime now() const { return now_; }

  // Dispatches everything with fire_at <= end in (fire_at, seq) order, then
  // parks the clock at end. The clock never exceeds the requested horizon.
  SimTime run_until(SimTime end) {
    while (!queue_.empty() && queue_.top().fire_at <= end) {
      Entry e = queue_.top();
      queue_.pop();
      if (pending_.erase(e.seq) == 0) continue;  // cancelled
      now_ = e.fire_at;
      ++dispatched_;
      e.action();
    }
    if (end > now_) now_ = end;
    return now_;
  }

  std::uint64_t dispatched() const { return dispatched_; }
  std::size_t pending() const { return pending_.size(); }

 private:
  struct Entry {
    SimTime fire_at;
    std::uint64_t seq;
    NodeId target;
    EventKind kind;
    Action action;
  };
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.fire_at != b.fire_at) return a.fire_at > b.fire_at;
      return a.seq > b.seq;
    }
  };

  std::priority_queue<Entry, std::vector<Entry>, Later> queue_;
  std::unordered_set<std::uint64_t> pending_;
  SimTime now_ = 0.0;
  std::uint64_t next_seq_ = 0;
  std::uint64_t dispatched_ = 0;
};

}  // namespace urban

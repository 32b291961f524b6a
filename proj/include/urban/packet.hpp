#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "urban/types.hpp"

namespace urban {

enum class PacketKind : std::uint8_t { Hello, HelloReply, Rreq, Rrep, Rerr, Data };

const char* to_string(PacketKind k);

inline bool is_control(PacketKind k) { return k != PacketKind::Data; }

// Per-flow thresholds paths and admissions are checked against.
struct QosRequirement {
  double max_delay = 1.0;   // seconds end-to-end
  int max_hops = 16;
  double min_bw = 0.0;      // bits/s

  void validate() const {
    if (!(max_delay > 0.0)) throw std::invalid_argument("qos: max_delay must be positive");
    if (!(max_hops > 0)) throw std::invalid_argument("qos: max_hops must be positive");
    if (min_bw < 0.0) throw std::invalid_argument("qos: min_bw must be >= 0");
  }
};

// Flow metadata carried inside discovery/reply packets so every node on the
// path can admit, reserve and size the flow's data packets.
struct FlowContext {
  FlowId flow_id = 0;
  NodeId src = 0;
  NodeId dst = 0;
  double rate_bps = 0.0;
  int packet_size_bits = 0;
  QosRequirement qos;
  SimTime stop_at = 0.0;
};

struct RreqId {
  NodeId origin = 0;
  std::uint32_t seq = 0;
  auto operator<=>(const RreqId&) const = default;
};

struct RreqBody {
  RreqId id;
  FlowContext flow;               // for repairs, flow.qos holds the detour budget
  std::vector<NodeId> traversed;  // hop list, origin first; no duplicates
  double acc_delay = 0.0;         // accumulated per-hop forwarding estimates
  double bottleneck_bw = 0.0;     // min residual bandwidth along traversed
  bool repair = false;
  NodeId repair_target = -1;
  int repair_path_id = -1;

  int acc_hops() const { return static_cast<int>(traversed.size()); }
};

struct RrepBody {
  RreqId id;
  FlowContext flow;
  int path_id = 0;
  std::vector<NodeId> path;  // full node list this reply installs, source..dst
  double est_delay = 0.0;
  double bottleneck_bw = 0.0;
  bool repair = false;
  std::vector<NodeId> repair_suffix;  // target..dst remainder for splices
};

struct RerrBody {
  FlowId flow_id = 0;
  int path_id = 0;
  NodeId flow_dst = 0;
  NodeId broken_next_hop = 0;
};

struct DataBody {
  FlowId flow_id = 0;
  int path_id = 0;
  int size_bits = 0;
  SimTime created_at = 0.0;
  double deadline = 0.0;
  int level = 0;            // current priority level, 0 = highest
  int remaining_hops = 0;
  int hops_taken = 0;
};

struct Packet {
  PacketKind kind = PacketKind::Hello;
  std::uint64_t id = 0;  // globally unique per run
  NodeId src = 0;
  NodeId dst = kBroadcast;
  int ttl = 1;
  std::variant<std::monostate, RreqBody, RrepBody, RerrBody, DataBody> body;

  const RreqBody& rreq() const { return std::get<RreqBody>(body); }
  RreqBody& rreq() { return std::get<RreqBody>(body); }
  const RrepBody& rrep() const { return std::get<RrepBody>(body); }
  RrepBody& rrep() { return std::get<RrepBody>(body); }
  const RerrBody& rerr() const { return std::get<RerrBody>(body); }
  const DataBody& data() const { return std::get<DataBody>(body); }
  DataBody& data() { return std::get<DataBody>(body); }
};

// Logical payload size before the radio's frame overhead.
int wire_bits(const Packet& p);

// Flow a packet belongs to, -1 for flowless control traffic.
FlowId flow_of(const Packet& p);

}  // namespace urban

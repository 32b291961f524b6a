#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "urban/types.hpp"

namespace urban {

enum class EnergyState : int { Sleep = 0, Transmit = 1, Receive = 2, Roaming = 3 };

const char* to_string(EnergyState s);

enum class EnergyTrigger {
  TxBegin,
  TxEnd,
  RxBegin,
  RxEnd,
  MoveStart,
  MoveStop,
  IdleTimeout,
};

struct PowerProfile {
  double p_sleep = 0.01;
  double p_receive = 1.0;
  double p_transmit = 1.4;
  double p_roaming = 1.0;
  double idle_timeout = 0.5;

  // Sleep must be the strict minimum; transmit must exceed receive.
  void validate() const {
    if (!(p_sleep >= 0.0 && p_receive >= 0.0 && p_transmit >= 0.0 && p_roaming >= 0.0))
      throw std::invalid_argument("power profile: draws must be non-negative");
    if (!(p_sleep < p_receive && p_receive < p_transmit))
      throw std::invalid_argument("power profile: requires p_sleep < p_receive < p_transmit");
    if (!(p_sleep < p_roaming))
      throw std::invalid_argument("power profile: requires p_sleep < p_roaming");
    if (!(idle_timeout > 0.0))
      throw std::invalid_argument("power profile: idle_timeout must be positive");
  }
};

struct RangeConfig {
  double p_elec = 0.5;  // fixed electronics draw, watts
  double k = 1e-4;      // watts per meter^alpha
  double alpha = 2.0;   // path-loss exponent
};

// Transmit draw needed to reach distance r.
double tx_power_for_range(const RangeConfig& cfg, double r);

// Battery, state machine and per-state accounting for one node.
//
// Sleep is the initial state. Transmit/Receive pre-empt a base state (Sleep or
// Roaming) and return to it when the last session ends; while the node is
// moving the base is always Roaming. An idle timeout moves a stationary,
// quiescent node back to Sleep. Energy is accrued for the outgoing state
// before every switch, and reaching an empty battery marks the node dead at
// the exact depletion instant.
class EnergyAccount {
 public:
  EnergyAccount() = default;
  EnergyAccount(double battery_joules, const PowerProfile& profile);

  EnergyState state() const { return state_; }
  bool dead() const { return dead_; }
  bool moving() const { return moving_; }
  bool idle() const { return tx_depth_ == 0 && rx_depth_ == 0; }
  double battery() const { return battery_; }
  double initial_battery() const { return initial_battery_; }
  std::optional<SimTime> death_time() const { return death_time_; }
  SimTime last_activity_end() const { return last_activity_end_; }

  double occupancy(EnergyState s) const { return occupancy_[index(s)]; }
  double consumed(EnergyState s) const { return consumed_[index(s)]; }
  double consumed_total() const;
  double occupancy_total() const;
  // Battery removed by an injected fault rather than state draw.
  double fault_drained() const { return fault_drained_; }

  double power(EnergyState s) const;

  // Charges the outgoing interval [last, now] at the current state's draw.
  // Returns the joules consumed; a battery that empties mid-interval pins the
  // death time at the exact depletion instant and truncates occupancy there.
  double accrue(SimTime now);

  // Accrues, then applies one trigger of the state machine. tx_draw overrides
  // the transmit draw for the session being opened (per-packet range
  // adjustment). Triggers on a dead node are ignored.
  EnergyState apply(EnergyTrigger t, SimTime now, std::optional<double> tx_draw = std::nullopt);

  // Test fault: accrues, then drains whatever battery remains.
  void force_depleted(SimTime now);

  // now + battery/power(state); nullopt when dead or the draw is zero.
  std::optional<SimTime> projected_death(SimTime now) const;

 private:
  static int index(EnergyState s) { return static_cast<int>(s); }
  void recompute_state();

  PowerProfile profile_;
  double initial_battery_ = 0.0;
  double battery_ = 0.0;
  double fault_drained_ = 0.0;
  EnergyState state_ = EnergyState::Sleep;
  EnergyState base_ = EnergyState::Sleep;  // state tx/rx pre-empted
  bool moving_ = false;
  bool dead_ = false;
  int tx_depth_ = 0;
  int rx_depth_ = 0;
  std::optional<double> tx_draw_;
  SimTime last_accrual_ = 0.0;
  SimTime last_activity_end_ = 0.0;
  std::optional<SimTime> death_time_;
  std::array<double, 4> occupancy_{};
  std::array<double, 4> consumed_{};
};

}  // namespace urban

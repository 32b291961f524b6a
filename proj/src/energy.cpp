#include "urban/energy.hpp"

#include <cmath>

namespace urban {

const char* to_string(EnergyState s) {
  switch (s) {
    case EnergyState::Sleep: return "sleep";
    case EnergyState::Transmit: return "transmit";
    case EnergyState::Receive: return "receive";
    case EnergyState::Roaming: return "roaming";
  }
  return "?";
}

double tx_power_for_range(const RangeConfig& cfg, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("tx_power_for_range: r must be positive");
  return cfg.p_elec + cfg.k * std::pow(r, cfg.alpha);
}

EnergyAccount::EnergyAccount(double battery_joules, const PowerProfile& profile)
    : profile_(profile), initial_battery_(battery_joules), battery_(battery_joules) {
  profile_.validate();
  if (battery_joules <= 0.0)
    throw std::invalid_argument("EnergyAccount: battery must be positive");
}

double EnergyAccount::consumed_total() const {
  double t = 0.0;
  for (double c : consumed_) t += c;
  return t;
}

double EnergyAccount::occupancy_total() const {
  double t = 0.0;
  for (double o : occupancy_) t += o;
  return t;
}

double EnergyAccount::power(EnergyState s) const {
  switch (s) {
    case EnergyState::Sleep: return profile_.p_sleep;
    case EnergyState::Transmit: return tx_draw_.value_or(profile_.p_transmit);
    case EnergyState::Receive: return profile_.p_receive;
    case EnergyState::Roaming: return profile_.p_roaming;
  }
  return 0.0;
}

double EnergyAccount::accrue(SimTime now) {
  if (dead_ || now <= last_accrual_) return 0.0;
  const double dt = now - last_accrual_;
  const double p = power(state_);
  const double want = p * dt;
  const int i = index(state_);
  double spent;
  if (p > 0.0 && want >= battery_) {
    // Battery empties partway through: truncate occupancy at the death
    // instant so conservation stays exact.
    const double lived = battery_ / p;
    occupancy_[i] += lived;
    spent = battery_;
    consumed_[i] += spent;
    battery_ = 0.0;
    dead_ = true;
    death_time_ = last_accrual_ + lived;
  } else {
    occupancy_[i] += dt;
    spent = want;
    consumed_[i] += spent;
    battery_ -= spent;
  }
  last_accrual_ = now;
  return spent;
}

void EnergyAccount::recompute_state() {
  if (tx_depth_ > 0)
    state_ = EnergyState::Transmit;
  else if (rx_depth_ > 0)
    state_ = EnergyState::Receive;
  else
    state_ = moving_ ? EnergyState::Roaming : base_;
}

EnergyState EnergyAccount::apply(EnergyTrigger t, SimTime now, std::optional<double> tx_draw) {
  accrue(now);
  if (dead_) return state_;

  switch (t) {
    case EnergyTrigger::TxBegin:
      if (idle()) base_ = moving_ ? EnergyState::Roaming : state_;
      ++tx_depth_;
      if (tx_draw) tx_draw_ = tx_draw_ ? std::max(*tx_draw_, *tx_draw) : *tx_draw;
      break;
    case EnergyTrigger::TxEnd:
      if (tx_depth_ > 0 && --tx_depth_ == 0) tx_draw_.reset();
      last_activity_end_ = now;
      break;
    case EnergyTrigger::RxBegin:
      if (idle()) base_ = moving_ ? EnergyState::Roaming : state_;
      ++rx_depth_;
      break;
    case EnergyTrigger::RxEnd:
      if (rx_depth_ > 0) --rx_depth_;
      last_activity_end_ = now;
      break;
    case EnergyTrigger::MoveStart:
      moving_ = true;
      base_ = EnergyState::Roaming;
      break;
    case EnergyTrigger::MoveStop:
      moving_ = false;
      // Base stays Roaming until the idle timeout sends the node to Sleep.
      last_activity_end_ = now;
      break;
    case EnergyTrigger::IdleTimeout:
      if (idle() && !moving_) base_ = EnergyState::Sleep;
      break;
  }
  recompute_state();
  return state_;
}

void EnergyAccount::force_depleted(SimTime now) {
  accrue(now);
  if (dead_) return;
  fault_drained_ = battery_;
  battery_ = 0.0;
  dead_ = true;
  death_time_ = now;
  last_accrual_ = now;
}

std::optional<SimTime> EnergyAccount::projected_death(SimTime now) const {
  if (dead_) return std::nullopt;
  const double p = power(state_);
  if (p <= 0.0) return std::nullopt;
  return now + battery_ / p;
}

}  // namespace urban

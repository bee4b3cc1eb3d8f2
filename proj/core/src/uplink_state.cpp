// SPDX-License-Identifier: Apache-2.0
#include "hetnet/uplink_state.hpp"

#include "hetnet/units.hpp"

namespace hetnet {

double control_loss_db(const UplinkNetwork& net, std::size_t cell, std::size_t user) {
  return net.power.pl_basis == PlBasis::kCoupling ? -net.gains.gain_db(cell, user)
                                                  : net.gains.path_loss_db(cell, user);
}

UserPower power_toward(const UplinkNetwork& net, std::size_t cell, std::size_t user) {
  return open_loop_power(net.power, control_loss_db(net, cell, user), net.sched.rbs_per_user);
}

UplinkState UplinkState::build(const UplinkNetwork& net, std::vector<std::size_t> serving) {
  UplinkState st;
  st.alloc = allocate(serving, net.cells(), net.sched, net.preferred_block);
  st.power.reserve(serving.size());
  st.per_rb_mw.reserve(serving.size());
  for (std::size_t u = 0; u < serving.size(); ++u) {
    const UserPower up = power_toward(net, serving[u], u);
    st.power.push_back(up);
    st.per_rb_mw.push_back(dbm_to_mw(up.per_rb_dbm));
  }
  st.serving = std::move(serving);
  return st;
}

}  // namespace hetnet

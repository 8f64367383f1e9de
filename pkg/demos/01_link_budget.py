"""Link budgets for the default 5 GHz indoor radio.

Walks the propagation model from path loss to per-action Shannon capacity
and shows where the -62 dBm carrier-sense threshold lands: at 5 m every
power level is heard, at 10 m only the 20 dBm one.
"""

from wlanopt import radio
from wlanopt.scenario import DEFAULT_ACTIONS, RadioParams

rp = RadioParams()

print("path loss (free space + 0.44 dB/m):")
for d in (1, 2, 5, 10, 20, 50):
    print(f"  d = {d:>4} m   L = {radio.path_loss_db(d, rp):7.2f} dB")

print("\nreceived power vs the CCA threshold (-62 dBm), AP to AP:")
for tx in (1.0, 20.0):
    for d in (5.0, 10.0):
        rx = radio.rx_power_dbm(tx, d, rp)
        heard = "sensed" if rx >= rp.cca_dbm else "hidden"
        print(f"  tx = {tx:4.0f} dBm over {d:4.1f} m -> {rx:7.2f} dBm  ({heard})")

print("\nstandalone capacity per action at d_STA = 5 m:")
for k, action in enumerate(DEFAULT_ACTIONS, start=1):
    d_sta = 5.0
    signal = radio.rx_power_dbm(action.tx_power_dbm, d_sta, rp)
    noise = radio.noise_power_dbm(len(action.range), rp)
    sinr = radio.sinr_linear(radio.LinkBudget(signal, noise, 0.0))
    cap = radio.shannon_capacity_bps(action.range.width_hz(rp.base_bandwidth_hz), sinr)
    width = int(action.range.width_hz(rp.base_bandwidth_hz) / 1e6)
    print(
        f"  action {k}: {action.tx_power_dbm:4.0f} dBm on {str(action.range.channels):>18}"
        f" ({width} MHz) -> {cap / 1e6:8.1f} Mbps"
    )

# Copyright 2026 The pitnav Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Reference values for the unit tests, computed independently of the C++ code.

Run: python3 tests/oracles/derived_values.py
The printed constants are frozen into tests/unit/*.cpp.
"""

import math

import numpy as np

C = 299792458.0


def path_loss(d, eta, f=2.4e9):
    lam = C / f
    return 20 * math.log10(4 * math.pi / lam) + 10 * eta * math.log10(max(d, 1.0))


def received_dbm(d, eta, wall=0.0, shadow=0.0, pt=-10.0, gt=2.0, gr=2.0):
    return pt + gt + gr - path_loss(d, eta) - wall + shadow


def noise_dbm(bw=1e6, nf=10.0):
    return -174 + 10 * math.log10(bw) + nf


def ranging_var(snr, beta):
    return C**2 / (8 * math.pi**2 * snr * beta**2)


def fim(target, agent, var_range, gps_cov):
    diff = np.asarray(target, float) - np.asarray(agent, float)
    u = diff / np.linalg.norm(diff)
    sigma2 = var_range + u @ gps_cov @ u
    return np.outer(u, u) / sigma2


def peb(j):
    return math.sqrt(np.trace(np.linalg.inv(j)))


def reliability(lam):
    lam = np.asarray(lam, float)
    total = lam.sum()
    mean = lam[0] / total
    var = lam[0] * (total - lam[0]) / (total**2 * (total + 1))
    return mean**2 / var


def softmax(w, kappa):
    z = np.exp((np.asarray(w, float) - max(w)) / kappa)
    return z / z.sum()


def value_iteration(width, height, walls, goal, gamma, reward=1.0):
    """Optimal state values with a terminal reward on entering `goal`."""
    moves = [(0, 1), (0, -1), (-1, 0), (1, 0), (0, 0)]
    v = np.zeros((width, height))
    for _ in range(10000):
        nv = np.zeros_like(v)
        for x in range(width):
            for y in range(height):
                if (x, y) in walls or (x, y) == goal:
                    continue
                best = -1e300
                for dx, dy in moves:
                    nx, ny = x + dx, y + dy
                    if not (0 <= nx < width and 0 <= ny < height) or (nx, ny) in walls:
                        nx, ny = x, y
                    if (nx, ny) == goal:
                        q = reward
                    else:
                        q = gamma * v[nx, ny]
                    best = max(best, q)
                nv[x, y] = best
        if np.max(np.abs(nv - v)) < 1e-15:
            break
        v = nv
    return v


def main():
    out = {}
    out["path_loss_d1_los"] = path_loss(1.0, 2.0)
    out["path_loss_d10_los"] = path_loss(10.0, 2.0)
    out["path_loss_d10_nlos"] = path_loss(10.0, 3.5)
    out["p_r_max"] = received_dbm(1.0, 2.0)
    out["p_r_max_wall"] = received_dbm(1.0, 2.0, wall=25.0)
    out["rssi_minus25"] = 10 ** (-25 / 10)
    out["noise_dbm"] = noise_dbm()
    out["snr_at_minus74"] = 10 ** ((-74 - noise_dbm()) / 10)
    beta = 1e6 / math.sqrt(12)
    out["var_range_snr1e3"] = ranging_var(1e3, beta)
    j = fim((1.0, 1.0), (0.0, 0.0), 2.0, np.zeros((2, 2)))
    out["fim_diag_xx"] = j[0, 0]
    out["fim_diag_xy"] = j[0, 1]
    out["peb_diag41"] = peb(np.diag([4.0, 1.0]))
    out["peb_identity"] = peb(np.eye(2))

    # End to end: two LOS agents around a target at (30.5, 12.5) m, at cell
    # offsets (-2, -1) and (1, 2), perfect GPS.
    target = np.array([30.5, 12.5])
    js = np.zeros((2, 2))
    for off in [(-2, -1), (1, 2)]:
        agent = target + np.array(off, float)
        d = np.linalg.norm(agent - target)
        pr = received_dbm(d, 2.0)
        snr = 10 ** ((pr - noise_dbm()) / 10)
        vr = ranging_var(snr, beta)
        js += fim(target, agent, vr, np.zeros((2, 2)))
    out["e2e_peb_two_agents"] = peb(js)
    # Same, one of them GPS-denied.
    js = np.zeros((2, 2))
    for off, cov in [((-2, -1), np.zeros((2, 2))), ((1, 2), 100 * np.eye(2))]:
        agent = target + np.array(off, float)
        d = np.linalg.norm(agent - target)
        pr = received_dbm(d, 2.0)
        snr = 10 ** ((pr - noise_dbm()) / 10)
        js += fim(target, agent, ranging_var(snr, beta), cov)
    out["e2e_peb_one_denied"] = peb(js)
    # Single NLOS agent at 10 m through 25 dB of walls.
    pr = received_dbm(10.0, 3.5, wall=25.0)
    out["nlos10_p_r"] = pr
    out["nlos10_var_range"] = ranging_var(10 ** ((pr - noise_dbm()) / 10), beta)

    out["motivation_mid"] = 0.4 * 0.5 + 0.4 * 0.25
    out["effective_reward"] = 1 - 0.6 * 0.5
    out["td_error"] = 0.0 + 0.98 * 2 - 1
    out["kappa_ep500"] = max(0.03, 1.2 * 0.996**500)
    out["alpha_ep100"] = max(0.09, 0.55 * 0.9985**100)
    out["softmax_sharp_p0"] = softmax([1, 0, 0, 0, 0], 0.03)[0]
    p = softmax([1.0, 2.0, 0.5, 0.0, -1.0], 0.5)
    for i, v in enumerate(p):
        out[f"softmax_mixed_p{i}"] = v
    # kappa0 = 0.6, M = 0.5 -> kappa = 0.4
    p = softmax([1.0, 2.0, 0.5, 0.0, -1.0], 0.6 / 1.5)
    for i, v in enumerate(p):
        out[f"softmax_motivated_p{i}"] = v
    out["dirichlet_mean_101"] = 101 / 103
    out["chi_111"] = reliability([1, 1, 1])
    out["chi_101_1_1"] = reliability([101, 1, 1])
    out["chi_7_3_2"] = reliability([7, 3, 2])
    out["p_mb_5252_2"] = reliability([101, 1, 1]) / (
        reliability([101, 1, 1]) + reliability([1, 1, 1]) + 1e-6)
    out["spe_29_of_58"] = 29 / 58

    for k, v in out.items():
        print(f"{k} = {v!r}")

    # 4x4 gridworld used by the Q-learning oracle: wall at (1,1) and (2,2),
    # goal at (3,3), gamma 0.9.
    v = value_iteration(4, 4, {(1, 1), (2, 2)}, (3, 3), 0.9)
    print("value_iteration_4x4 (row y=3 first, x = 0..3):")
    for y in range(3, -1, -1):
        print("  " + ", ".join(repr(float(v[x, y])) for x in range(4)))

    # Three-state chain s0 -> s1 -> s2 (terminal, reward 1), gamma 0.98.
    print("chain q_mb(s0,right) =", repr(0.98 * 1.0), " q_mb(s1,right) =", repr(1.0))


if __name__ == "__main__":
    main()

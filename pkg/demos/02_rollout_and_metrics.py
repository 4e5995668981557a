"""Roll out trivial policies and read the latent evaluation metrics.

The environment exposes distance, normalized progress, and a latched
success flag through the info channel; episodic return follows the shaped
reward (first-time forward progress minus jump, time, and idle penalties).

The idle policy's return has a closed form at default settings:
500 steps times -(0.1 + 5.0) = -2550.
"""

import numpy as np

from axisplat import RngKey, load_config, named_policy, rollout

config = load_config("")
key = RngKey.from_seed(3)

for name in ("idle", "right", "random"):
    policy = named_policy(name, key.derive(name))
    episodes = rollout(config, policy, key.derive(name).derive("episodes"), n_episodes=4)
    dist = np.mean([e.distance for e in episodes])
    ret = np.mean([e.episodic_return for e in episodes])
    sr = np.mean([float(e.success) for e in episodes])
    print(f"{name:<8} distance={dist:8.2f}  return={ret:10.2f}  success={sr:.2f}")

print("\nidle return is exactly -2550: no progress reward, no jump penalty,")
print("every one of the 500 steps pays the time cost 0.1 and idle cost 5.0.")

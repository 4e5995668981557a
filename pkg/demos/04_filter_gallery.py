"""Sweep each photometric filter over its range on a fixed scene.

Writes one PNG per (filter, value). The default pipeline is a bit-exact
identity, so the "identity" image equals the raw render byte for byte.
"""

from pathlib import Path

import numpy as np

from axisplat import RngKey, load_config, override, reset
from axisplat.config import FilterConfig
from axisplat.postfx import apply_filters, apply_point_lights, preset_bundle
from axisplat.renderer import save_png

OUT = Path(__file__).parent / "output" / "04_filters"
OUT.mkdir(parents=True, exist_ok=True)

scene_cfg = override(load_config(""), background={"mode": "image"})
frame, _ = reset(scene_cfg, RngKey.from_seed(5))
key = RngKey.from_seed(6)

SWEEPS = {
    "brightness": [-1.0, -0.5, 0.5, 1.0],
    "contrast": [0.5, 2.0, 128.0],
    "gamma": [0.5, 2.0],
    "saturation": [0.0, 2.0],
    "hue_shift": [-90.0, 90.0, 180.0],
    "color_temp": [-1.0, 1.0],
    "color_jitter_std": [1.0, 2.0],
    "gaussian_noise_std": [30.0, 100.0],
    "poisson_noise_scale": [0.2, 1.0],
    "blur_sigma": [1.0, 3.0],
    "sharpen_amount": [1.0, 3.0],
    "pixelate_factor": [2, 4],
    "vignette_strength": [0.5, 10.0],
    "radial_light_strength": [0.5, 1.0],
}

identity = apply_filters(frame, FilterConfig(), key)
assert np.array_equal(identity, frame)
save_png(identity, str(OUT / "identity.png"))

for field, values in SWEEPS.items():
    for value in values:
        out = apply_filters(frame, FilterConfig(**{field: value}), key)
        save_png(out, str(OUT / f"{field}_{value}.png"))
    print(f"swept {field}: {values}")

for preset in ("vintage", "retro", "cyberpunk", "horror", "noir"):
    bundle = preset_bundle(preset)
    out = apply_filters(frame, FilterConfig(pop_filter_list=(preset,)), key)
    save_png(out, str(OUT / f"preset_{preset}.png"))
    print(f"preset {preset:<10} saturation={bundle.saturation} contrast={bundle.contrast}")

from axisplat.config import EffectsConfig

lights = EffectsConfig(
    point_light_enabled=True,
    point_light_intensity=2.0,
    point_light_radius=0.3,
    point_light_falloff=2.0,
    point_light_count=3,
)
centers = np.array([[30.0, 30.0], [64.0, 90.0], [100.0, 40.0]])
colors = np.array([[255, 96, 16], [0, 255, 255], [255, 215, 0]])
save_png(apply_point_lights(frame, lights, centers, colors), str(OUT / "point_lights.png"))
print("point lights -> point_lights.png")

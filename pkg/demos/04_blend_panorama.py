#!/usr/bin/env python3
"""Seam blending: the distance-weighted linear fusion across overlaps.

Shows the blend weight ramp, composites two constant strips to expose
the transition band, then accumulates five textured strips into a
panorama with its coverage map.
"""

from pathlib import Path

import numpy as np

from pipescope import BlendSpec, accumulate_panorama, blend_weight
from pipescope.imgio import save_png
from pipescope.synth import render_texture
from pipescope.unwrap import UnwrappedFrame

OUT = Path(__file__).parent / "out" / "compose"


def as_strip(pixels: np.ndarray, index: int) -> UnwrappedFrame:
    return UnwrappedFrame(source_index=index, pixels=pixels,
                          validity=np.ones(pixels.shape[:2], bool))


def main():
    spec = BlendSpec(band_width=20)
    print("blend weight of the earlier strip vs distance from the seam:")
    for d in (-15, -10, -5, 0, 5, 10, 15):
        print(f"  d={d:+3d} px -> alpha={float(blend_weight(d, spec)):.2f}")

    dark = np.full((250, 500, 3), 70, np.uint8)
    light = np.full((250, 500, 3), 190, np.uint8)
    pair = accumulate_panorama(
        [as_strip(dark, 1), as_strip(light, 2)],
        [(0.0, 0.0), (0.0, 175.0)], spec)
    save_png(OUT / "constant_pair.png", pair.pixels)
    print(f"\ntwo constant strips, 75 px overlap -> {pair.width}x{pair.height}"
          f" canvas, 20 px ramp at the seam ({OUT / 'constant_pair.png'})")

    stack = render_texture(550, 500, seed=4)
    strips = [as_strip(stack[75 * k:75 * k + 250].copy(), k + 1)
              for k in range(5)]
    offsets = [(0.0, 75.0 * k) for k in range(5)]
    panorama = accumulate_panorama(strips, offsets, spec)
    save_png(OUT / "panorama.png", panorama.pixels)
    save_png(OUT / "coverage.png",
             np.minimum(panorama.coverage * 64, 255).astype(np.uint8))
    print(f"five textured strips at 75 px advance -> "
          f"{panorama.width}x{panorama.height} panorama")
    print(f"coverage map (64 = one strip, 128 = blended overlap): "
          f"{OUT / 'coverage.png'}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Keyframe selection: fixed-interval sampling and batch saving.

Plans keyframes for a few interval settings, then renders a short
synthetic sequence and saves its keyframes as PNGs.
"""

from pathlib import Path

from pipescope import open_source, plan_keyframes, save_keyframes
from pipescope.synth import render_cylinder_sequence

OUT = Path(__file__).parent / "out" / "keyframes"


def main():
    # A 20 s video at 30 fps has 600 frames; interval 10 keeps every 10th.
    for n_total, interval in [(600, 10), (600, 1), (600, 20), (7, 3)]:
        plan = plan_keyframes(n_total, interval)
        head = ", ".join(str(i) for i in plan.indices[:5])
        print(f"n_total={n_total:4d} interval={interval:3d} -> "
              f"m={plan.m:4d}  indices: {head}{' ...' if plan.m > 5 else ''}")

    print("\nrendering a 40-frame synthetic sequence ...")
    fixture = render_cylinder_sequence(
        OUT / "frames", n_frames=40, frame_w=480, frame_h=480,
        advance_per_frame=4.0, strip_w=360, strip_h=160,
    )
    src = open_source(fixture.directory)
    plan = plan_keyframes(src.n_total, 10)
    written = save_keyframes(src, plan, OUT / "selected")
    print(f"saved {written} keyframes to {OUT / 'selected'}")
    print("filenames carry the source index (kf_000010.png, ...) so any")
    print("defect seen in the panorama can be traced back to the video.")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Start the local service against synthetic demo footage.

Renders a short fixture sequence if needed, then serves the HTTP API
(and the browser UI, when frontend/dist exists) on port 8787.

Try, while it runs:
    curl http://127.0.0.1:8787/api/source
    curl http://127.0.0.1:8787/api/source/frames/1 -o frame1.png
    curl -X POST http://127.0.0.1:8787/api/jobs \
         -H 'content-type: application/json' \
         -d '{"interval": 10, "geometry": {"cx": 360, "cy": 360, \
              "r_min": 100, "r_max": 330}, \
              "spec": {"width": 500, "height": 250}}'
    curl http://127.0.0.1:8787/api/jobs/job-0001
"""

from pathlib import Path

from pipescope import AnnulusGeometry, PipelineConfig, UnwrapSpec
from pipescope.service import serve
from pipescope.synth import render_cylinder_sequence

OUT = Path(__file__).parent / "out" / "service"


def main():
    frames_dir = OUT / "frames"
    if not frames_dir.is_dir():
        print("rendering a 60-frame fixture ...")
        render_cylinder_sequence(frames_dir, n_frames=60)

    config = PipelineConfig(
        source=str(frames_dir),
        geometry=AnnulusGeometry(cx=360.0, cy=360.0, r_min=100.0, r_max=330.0),
        unwrap=UnwrapSpec(w=500, h=250),
        output_dir=str(OUT / "jobs"),
    )
    ui_dir = Path(__file__).resolve().parents[1] / "frontend" / "dist"
    serve(config, port=8787, ui_dir=ui_dir if ui_dir.is_dir() else None)


if __name__ == "__main__":
    main()

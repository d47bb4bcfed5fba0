"""Regenerate the cross-component container fixtures.

The files checked in here are parsed by both the Python package's tests and
the learned-detector package's tests, pinning the byte-level interchange
format between them.  Run from the repository root:

    python fixtures/make_fixtures.py
"""
from pathlib import Path

import numpy as np

from raddet import cubeio
from raddet.dsp import PipelineConfig, process_frame
from raddet.grid import GridSpec, OccupancyGrid, PointCloud, crop_fov, voxelize
from raddet.sim import Scene, Scatterer, sample_lidar, scaled_waveform, simulate_adc, small_geometry

HERE = Path(__file__).resolve().parent


def main() -> None:
    waveform = scaled_waveform(n_tx=4, n_rx=8, n_chirps=16, n_adc_samples=32)
    geometry = small_geometry(n_rx=8)
    scene = Scene(
        (Scatterer((1.0, 12.0, 0.4), (0.0, -2.0, 0.0), rcs=25.0, extent=(0.4, 0.4, 0.3)),),
        noise_power=5.0,
        lidar_density=200.0,
    )
    frame = simulate_adc(scene, waveform, geometry, seed=77)
    cube = process_frame(frame, PipelineConfig(r_fft=32, a_fft=16, e_fft=16))
    cubeio.write_artifact(cube, HERE / "tiny_cube.rcb")

    cloud = crop_fov(sample_lidar(scene, seed=78))
    cubeio.write_artifact(cloud, HERE / "tiny_cloud.rcb")

    grid = voxelize(cloud, GridSpec.from_radar_cube(cube))
    cubeio.write_artifact(grid, HERE / "tiny_grid.rcb")

    print("cube dims:", cube.dims, "elevation bins:", cube.n_elevation)
    print("cloud points:", len(cloud), "grid occupied:", grid.occupied_count)


if __name__ == "__main__":
    main()

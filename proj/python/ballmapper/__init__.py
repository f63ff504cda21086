"""Ball Mapper graphs of point clouds."""

from ._core import (
    ArgumentError,
    BallCover,
    BallMapperError,
    DataError,
    Graph,
    IoError,
    PointCloud,
    ball_mapper,
    base_draws,
    color_by_distance,
    color_by_values,
    correlation_grid,
    gen_correlated,
    gen_normal_cloud,
    gen_outcome,
    greedy_net,
    load_csv,
    rolling_moments,
    run_cli,
)

__all__ = [
    "ArgumentError",
    "BallCover",
    "BallMapperError",
    "DataError",
    "Graph",
    "IoError",
    "PointCloud",
    "ball_mapper",
    "base_draws",
    "color_by_distance",
    "color_by_values",
    "correlation_grid",
    "gen_correlated",
    "gen_normal_cloud",
    "gen_outcome",
    "greedy_net",
    "load_csv",
    "rolling_moments",
    "run_cli",
]

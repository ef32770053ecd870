"""Smartphone activity and energy-expenditure pipeline.

Three stages, each usable on its own or chained through the CLI:

1. ``signals`` / ``features`` / ``tree`` / ``crossval`` — classify physical
   activity (walk, run, sit, ...) from windowed IMU streams.
2. ``traces`` / ``pomdp`` — infer the daily activity (eat breakfast, work,
   ...) from per-minute (time, physical activity, speed) observations with
   a belief tracker over smoothed empirical models.
3. ``energy`` — translate per-minute daily activities into cumulative
   kilocalories via a MET table.

``simgen`` generates seeded synthetic days and sensor streams so the whole
chain can be exercised without real recordings.
"""

__version__ = "0.1.0"

from .errors import ConfigError, KinemetError, ParseError, SchemaError

__all__ = [
    "__version__",
    "KinemetError",
    "ConfigError",
    "ParseError",
    "SchemaError",
]

THEODORUS_START = 3
THEODORUS_STOP = 17
THEODORUS_STEP = 2

DEFAULT_SVG_SCALE = 40.0
SVG_MARGIN = 20.0
SVG_PRECISION = 3
POINT_RADIUS = 2.5

DEFAULT_ORACLE_LIMIT = 100000

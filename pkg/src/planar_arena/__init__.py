"""planar-arena: competitive construction of planar graphs.

Two game engines (edge drawing on n points, circle packing in the
plane), pluggable Builder/Spoiler strategies, exact desk-scale property
verifiers, a match runner with replayable transcripts, SVG rendering,
and an HTTP JSON service for interactive play.
"""

__version__ = "0.1.0"

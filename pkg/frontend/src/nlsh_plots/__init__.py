"""Figure rendering for the nlsh-lab experiment CSVs.

The package consumes only the documented CSV schemas; it never imports the
solver library. Each figure is described by a small JSON FigureSpec and
rendered deterministically to a single image file.
"""

__version__ = "0.1.0"

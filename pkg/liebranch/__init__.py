__all__ = ["rootsys", "weyl", "reps", "rules", "cli"]
__version__ = "0.1.0"

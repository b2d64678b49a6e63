__all__ = [
    "utils",
    "rootsys",
    "chevalley",
    "parabolic",
    "tensor",
    "omega",
    "reference",
    "report",
    "verify",
    "cli",
]

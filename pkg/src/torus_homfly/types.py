from enum import Enum


class Variable(Enum):
    T = "t"
    NU = "v"

    @classmethod
    def from_string(cls, name: str) -> "Variable":
        lowered = name.strip().lower()
        if lowered in ("nu", "v", "ν"):
            return cls.NU
        if lowered == "t":
            return cls.T
        valid = [var.value for var in cls]
        raise ValueError(f"variable must be one of {valid}, got {name}")


class OutputMode(Enum):
    TEXT = "TEXT"
    JSON = "JSON"

    @classmethod
    def from_string(cls, mode_str: str) -> "OutputMode":
        try:
            return cls[mode_str.upper()]
        except KeyError:
            valid_modes = [mode.name for mode in cls]
            raise ValueError(f"output mode must be one of {valid_modes}, got {mode_str}")

"""Number and duration formatting for reports.

Everything here is presentation only. JSON reports carry durations as exact
integer nanoseconds next to these display strings, so nothing downstream
needs to parse them back.
"""

from __future__ import annotations

import math

# Largest-first; a duration is shown in the largest unit where it is >= 1.
_TIME_UNITS: tuple[tuple[str, int], ...] = (
    ("y", 365 * 24 * 3600 * 1_000_000_000),
    ("mo", 30 * 24 * 3600 * 1_000_000_000),
    ("d", 24 * 3600 * 1_000_000_000),
    ("h", 3600 * 1_000_000_000),
    ("min", 60 * 1_000_000_000),
    ("s", 1_000_000_000),
    ("ms", 1_000_000),
    ("us", 1_000),
    ("ns", 1),
)


def format_sig(value: float, digits: int = 2) -> str:
    """Format to a number of significant digits, without trailing zeros.

    Positional notation for moderate magnitudes, scientific outside them.
    """
    if value == 0:
        return "0"
    if not math.isfinite(value):
        return str(value)
    exponent = math.floor(math.log10(abs(value)))
    rounded = round(value, digits - 1 - exponent)
    if rounded != 0:
        exponent = math.floor(math.log10(abs(rounded)))
    if exponent < -4 or exponent >= 7:
        return f"{value:.{digits - 1}e}"
    decimals = max(0, digits - 1 - exponent)
    text = f"{rounded:.{decimals}f}"
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def format_duration(nanoseconds: float, digits: int = 4) -> str:
    """Render a duration in the largest unit where the value reaches 1."""
    if nanoseconds == 0:
        return "0 ns"
    magnitude = abs(nanoseconds)
    for label, scale in _TIME_UNITS:
        if magnitude >= scale:
            return f"{format_sig(nanoseconds / scale, digits)} {label}"
    return f"{format_sig(nanoseconds, digits)} ns"


def format_qubit_count(count: int, digits: int = 2) -> str:
    """Large qubit counts read best in millions; small ones stay exact."""
    if count >= 100_000:
        return f"{format_sig(count / 1e6, digits)}M"
    return str(count)


def format_percent(fraction: float, digits: int = 2) -> str:
    return f"{format_sig(100 * fraction, digits)}%"

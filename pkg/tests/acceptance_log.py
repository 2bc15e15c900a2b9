"""Shared buffer for the per-criterion result lines (printed in the summary)."""

LINES: list[str] = []

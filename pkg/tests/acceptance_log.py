"""Shared store for per-criterion acceptance lines, printed in the terminal summary."""
LINES = []


def record(criterion, passed, detail):
    LINES.append(f"{'PASS' if passed else 'FAIL'}  criterion {criterion}: {detail}")

"""Shared store for acceptance verdicts so the terminal summary can list them."""

RESULTS: dict[int, tuple[bool, str]] = {}


def record(number: int, ok: bool, detail: str) -> None:
    RESULTS[number] = (ok, detail)
    print(line(number))


def line(number: int) -> str:
    ok, detail = RESULTS[number]
    return f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"

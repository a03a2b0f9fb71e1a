"""Collects one verdict line per acceptance criterion for the terminal summary."""
VERDICTS: list[str] = []


def verdict(number, title: str, problems: list[str], detail: str = "") -> None:
    status = "PASS" if not problems else "FAIL"
    line = f"criterion {number}: {status} - {title}" + (f" ({detail})" if detail else "")
    if problems:
        line += "; first problems: " + " | ".join(problems[:3])
    VERDICTS.append(line)
    print(line)
    assert not problems, line

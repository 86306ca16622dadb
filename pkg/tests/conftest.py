import random

import pytest

from freelie.liealg import QQ, LiePoly
from freelie.words import Alphabet, als_words

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record_criterion():
    """Register a pass/fail line for the acceptance summary."""

    def record(number: int, title: str, ok: bool, detail: str = "") -> None:
        status = "PASS" if ok else "FAIL"
        line = f"criterion {number:2d} {status}  {title}"
        if detail:
            line += f"  [{detail}]"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


XY = Alphabet(["x", "y"])
XZY = Alphabet(["x", "z", "y"])


def random_lie(rng: random.Random, alphabet: Alphabet, max_deg: int, homogeneous: bool,
               terms: int = 3, field=QQ) -> LiePoly:
    """A random nonzero monic element built from LS basis trees."""
    pool = als_words(alphabet, max_deg)
    while True:
        if homogeneous:
            n = rng.randint(2, max_deg)
            choices = [w for w in pool if len(w) == n]
        else:
            choices = pool
        picked = rng.sample(choices, min(terms, len(choices)))
        coeffs = {w: rng.choice([-2, -1, 1, 1, 2, 3]) for w in picked}
        p = LiePoly(coeffs, alphabet, field)
        if p:
            return p.monic()

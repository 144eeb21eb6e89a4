"""One test per acceptance criterion; the PASS/FAIL lines are echoed in the terminal summary."""
from collections import defaultdict

import pytest

from cablecalc.acceptance import CRITERIA, FULL_GRID
from cablecalc.grid import admissible_classes, base_pairs, cable_pairs

LINES: list[str] = []


@pytest.mark.parametrize("criterion", CRITERIA, ids=[c.key for c in CRITERIA])
def test_criterion(criterion):
    outcome, _, line = criterion.evaluate()
    LINES.append(line)
    print(line)
    assert outcome.passed, line


def test_full_grid_class_weights_match_direct_count():
    """Count admissible grid knots by dynamic programming over the last pair, with no classes."""
    cables = cable_pairs(FULL_GRID)
    ending = {(b.p, b.q): 1 for b in base_pairs(FULL_GRID)}
    total = sum(ending.values())
    for _ in range(FULL_GRID.depth_max):
        by_companion = defaultdict(int)
        for (p, q), count in ending.items():
            by_companion[p * q] += count
        ending = {
            (c.p, c.q): sum(n for comp, n in by_companion.items() if abs(c.p - comp * c.q) > 1)
            for c in cables
        }
        total += sum(ending.values())
    assert sum(weight for _, weight in admissible_classes(FULL_GRID)) == total == 6_073_524_372

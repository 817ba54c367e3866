"""Cross-validation of the fusion implementation against the oracle.

The oracle in oracle.py reconstructs every product from restriction bounds
and quantum-dimension budgets without ever calling ``fuse_orbifold``; the
frozen rank-1 table in golden_a1.py pins those certified values for good.
"""

import pytest

from permorb import enumerate_modules, fuse_orbifold
from permorb.render import format_label

from conftest import get_lattice
from golden_a1 import GOLDEN_A1
from oracle import oracle_table


def test_golden_table_is_complete():
    lat = get_lattice("a1")
    labels = enumerate_modules(lat)
    assert len(GOLDEN_A1) == len(labels) * (len(labels) + 1) // 2 == 45


def test_implementation_matches_golden_a1():
    lat = get_lattice("a1")
    labels = {format_label(m): m for m in enumerate_modules(lat)}
    for (a, b), expected in GOLDEN_A1.items():
        out = fuse_orbifold(lat, labels[a], labels[b])
        assert all(v == 1 for v in out.values())
        assert tuple(sorted(format_label(c) for c in out)) == tuple(sorted(expected)), (a, b)


def test_oracle_matches_golden_a1():
    lat = get_lattice("a1")
    table = oracle_table(lat)
    got = {
        tuple(sorted((format_label(a), format_label(b)))): tuple(
            sorted(format_label(c) for c in prod)
        )
        for (a, b), prod in table.items()
    }
    expected = {
        tuple(sorted(k)): tuple(sorted(v)) for k, v in GOLDEN_A1.items()
    }
    assert got == expected


@pytest.mark.parametrize(
    "name", ["a1", "a1sq", "a2", "scaled4", "scaled6", "odd7", "chain3", "d4", "e8"]
)
def test_oracle_certifies_implementation(name):
    lat = get_lattice(name)
    for (a, b), expected in oracle_table(lat).items():
        assert fuse_orbifold(lat, a, b) == expected, (format_label(a), format_label(b))

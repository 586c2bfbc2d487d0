import re

import numpy as np
import pytest

from cogscik import generate_synthetic_catalog, instantiate_catalog, make_rng
from cogscik.catalog import moves_from_vectors

PAPER_CENTROID = (-0.64693745, -0.44900883, -0.07025932, 0.42156327, 0.68451422)


def synthetic_catalog(n=374, seed=0):
    specs = generate_synthetic_catalog(n, make_rng(seed))
    return instantiate_catalog(specs, make_rng(seed + 1), seed=seed)


@pytest.fixture(scope="session")
def catalog374():
    return synthetic_catalog(374, seed=7)


@pytest.fixture
def toy_catalog():
    """Four moves on the warmth axis, used for hand-traced walks."""
    rows = [
        ("m1", "Appeal", (0.0, 0.0, 0.0, 0.0, 0.0)),
        ("m2", "Reject", (0.1, 0.0, 0.0, 0.0, 0.0)),
        ("m3", "Reject", (0.3, 0.0, 0.0, 0.0, 0.0)),
        ("m4", "Assault", (0.7, 0.0, 0.0, 0.0, 0.0)),
    ]
    return moves_from_vectors(rows)


def read_report(text):
    """Parse a cluster report back into (primary_type, k, centroid, [(name, type)])."""
    lines = text.split("\n")
    m = re.fullmatch(r"Cluster Primary Type: (.*)", lines[0])
    primary = m.group(1)
    k = int(re.fullmatch(r"\tCluster Size: (\d+)", lines[1]).group(1))
    cent = re.fullmatch(r"\tCentroid IO: \[(.*)\]", lines[2]).group(1)
    centroid = tuple(float(v) for v in cent.split(" "))
    assert lines[3] == ""
    members = []
    i = 4
    while i < len(lines) and lines[i].startswith("Move: "):
        name = lines[i][len("Move: "):]
        mtype = lines[i + 1][len("Move Type: "):]
        assert lines[i + 2] == ""
        members.append((name, mtype))
        i += 3
    return primary, k, centroid, members


def brute_topk(points, centroid, k, weights=None):
    """Full sort of all distances, ties by row index. Independent of the kernels."""
    w = np.ones(5) if weights is None else np.asarray(weights, float)
    d = [float(np.sqrt(np.sum(w * (np.asarray(p) - np.asarray(centroid)) ** 2))) for p in points]
    return sorted(range(len(points)), key=lambda i: (d[i], i))[:k], d


ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for name, ok, detail in ACCEPTANCE:
            terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
